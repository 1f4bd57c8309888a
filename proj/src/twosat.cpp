#include "rmis/twosat.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmis {

namespace {

// implication-graph node index: positive literal first so that unconstrained
// variables resolve to true
int node_of(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

} // namespace

TwoSatFormula::TwoSatFormula(int variable_count) : variable_count_(variable_count)
{
    if (variable_count < 0)
        throw std::invalid_argument("negative variable count");
}

void TwoSatFormula::add_clause(Literal a, Literal b)
{
    for (Literal l : {a, b})
        if (l.var < 0 || l.var >= variable_count_)
            throw std::invalid_argument("literal variable out of range");
    clauses_.emplace_back(a, b);
}

bool TwoSatFormula::satisfied_by(const Assignment& a) const
{
    if (static_cast<int>(a.size()) != variable_count_)
        return false;
    auto value = [&](Literal l) { return a[l.var] == l.positive; };
    return std::all_of(clauses_.begin(), clauses_.end(),
        [&](const auto& c) { return value(c.first) || value(c.second); });
}

std::optional<Assignment> TwoSatFormula::solve() const
{
    const int nodes = 2 * variable_count_;
    std::vector<std::vector<int>> graph(nodes);
    for (const auto& [a, b] : clauses_) {
        graph[node_of(negate(a))].push_back(node_of(b));
        graph[node_of(negate(b))].push_back(node_of(a));
    }

    // iterative Tarjan; component ids come out in reverse topological order
    std::vector<int> comp(nodes, -1), disc(nodes, -1), low(nodes, 0);
    std::vector<int> tarjan_stack;
    std::vector<bool> on_stack(nodes, false);
    int timer = 0, comp_count = 0;

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> frames;
    for (int start = 0; start < nodes; ++start) {
        if (disc[start] != -1)
            continue;
        frames.push_back({start, 0});
        disc[start] = low[start] = timer++;
        tarjan_stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next < graph[v].size()) {
                int w = graph[v][f.next++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    tarjan_stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                if (low[v] == disc[v]) {
                    while (true) {
                        int w = tarjan_stack.back();
                        tarjan_stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if (w == v)
                            break;
                    }
                    ++comp_count;
                }
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    Assignment result(variable_count_);
    for (int x = 0; x < variable_count_; ++x) {
        int p = comp[2 * x], n = comp[2 * x + 1];
        if (p == n)
            return std::nullopt;
        result[x] = p < n; // closer to a sink in the implication graph
    }
    return result;
}

} // namespace rmis
