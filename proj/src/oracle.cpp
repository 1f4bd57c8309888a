#include "rmis/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace rmis {
namespace oracle {

namespace {

using Mask = uint32_t;

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj, int n,
    std::vector<VertexSet>& out)
{
    if (p == 0 && x == 0) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (r & (Mask{1} << v))
                s.insert(v);
        out.push_back(std::move(s));
        return;
    }
    Mask candidates = p;
    for (int v = 0; v < n; ++v) {
        Mask bit = Mask{1} << v;
        if (!(candidates & bit))
            continue;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, n, out);
        p &= ~bit;
        x |= bit;
    }
}

void validate_mis(const Graph& g, const VertexSet& m)
{
    if (m.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    for (const auto& [u, v] : g.edges())
        if (m.contains(u) && m.contains(v))
            throw std::invalid_argument("set is not independent");
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (m.contains(u))
            continue;
        bool covered = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
            [&](int w) { return m.contains(w); });
        if (!covered)
            throw std::invalid_argument("set is not maximal");
    }
}

// connectivity of g with all edges between `pivot` and m removed
bool connected_without_set_edges(const Graph& g, int pivot, const VertexSet& m)
{
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    auto blocked = [&](int a, int b) {
        return (a == pivot && m.contains(b)) || (b == pivot && m.contains(a));
    };
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (seen[w] || blocked(v, w))
                continue;
            seen[w] = true;
            ++reached;
            q.push(w);
        }
    }
    return reached == n;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

std::vector<VertexSet> enumerate_mis(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > kMaxEnumerationVertices)
        throw SizeGuardError("enumerate_mis: more than 24 vertices");
    if (n == 0)
        return {VertexSet(0)};

    // maximal independent sets = maximal cliques of the complement
    std::vector<Mask> complement(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v))
                complement[u] |= Mask{1} << v;
    std::vector<VertexSet> out;
    Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    bron_kerbosch(0, all, 0, complement, n, out);
    return out;
}

bool is_robust_mis(const Graph& g, const VertexSet& m)
{
    if (!is_connected(g))
        throw std::invalid_argument("is_robust_mis: disconnected graph");
    validate_mis(g, m);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (m.contains(u))
            continue;
        // the subgraph keeping every edge except u's set edges is the unique
        // maximal candidate that uncovers u
        if (connected_without_set_edges(g, u, m))
            return false;
    }
    return true;
}

bool is_robust_mis_exhaustive(const Graph& g, const VertexSet& m)
{
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const int ecount = static_cast<int>(edges.size());
    if (ecount > kMaxExhaustiveEdges)
        throw SizeGuardError("is_robust_mis_exhaustive: more than 20 edges");
    if (!is_connected(g))
        throw std::invalid_argument("is_robust_mis_exhaustive: disconnected graph");
    validate_mis(g, m);

    // per uncovered vertex: the mask of edges linking it to the set
    std::vector<Mask> cover_edges;
    for (int u = 0; u < n; ++u) {
        if (m.contains(u))
            continue;
        Mask f = 0;
        for (int i = 0; i < ecount; ++i) {
            auto [a, b] = edges[i];
            if ((a == u && m.contains(b)) || (b == u && m.contains(a)))
                f |= Mask{1} << i;
        }
        cover_edges.push_back(f);
    }

    for (Mask subset = 0; subset < (Mask{1} << ecount); ++subset) {
        Dsu dsu(n);
        int merges = 0;
        for (int i = 0; i < ecount; ++i)
            if (subset & (Mask{1} << i))
                if (dsu.unite(edges[i].first, edges[i].second))
                    ++merges;
        if (merges != n - 1)
            continue; // not a connected spanning subgraph
        for (Mask f : cover_edges)
            if ((subset & f) == 0)
                return false; // some vertex lost all its set neighbors
    }
    return true;
}

std::optional<VertexSet> exists_rmis_bf(const Graph& g)
{
    for (const VertexSet& m : enumerate_mis(g))
        if (is_robust_mis(g, m))
            return m;
    return std::nullopt;
}

bool forall_rmis_bf(const Graph& g)
{
    for (const VertexSet& m : enumerate_mis(g))
        if (!is_robust_mis(g, m))
            return false;
    return true;
}

GadgetGraph build_gadget(const ComponentProblem& p)
{
    const int base = p.component.vertex_count();
    GadgetGraph gadget;
    gadget.prime.assign(base, -1);
    gadget.double_prime.assign(base, -1);

    int next = base;
    std::vector<Edge> edges = p.component.edges();
    for (int v = 0; v < base; ++v) {
        if (p.constraints[v].empty())
            continue;
        gadget.prime[v] = next++;
        gadget.double_prime[v] = next++;
        edges.push_back({v, gadget.prime[v]});
        edges.push_back({gadget.prime[v], gadget.double_prime[v]});
    }
    gadget.graph = Graph(next, edges);
    return gadget;
}

bool suitable_rmis_exists(const ComponentProblem& p)
{
    GadgetGraph gadget = build_gadget(p);
    if (gadget.graph.vertex_count() > kMaxEnumerationVertices)
        throw SizeGuardError("suitable_rmis_exists: gadget exceeds 24 vertices");

    for (const VertexSet& s : enumerate_mis(gadget.graph)) {
        if (p.flag == StatusFlag::In && !s.contains(p.attachment))
            continue;
        if (p.flag == StatusFlag::Out && s.contains(p.attachment))
            continue;
        bool suitable = true;
        for (int v = 0; v < p.component.vertex_count() && suitable; ++v) {
            const LabelSet& l = p.constraints[v];
            if (l.empty())
                continue;
            if (s.contains(v)) {
                suitable = l.pi;
            } else {
                if (!l.po && !l.pe)
                    suitable = false;
                else if (s.contains(gadget.prime[v]) && !s.contains(gadget.double_prime[v]))
                    suitable = l.po;
            }
        }
        if (suitable && is_robust_mis(gadget.graph, s))
            return true;
    }
    return false;
}

} // namespace oracle
} // namespace rmis
