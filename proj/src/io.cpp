#include "rmis/io.hpp"

#include "rmis/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace rmis {

namespace {

struct DataLine {
    int number; // 1-based line number in the document
    std::string text;
};

std::vector<DataLine> data_lines(const std::string& text)
{
    std::vector<DataLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        out.push_back({number, line});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::pair<long long, long long> parse_int_pair(const DataLine& line)
{
    std::istringstream in(line.text);
    long long a, b;
    std::string rest;
    if (!(in >> a >> b) || (in >> rest))
        fail(line.number, "expected two integers, got '" + line.text + "'");
    if (a < 0 || b < 0)
        fail(line.number, "negative value in '" + line.text + "'");
    return {a, b};
}

ParsedGraph parse_edgelist(const std::string& text)
{
    std::vector<DataLine> lines = data_lines(text);
    std::vector<std::pair<long long, long long>> pairs;
    pairs.reserve(lines.size());
    for (const auto& line : lines)
        pairs.push_back(parse_int_pair(line));

    // the first line is a header iff reading it as "n m" is consistent with
    // the rest of the document
    bool header = false;
    if (!pairs.empty()) {
        auto [n, m] = pairs.front();
        if (static_cast<long long>(pairs.size()) - 1 == m) {
            header = true;
            for (size_t i = 1; i < pairs.size(); ++i)
                if (pairs[i].first >= n || pairs[i].second >= n)
                    header = false;
        }
    }

    ParsedGraph out;
    std::set<Edge> seen;
    std::vector<Edge> edges;
    if (header) {
        int n = static_cast<int>(pairs.front().first);
        for (size_t i = 1; i < pairs.size(); ++i) {
            int u = static_cast<int>(pairs[i].first), v = static_cast<int>(pairs[i].second);
            if (u == v)
                fail(lines[i].number, "self-loop");
            if (!seen.insert(canonical_edge(u, v)).second)
                fail(lines[i].number, "duplicate edge");
            edges.push_back({u, v});
        }
        out.graph = Graph(n, edges);
        out.original_label.resize(n);
        std::iota(out.original_label.begin(), out.original_label.end(), 0);
        return out;
    }

    // headerless: arbitrary labels, compacted ascending
    std::map<long long, int> dense;
    for (const auto& [u, v] : pairs) {
        dense.emplace(u, 0);
        dense.emplace(v, 0);
    }
    for (auto& [label, id] : dense) {
        id = static_cast<int>(out.original_label.size());
        out.original_label.push_back(static_cast<int>(label));
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
        int u = dense[pairs[i].first], v = dense[pairs[i].second];
        if (u == v)
            fail(lines[i].number, "self-loop");
        if (!seen.insert(canonical_edge(u, v)).second)
            fail(lines[i].number, "duplicate edge");
        edges.push_back({u, v});
    }
    out.graph = Graph(static_cast<int>(out.original_label.size()), edges);
    return out;
}

ParsedGraph parse_dimacs(const std::string& text)
{
    std::vector<DataLine> lines;
    {
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == 'c')
                continue;
            lines.push_back({number, line});
        }
    }
    if (lines.empty())
        throw ParseError("empty DIMACS document");

    long long n = 0, m = 0;
    {
        std::istringstream in(lines.front().text);
        std::string p, kind;
        if (!(in >> p >> kind >> n >> m) || p != "p" || kind != "edge" || n < 0 || m < 0)
            fail(lines.front().number, "expected 'p edge N M' header");
    }
    if (static_cast<long long>(lines.size()) - 1 != m)
        fail(lines.back().number,
            "expected " + std::to_string(m) + " edge lines, found "
                + std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        std::string e;
        long long u, v;
        std::string rest;
        if (!(in >> e >> u >> v) || e != "e" || (in >> rest))
            fail(lines[i].number, "expected 'e u v'");
        if (u < 1 || v < 1 || u > n || v > n)
            fail(lines[i].number, "vertex id outside [1, N]");
        if (u == v)
            fail(lines[i].number, "self-loop");
        Edge edge = canonical_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        if (!seen.insert(edge).second)
            fail(lines[i].number, "duplicate edge");
        edges.push_back(edge);
    }
    ParsedGraph out;
    out.graph = Graph(static_cast<int>(n), edges);
    out.original_label.resize(n);
    std::iota(out.original_label.begin(), out.original_label.end(), 1);
    return out;
}

} // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format)
{
    if (format == GraphFormat::Auto) {
        std::istringstream in(text);
        std::string line;
        format = GraphFormat::EdgeList;
        while (std::getline(in, line)) {
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#')
                continue;
            if (line[start] == 'p' || line[start] == 'c' || line[start] == 'e')
                format = GraphFormat::Dimacs;
            break;
        }
    }
    return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

ParsedGraph parse_graph_file(const std::string& path, GraphFormat format)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

std::string serialize_edgelist(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

std::string serialize_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph gen_path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph gen_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite: need both sides non-empty");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

Graph gen_star(int leaves)
{
    if (leaves < 0)
        throw std::invalid_argument("star: negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph(leaves + 1, edges);
}

Graph gen_sputnik(const Graph& base)
{
    if (!is_connected(base))
        throw std::invalid_argument("sputnik: base graph must be connected");
    std::vector<Edge> edges = base.edges();
    BlockAnalysis analysis = analyze_blocks(base);
    std::vector<bool> on_cycle(base.vertex_count(), false);
    for (const auto& e : base.edges())
        if (!std::binary_search(analysis.bridges.begin(), analysis.bridges.end(), e)) {
            on_cycle[e.first] = true;
            on_cycle[e.second] = true;
        }
    int next = base.vertex_count();
    for (int v = 0; v < base.vertex_count(); ++v)
        if (on_cycle[v])
            edges.push_back({v, next++});
    return Graph(next, edges);
}

Graph gen_random_connected(int n, double p, uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_connected: need n >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_connected: p outside [0, 1]");
    std::mt19937_64 rng(seed);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::set<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> earlier(0, i - 1);
        edges.insert(canonical_edge(order[i], order[earlier(rng)]));
    }
    std::bernoulli_distribution extra(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!edges.count({u, v}) && extra(rng))
                edges.insert({u, v});
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

ParsedGraph gen_fixture_component_b()
{
    // cycle 1-2-6-8-9-10-11-13-1 with the chord 2-11
    const std::vector<int> labels{1, 2, 6, 8, 9, 10, 11, 13};
    ParsedGraph out;
    out.original_label = labels;
    out.graph = Graph(8,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {1, 6}});
    return out;
}

} // namespace rmis
