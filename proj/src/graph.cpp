#include "rmis/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rmis {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adjacency_(std::max(n, 0))
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex out of range in edge (" + std::to_string(u) + ","
                + std::to_string(v) + ")");
        canon.push_back(canonical_edge(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    edges_ = std::move(canon);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> comps;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        VertexSet comp(n);
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.insert(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.vertex_count();
    Bipartition bp;
    bp.side.assign(n, -1);
    for (int start = 0; start < n; ++start) {
        if (bp.side[start] != -1)
            continue;
        bp.side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (bp.side[w] == -1) {
                    bp.side[w] = 1 - bp.side[v];
                    q.push(w);
                } else if (bp.side[w] == bp.side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return bp;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& removed)
{
    std::vector<Edge> gone;
    gone.reserve(removed.size());
    for (const auto& [u, v] : removed) {
        Edge e = canonical_edge(u, v);
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v)
                + ") not present in graph");
        gone.push_back(e);
    }
    std::sort(gone.begin(), gone.end());
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const auto& e : g.edges())
        if (!std::binary_search(gone.begin(), gone.end(), e))
            kept.push_back(e);
    return Graph(g.vertex_count(), kept);
}

std::pair<Graph, IdMap> induced_subgraph(const Graph& g, const VertexSet& vs)
{
    IdMap map;
    map.to_local.assign(g.vertex_count(), -1);
    for (int v : vs.members()) {
        map.to_local[v] = static_cast<int>(map.to_original.size());
        map.to_original.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (vs.contains(u) && vs.contains(v))
            edges.emplace_back(map.to_local[u], map.to_local[v]);
    return {Graph(static_cast<int>(map.to_original.size()), edges), std::move(map)};
}

} // namespace rmis
