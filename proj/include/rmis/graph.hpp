#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmis {

using Edge = std::pair<int, int>;

/// Membership set over the vertex range [0, n) of some graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(universe, false) {}

    static VertexSet of(int universe, std::initializer_list<int> vs)
    {
        VertexSet s(universe);
        for (int v : vs)
            s.insert(v);
        return s;
    }

    int universe() const { return static_cast<int>(bits_.size()); }
    bool contains(int v) const { return v >= 0 && v < universe() && bits_[v]; }
    bool empty() const { return count_ == 0; }
    int count() const { return count_; }

    void insert(int v)
    {
        if (!bits_[v]) {
            bits_[v] = true;
            ++count_;
        }
    }
    void erase(int v)
    {
        if (bits_[v]) {
            bits_[v] = false;
            --count_;
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(count_);
        for (int v = 0; v < universe(); ++v)
            if (bits_[v])
                out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& other) const { return bits_ == other.bits_; }

    // lexicographic comparison of the sorted member lists
    bool operator<(const VertexSet& other) const { return members() < other.members(); }

private:
    std::vector<bool> bits_;
    int count_ = 0;
};

/// Two-coloring per connected component; side 0 holds the smallest vertex id
/// of each component.
struct Bipartition {
    std::vector<int> side; // 0 or 1 per vertex
};

/// Simple undirected graph with dense 0-based vertex ids. Immutable after
/// construction; edge surgery returns new values.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    /// Canonical edge list: (u, v) with u < v, sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
};

/// Bidirectional id mapping produced by induced_subgraph.
struct IdMap {
    std::vector<int> to_original; // local id -> original id
    std::vector<int> to_local;    // original id -> local id, -1 if absent

    int original(int local) const { return to_original[local]; }
    int local(int orig) const { return to_local[orig]; }
};

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
Graph remove_edges(const Graph& g, const std::vector<Edge>& removed);
std::pair<Graph, IdMap> induced_subgraph(const Graph& g, const VertexSet& vs);

inline Edge canonical_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

} // namespace rmis
