#pragma once

#include "rmis/graph.hpp"

#include <optional>
#include <vector>

namespace rmis {

/// Block decomposition of a connected graph. Blocks that are single edges are
/// reported as bridges; components hold only biconnected blocks with at least
/// three vertices.
struct BlockAnalysis {
    VertexSet articulation_points;
    std::vector<Edge> bridges;           // canonical, sorted
    std::vector<VertexSet> components;   // each of size >= 3
    VertexSet pendants;                  // degree-1 vertices
};

enum class NodeKind { Pendant, Articulation, Bridge, Component };

struct AbcNode {
    NodeKind kind;
    int vertex = -1;       // for Pendant / Articulation
    Edge edge{-1, -1};     // for Bridge
    VertexSet component;   // for Component
    int parent = -1;
    std::vector<int> children;
    int attachment = -1;   // -1 at the root
};

/// Rooted tree over Pendant / Articulation / Bridge / Component nodes.
/// The root is always a Component node.
struct AbcTree {
    std::vector<AbcNode> nodes;
    int root = -1;

    const AbcNode& node(int id) const { return nodes[id]; }
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Hopcroft-Tarjan block decomposition. Throws on disconnected input.
BlockAnalysis analyze_blocks(const Graph& g);

/// Assembles the rooted decomposition tree. Returns nullopt when the graph has
/// no biconnected component (the graph is a tree; callers short-circuit).
/// Root: the component containing the smallest vertex id, ties broken by
/// lexicographic vertex set.
std::optional<AbcTree> build_abc_tree(const BlockAnalysis& analysis, const Graph& g);

bool is_biconnected(const Graph& g);

} // namespace rmis
