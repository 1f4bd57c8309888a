#pragma once

#include "rmis/graph.hpp"
#include "rmis/labeling.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rmis {
namespace oracle {

// hard enumeration guards; exceeding them raises SizeGuardError
inline constexpr int kMaxEnumerationVertices = 24;
inline constexpr int kMaxExhaustiveEdges = 20;

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gadget for the suitability test: the base component plus a pendant path
/// v(y)-v'(y)-v''(y) at every constrained vertex.
struct GadgetGraph {
    Graph graph;
    std::vector<int> prime;        // per base vertex: v'(y) id, -1 if unconstrained
    std::vector<int> double_prime; // per base vertex: v''(y) id, -1 if unconstrained
};

/// All maximal independent sets, deterministic order (Bron-Kerbosch on the
/// complement). Guarded at 24 vertices.
std::vector<VertexSet> enumerate_mis(const Graph& g);

/// Weak-vertex criterion: m stays maximal in every connected spanning subgraph
/// iff for every u outside m, dropping all edges from u to its set neighbors
/// disconnects g. Throws std::invalid_argument (distinguishing "not
/// independent" from "not maximal") when m is not an MIS.
bool is_robust_mis(const Graph& g, const VertexSet& m);

/// Definition checked literally: enumerate every connected spanning edge
/// subset. Guarded at 20 edges.
bool is_robust_mis_exhaustive(const Graph& g, const VertexSet& m);

std::optional<VertexSet> exists_rmis_bf(const Graph& g);
bool forall_rmis_bf(const Graph& g);

GadgetGraph build_gadget(const ComponentProblem& p);

/// Brute-force counterpart of is_satisfiable: searches the gadget for a
/// robust MIS consistent with the labels and the attachment flag.
bool suitable_rmis_exists(const ComponentProblem& p);

} // namespace oracle
} // namespace rmis
