#pragma once

#include "rmis/graph.hpp"
#include "rmis/labeling.hpp"

#include <string>
#include <vector>

namespace rmis {

struct RmisWitness {
    VertexSet set;
    std::vector<std::string> provenance; // label choice per tree node during the descent
};

/// Redescends an accepting labeled tree and assembles an explicit robust MIS.
/// Deterministic: label preference PI > PO > PE at every choice point.
/// Throws std::logic_error if no compatible label exists during the descent
/// (unreachable when the labeling is correct).
RmisWitness extract_rmis(const Graph& g, const Decision& decision);

/// Bipartite fast path: the side of the bipartition containing vertex 0.
RmisWitness bipartite_rmis(const Graph& g);

/// Ascending-id greedy MIS (tree fast path).
VertexSet greedy_mis(const Graph& g);

} // namespace rmis
