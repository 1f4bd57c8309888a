#pragma once

#include "rmis/construction.hpp"
#include "rmis/graph.hpp"

#include <optional>
#include <string>

namespace rmis {

enum class RobustnessTag { AllRobust, SomeRobust, NoneRobust };

struct RobustnessClass {
    RobustnessTag tag;
    std::string evidence; // complete-bipartite | sputnik | tree | witness-rmis |
                          // biconnected-non-bipartite | algorithm-reject
    std::optional<VertexSet> witness;
};

bool is_complete_bipartite(const Graph& g);

/// Every vertex lying on a cycle (equivalently, incident to a non-bridge edge)
/// has a pendant neighbor. Trees qualify vacuously.
bool is_sputnik(const Graph& g);

bool all_mis_robust(const Graph& g);

/// Biconnected dichotomy: bipartite <=> a robust MIS exists. Absent when the
/// graph is not biconnected.
std::optional<bool> biconnected_shortcut(const Graph& g);

RobustnessClass classify(const Graph& g);

std::string to_string(RobustnessTag tag);

} // namespace rmis
