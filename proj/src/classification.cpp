#include "rmis/classification.hpp"

#include "rmis/decomposition.hpp"
#include "rmis/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmis {

std::string to_string(RobustnessTag tag)
{
    switch (tag) {
    case RobustnessTag::AllRobust:
        return "ALL_ROBUST";
    case RobustnessTag::SomeRobust:
        return "SOME_ROBUST";
    case RobustnessTag::NoneRobust:
        return "NONE_ROBUST";
    }
    return "?";
}

bool is_complete_bipartite(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("is_complete_bipartite: disconnected input");
    std::optional<Bipartition> bp = bipartition(g);
    if (!bp)
        return false;
    long long side1 = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (bp->side[v] == 1)
            ++side1;
    long long side0 = g.vertex_count() - side1;
    return static_cast<long long>(g.edges().size()) == side0 * side1;
}

bool is_sputnik(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("is_sputnik: disconnected input");
    if (g.vertex_count() == 0)
        return true;
    BlockAnalysis analysis = analyze_blocks(g);
    std::vector<bool> on_cycle(g.vertex_count(), false);
    // an edge lies on a cycle iff it is not a bridge
    std::vector<Edge> bridges = analysis.bridges;
    for (const auto& e : g.edges()) {
        if (std::binary_search(bridges.begin(), bridges.end(), e))
            continue;
        on_cycle[e.first] = true;
        on_cycle[e.second] = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!on_cycle[v])
            continue;
        bool has_antenna = false;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1) {
                has_antenna = true;
                break;
            }
        if (!has_antenna)
            return false;
    }
    return true;
}

bool all_mis_robust(const Graph& g)
{
    return is_complete_bipartite(g) || is_sputnik(g);
}

std::optional<bool> biconnected_shortcut(const Graph& g)
{
    if (!is_biconnected(g))
        return std::nullopt;
    return bipartition(g).has_value();
}

RobustnessClass classify(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("classify: disconnected input");
    if (is_complete_bipartite(g))
        return {RobustnessTag::AllRobust, "complete-bipartite", std::nullopt};
    if (is_sputnik(g)) {
        bool tree = g.edge_count() == g.vertex_count() - 1;
        return {RobustnessTag::AllRobust, tree ? "tree" : "sputnik", std::nullopt};
    }
    Decision decision = decide(g);
    if (decision.accepted) {
        RmisWitness witness = extract_rmis(g, decision);
        return {RobustnessTag::SomeRobust, "witness-rmis", witness.set};
    }
    if (is_biconnected(g) && !bipartition(g))
        return {RobustnessTag::NoneRobust, "biconnected-non-bipartite", std::nullopt};
    return {RobustnessTag::NoneRobust, "algorithm-reject", std::nullopt};
}

} // namespace rmis
