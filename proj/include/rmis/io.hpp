#pragma once

#include "rmis/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmis {

enum class GraphFormat { EdgeList, Dimacs, Auto };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed graph plus the original vertex labels (dense id -> label).
struct ParsedGraph {
    Graph graph;
    std::vector<int> original_label;
};

/// Edge list: optional "n m" header, "u v" lines, '#' comments, arbitrary
/// non-negative labels compacted to dense ids when no header is given.
/// DIMACS: "p edge N M" header and 1-based "e u v" lines.
ParsedGraph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);
ParsedGraph parse_graph_file(const std::string& path, GraphFormat format = GraphFormat::Auto);

std::string serialize_edgelist(const Graph& g);
std::string serialize_dimacs(const Graph& g);

// graph families for the gen subcommand and the test generators
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_star(int leaves);

/// Attaches a pendant neighbor to every vertex of the base graph lying on a
/// cycle, making the result a sputnik.
Graph gen_sputnik(const Graph& base);

/// Random spanning tree plus Bernoulli(p) extra edges; deterministic per seed.
Graph gen_random_connected(int n, double p, uint64_t seed);

/// The 8-vertex, 9-edge fixture component (vertices relabeled densely,
/// ascending by original id 1,2,6,8,9,10,11,13).
ParsedGraph gen_fixture_component_b();

} // namespace rmis
