#pragma once

#include "rmis/decomposition.hpp"
#include "rmis/graph.hpp"
#include "rmis/twosat.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rmis {

/// PI: the subtree admits a robust MIS including the attachment vertex.
/// PO: one excluding it. PE: no PO, but one excluding it exists once an
/// external neighbor joins the set. PO and PE are mutually exclusive.
struct LabelSet {
    bool pi = false;
    bool po = false;
    bool pe = false;

    bool empty() const { return !pi && !po && !pe; }

    // keeps PO when both PO and PE were produced
    void normalize()
    {
        if (po && pe)
            pe = false;
    }

    bool operator==(const LabelSet&) const = default;

    std::string to_string() const;
};

enum class StatusFlag { In, Out, None };

/// Constraint test mode for a component node: the PE test runs the Out flag
/// under an artificial PO label on the parent articulation.
enum class SatMode { In, Out, OutAerial, None };

/// One biconnected component with the constraints of its surrounding
/// articulation vertices, ready for the bipartiteness + 2-SAT test.
struct ComponentProblem {
    Graph component;                     // induced subgraph, local ids
    IdMap map;                           // local <-> global ids
    std::vector<LabelSet> constraints;   // per local vertex; empty = unconstrained
    int attachment = -1;                 // local id, -1 at the root
    StatusFlag flag = StatusFlag::None;
};

struct SatResult {
    bool satisfiable = false;
    Assignment assignment;               // per X-component variable
    std::vector<Literal> vertex_literal; // per local vertex
    VertexSet selected;                  // local ids with a true literal
};

LabelSet label_pendant(const AbcTree& tree, int x);
LabelSet label_articulation(const std::vector<LabelSet>& child_labels);
LabelSet label_bridge(const LabelSet& child);

/// Bipartiteness-modulo-E^PO plus 2-SAT encoding of the label constraints.
SatResult is_satisfiable(const ComponentProblem& p);

/// Builds the problem for component node x under the given test mode, pulling
/// articulation constraints from the labels computed so far.
ComponentProblem make_component_problem(
    const Graph& g, const AbcTree& tree, const std::vector<LabelSet>& labels, int x, SatMode mode);

struct Decision {
    bool accepted = false;
    bool tree_graph = false;            // no biconnected component: trivially robust
    std::optional<AbcTree> tree;
    std::vector<LabelSet> labels;       // per tree node
    int rejected_node = -1;             // node where labeling failed, -1 otherwise
    // selected sets (global ids) cached from successful satisfiability tests
    std::map<std::pair<int, SatMode>, VertexSet> selected_cache;
};

/// Called with every component problem tested and its verdict; used by the
/// oracle cross-checks.
using ProblemObserver = std::function<void(const ComponentProblem&, bool)>;

LabelSet label_component(const Graph& g, const AbcTree& tree, int x, Decision& decision,
    const ProblemObserver& observer = nullptr);

/// Post-order labeling of the subtree rooted at x. Returns false (and records
/// the failing node) as soon as any label set comes out empty.
bool label_subtree(const Graph& g, const AbcTree& tree, int x, Decision& decision,
    const ProblemObserver& observer = nullptr);

/// Full decision driver: tree-graph fast path, otherwise label all subtrees of
/// the root component and run the unconstrained root test.
Decision decide(const Graph& g, const ProblemObserver& observer = nullptr);

} // namespace rmis
