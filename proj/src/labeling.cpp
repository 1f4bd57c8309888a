#include "rmis/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmis {

std::string LabelSet::to_string() const
{
    std::string s;
    auto append = [&](const char* tag) {
        if (!s.empty())
            s += ",";
        s += tag;
    };
    if (pi)
        append("PI");
    if (po)
        append("PO");
    if (pe)
        append("PE");
    return s.empty() ? "-" : s;
}

LabelSet label_pendant(const AbcTree& tree, int x)
{
    if (tree.node(x).kind != NodeKind::Pendant)
        throw std::invalid_argument("label_pendant: node is not a pendant");
    LabelSet l;
    l.pi = true;
    l.pe = true;
    return l;
}

LabelSet label_articulation(const std::vector<LabelSet>& child_labels)
{
    if (child_labels.empty())
        throw std::invalid_argument("label_articulation: no children");
    LabelSet l;
    l.pi = std::all_of(child_labels.begin(), child_labels.end(), [](const LabelSet& c) { return c.pi; });
    bool all_out = std::all_of(
        child_labels.begin(), child_labels.end(), [](const LabelSet& c) { return c.po || c.pe; });
    if (all_out) {
        bool any_po = std::any_of(
            child_labels.begin(), child_labels.end(), [](const LabelSet& c) { return c.po; });
        if (any_po)
            l.po = true;
        else
            l.pe = true;
    }
    return l;
}

LabelSet label_bridge(const LabelSet& child)
{
    LabelSet l;
    if (child.pi)
        l.po = true;
    if (child.pe)
        l.pi = true;
    if (child.po) {
        l.pi = true;
        l.pe = true;
    }
    l.normalize();
    return l;
}

SatResult is_satisfiable(const ComponentProblem& p)
{
    SatResult result;
    const Graph& gx = p.component;
    const int n = gx.vertex_count();

    std::vector<Edge> po_edges;
    for (const auto& [u, v] : gx.edges())
        if (p.constraints[u].po && p.constraints[v].po)
            po_edges.push_back({u, v});

    Graph x = remove_edges(gx, po_edges);
    std::optional<Bipartition> coloring = bipartition(x);
    if (!coloring)
        return result; // a non-PO vertex would be weak

    std::vector<VertexSet> parts = connected_components(x);
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int v : parts[i].members())
            part_of[v] = i;

    // side 0 (holding the smallest id of each part) gets the positive literal
    result.vertex_literal.resize(n);
    for (int v = 0; v < n; ++v)
        result.vertex_literal[v] = {part_of[v], coloring->side[v] == 0};

    TwoSatFormula formula(static_cast<int>(parts.size()));
    for (int v = 0; v < n; ++v) {
        const LabelSet& l = p.constraints[v];
        if (l.empty())
            continue;
        if (l.pi && !l.po && !l.pe)
            formula.add_unit(result.vertex_literal[v]);
        else if (!l.pi && (l.po || l.pe))
            formula.add_unit(negate(result.vertex_literal[v]));
    }
    for (const auto& [u, v] : po_edges)
        formula.add_clause(negate(result.vertex_literal[u]), negate(result.vertex_literal[v]));
    if (p.flag == StatusFlag::In)
        formula.add_unit(result.vertex_literal[p.attachment]);
    else if (p.flag == StatusFlag::Out)
        formula.add_unit(negate(result.vertex_literal[p.attachment]));

    std::optional<Assignment> assignment = formula.solve();
    if (!assignment)
        return result;

    result.satisfiable = true;
    result.assignment = *assignment;
    result.selected = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        Literal l = result.vertex_literal[v];
        if ((*assignment)[l.var] == l.positive)
            result.selected.insert(v);
    }
    return result;
}

ComponentProblem make_component_problem(
    const Graph& g, const AbcTree& tree, const std::vector<LabelSet>& labels, int x, SatMode mode)
{
    const AbcNode& node = tree.node(x);
    if (node.kind != NodeKind::Component)
        throw std::invalid_argument("make_component_problem: node is not a component");

    ComponentProblem p;
    auto [sub, map] = induced_subgraph(g, node.component);
    p.component = std::move(sub);
    p.map = std::move(map);
    p.constraints.assign(p.component.vertex_count(), LabelSet{});
    for (int y : node.children)
        p.constraints[p.map.local(tree.node(y).vertex)] = labels[y];

    if (x != tree.root)
        p.attachment = p.map.local(node.attachment);
    switch (mode) {
    case SatMode::In:
        p.flag = StatusFlag::In;
        break;
    case SatMode::Out:
        p.flag = StatusFlag::Out;
        break;
    case SatMode::OutAerial: {
        p.flag = StatusFlag::Out;
        LabelSet po_only;
        po_only.po = true;
        p.constraints[p.attachment] = po_only; // artificial parent PO, scoped to this problem
        break;
    }
    case SatMode::None:
        p.flag = StatusFlag::None;
        break;
    }
    return p;
}

namespace {

VertexSet to_global(const VertexSet& local, const IdMap& map, int n)
{
    VertexSet out(n);
    for (int v : local.members())
        out.insert(map.original(v));
    return out;
}

bool run_component_test(const Graph& g, const AbcTree& tree, int x, SatMode mode,
    Decision& decision, const ProblemObserver& observer)
{
    ComponentProblem p = make_component_problem(g, tree, decision.labels, x, mode);
    SatResult r = is_satisfiable(p);
    if (observer)
        observer(p, r.satisfiable);
    if (r.satisfiable)
        decision.selected_cache[{x, mode}] = to_global(r.selected, p.map, g.vertex_count());
    return r.satisfiable;
}

} // namespace

LabelSet label_component(
    const Graph& g, const AbcTree& tree, int x, Decision& decision, const ProblemObserver& observer)
{
    LabelSet l;
    if (run_component_test(g, tree, x, SatMode::In, decision, observer))
        l.pi = true;
    if (run_component_test(g, tree, x, SatMode::Out, decision, observer))
        l.po = true;
    else if (run_component_test(g, tree, x, SatMode::OutAerial, decision, observer))
        l.pe = true;
    return l;
}

bool label_subtree(
    const Graph& g, const AbcTree& tree, int x, Decision& decision, const ProblemObserver& observer)
{
    // children before parents: reverse BFS order
    std::vector<int> order{x};
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : tree.node(order[i]).children)
            order.push_back(c);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int y = *it;
        const AbcNode& node = tree.node(y);
        LabelSet l;
        switch (node.kind) {
        case NodeKind::Pendant:
            l = label_pendant(tree, y);
            break;
        case NodeKind::Articulation: {
            std::vector<LabelSet> child_labels;
            for (int c : node.children)
                child_labels.push_back(decision.labels[c]);
            l = label_articulation(child_labels);
            break;
        }
        case NodeKind::Bridge:
            if (node.children.size() != 1)
                throw std::logic_error("bridge node without exactly one child");
            l = label_bridge(decision.labels[node.children[0]]);
            break;
        case NodeKind::Component:
            l = label_component(g, tree, y, decision, observer);
            break;
        }
        if (l.empty()) {
            decision.rejected_node = y;
            return false;
        }
        decision.labels[y] = l;
    }
    return true;
}

Decision decide(const Graph& g, const ProblemObserver& observer)
{
    if (!is_connected(g))
        throw std::invalid_argument("decide: disconnected input; run per connected component");

    Decision decision;
    if (g.vertex_count() == 0) {
        decision.accepted = true;
        decision.tree_graph = true;
        return decision;
    }
    BlockAnalysis analysis = analyze_blocks(g);
    std::optional<AbcTree> tree = build_abc_tree(analysis, g);
    if (!tree) {
        // no biconnected component: g is a tree, every MIS is robust
        decision.accepted = true;
        decision.tree_graph = true;
        return decision;
    }
    decision.tree = std::move(*tree);
    decision.labels.assign(decision.tree->size(), LabelSet{});
    for (int c : decision.tree->node(decision.tree->root).children)
        if (!label_subtree(g, *decision.tree, c, decision, observer))
            return decision;
    decision.accepted =
        run_component_test(g, *decision.tree, decision.tree->root, SatMode::None, decision, observer);
    return decision;
}

} // namespace rmis
