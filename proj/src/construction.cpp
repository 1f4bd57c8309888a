#include "rmis/construction.hpp"

#include <stdexcept>

namespace rmis {

namespace {

enum class Resolved { In, OutCovered, OutAerial }; // PI / PO / PE choice for a node

struct Descent {
    const Graph& g;
    const Decision& decision;
    const AbcTree& tree;
    RmisWitness witness;

    VertexSet solve_component(int x, SatMode mode)
    {
        auto it = decision.selected_cache.find({x, mode});
        if (it != decision.selected_cache.end())
            return it->second;
        ComponentProblem p = make_component_problem(g, tree, decision.labels, x, mode);
        SatResult r = is_satisfiable(p);
        if (!r.satisfiable)
            throw std::logic_error("extract_rmis: component became unsatisfiable during descent");
        VertexSet global(g.vertex_count());
        for (int v : r.selected.members())
            global.insert(p.map.original(v));
        return global;
    }

    void descend_component(int x, SatMode mode)
    {
        VertexSet selected = solve_component(x, mode);
        for (int v : selected.members())
            witness.set.insert(v);
        note(x, mode == SatMode::In         ? "component solved with attachment in"
               : mode == SatMode::Out       ? "component solved with attachment out"
               : mode == SatMode::OutAerial ? "component solved with attachment out (aerial cover)"
                                            : "root component solved unconstrained");
        for (int a : tree.node(x).children)
            resolve_vertex_node(a, selected.contains(tree.node(a).vertex));
    }

    // y is an articulation or pendant node whose inclusion status was fixed above
    void resolve_vertex_node(int y, bool included)
    {
        const AbcNode& node = tree.node(y);
        const LabelSet& l = decision.labels[y];
        if (included) {
            if (!l.pi)
                throw std::logic_error("extract_rmis: vertex forced in without label PI");
            witness.set.insert(node.vertex);
            note(y, "included (PI)");
            for (int c : node.children)
                descend(c, Resolved::In);
            return;
        }
        if (l.po) {
            note(y, "excluded, covered inside the subtree (PO)");
            for (int c : node.children) {
                const LabelSet& cl = decision.labels[c];
                if (cl.po)
                    descend(c, Resolved::OutCovered);
                else if (cl.pe)
                    descend(c, Resolved::OutAerial);
                else
                    throw std::logic_error("extract_rmis: child incompatible with exclusion");
            }
        } else if (l.pe) {
            note(y, "excluded, covered from above (PE)");
            for (int c : node.children)
                descend(c, Resolved::OutAerial);
        } else {
            throw std::logic_error("extract_rmis: vertex forced out without label PO or PE");
        }
    }

    // c is a bridge or component node with a resolved label for its attachment
    void descend(int c, Resolved r)
    {
        const AbcNode& node = tree.node(c);
        if (node.kind == NodeKind::Component) {
            descend_component(c, r == Resolved::In        ? SatMode::In
                                 : r == Resolved::OutCovered ? SatMode::Out
                                                             : SatMode::OutAerial);
            return;
        }
        int y = node.children.at(0);
        switch (r) {
        case Resolved::In:
            // attachment in the set covers the lower endpoint across the bridge
            resolve_vertex_node(y, false);
            break;
        case Resolved::OutCovered:
            // the lower endpoint is the attachment's only neighbor down here
            resolve_vertex_node(y, true);
            break;
        case Resolved::OutAerial:
            resolve_vertex_node(y, false);
            break;
        }
    }

    void note(int node_id, const std::string& text)
    {
        witness.provenance.push_back("node " + std::to_string(node_id) + ": " + text);
    }
};

} // namespace

RmisWitness extract_rmis(const Graph& g, const Decision& decision)
{
    if (!decision.accepted)
        throw std::invalid_argument("extract_rmis: decision is not accepting");
    if (decision.tree_graph) {
        RmisWitness witness;
        witness.set = greedy_mis(g);
        witness.provenance.push_back("tree graph: greedy MIS (all MISs robust)");
        return witness;
    }
    Descent descent{g, decision, *decision.tree, RmisWitness{VertexSet(g.vertex_count()), {}}};
    descent.descend_component(descent.tree.root, SatMode::None);
    return descent.witness;
}

RmisWitness bipartite_rmis(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("bipartite_rmis: disconnected input");
    std::optional<Bipartition> bp = bipartition(g);
    if (!bp)
        throw std::invalid_argument("bipartite_rmis: graph is not bipartite");
    RmisWitness witness;
    witness.set = VertexSet(g.vertex_count());
    if (g.vertex_count() > 0) {
        int side = bp->side[0];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (bp->side[v] == side)
                witness.set.insert(v);
    }
    witness.provenance.push_back("bipartite fast path: side of vertex 0");
    return witness;
}

VertexSet greedy_mis(const Graph& g)
{
    VertexSet set(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (set.contains(w)) {
                blocked = true;
                break;
            }
        if (!blocked)
            set.insert(v);
    }
    return set;
}

} // namespace rmis
