#include "rmis/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace rmis {

namespace {

struct DfsFrame {
    int u;
    int parent;
    size_t next; // next adjacency index to look at
    int awaiting; // child we just descended into, -1 if none
};

} // namespace

BlockAnalysis analyze_blocks(const Graph& g)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("analyze_blocks: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("analyze_blocks: disconnected input");

    const int n = g.vertex_count();
    BlockAnalysis out;
    out.articulation_points = VertexSet(n);
    out.pendants = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            out.pendants.insert(v);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;
    int root_children = 0;

    auto pop_block = [&](int u, int c) {
        std::vector<Edge> block;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == Edge{u, c})
                break;
        }
        if (block.size() == 1) {
            out.bridges.push_back(canonical_edge(block[0].first, block[0].second));
        } else {
            VertexSet comp(n);
            for (const auto& [a, b] : block) {
                comp.insert(a);
                comp.insert(b);
            }
            out.components.push_back(std::move(comp));
        }
    };

    std::vector<DfsFrame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0, -1});
    while (!stack.empty()) {
        DfsFrame& f = stack.back();
        int u = f.u;
        if (f.awaiting != -1) {
            int c = f.awaiting;
            f.awaiting = -1;
            low[u] = std::min(low[u], low[c]);
            if (low[c] >= disc[u]) {
                pop_block(u, c);
                if (f.parent != -1)
                    out.articulation_points.insert(u);
            }
        }
        bool descended = false;
        while (f.next < g.neighbors(u).size()) {
            int v = g.neighbors(u)[f.next++];
            if (v == f.parent)
                continue;
            if (disc[v] == -1) {
                if (f.parent == -1)
                    ++root_children;
                edge_stack.push_back({u, v});
                disc[v] = low[v] = timer++;
                f.awaiting = v;
                stack.push_back({v, u, 0, -1});
                descended = true;
                break;
            }
            if (disc[v] < disc[u]) { // back edge
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (!descended && stack.back().awaiting == -1)
            stack.pop_back();
    }
    if (root_children >= 2)
        out.articulation_points.insert(0);

    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

bool is_biconnected(const Graph& g)
{
    if (g.vertex_count() < 3 || !is_connected(g))
        return false;
    BlockAnalysis a = analyze_blocks(g);
    return a.articulation_points.empty() && a.components.size() == 1;
}

std::optional<AbcTree> build_abc_tree(const BlockAnalysis& analysis, const Graph& g)
{
    if (analysis.components.empty())
        return std::nullopt; // tree graph: handled by the driver

    const int n = g.vertex_count();
    AbcTree tree;
    std::vector<int> a_node(n, -1), p_node(n, -1);

    // Node order is fixed for reproducibility: components first (sorted by
    // smallest member, ties lexicographic), then articulations, bridges,
    // pendants in ascending order.
    std::vector<VertexSet> comps = analysis.components;
    std::sort(comps.begin(), comps.end());
    for (const auto& comp : comps) {
        AbcNode node;
        node.kind = NodeKind::Component;
        node.component = comp;
        tree.nodes.push_back(std::move(node));
    }
    for (int v : analysis.articulation_points.members()) {
        AbcNode node;
        node.kind = NodeKind::Articulation;
        node.vertex = v;
        a_node[v] = tree.size();
        tree.nodes.push_back(std::move(node));
    }
    std::vector<int> b_nodes;
    for (const auto& e : analysis.bridges) {
        AbcNode node;
        node.kind = NodeKind::Bridge;
        node.edge = e;
        b_nodes.push_back(tree.size());
        tree.nodes.push_back(std::move(node));
    }
    for (int v : analysis.pendants.members()) {
        AbcNode node;
        node.kind = NodeKind::Pendant;
        node.vertex = v;
        p_node[v] = tree.size();
        tree.nodes.push_back(std::move(node));
    }

    // Incidence edges: A-C when the articulation lies in the component,
    // (A|P)-B for bridge endpoints.
    std::vector<std::vector<int>> adj(tree.size());
    auto link = [&](int x, int y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c].members())
            if (a_node[v] != -1)
                link(a_node[v], c);
    for (size_t i = 0; i < analysis.bridges.size(); ++i) {
        for (int v : {analysis.bridges[i].first, analysis.bridges[i].second}) {
            int endpoint = a_node[v] != -1 ? a_node[v] : p_node[v];
            if (endpoint == -1)
                throw std::logic_error("bridge endpoint is neither articulation nor pendant");
            link(endpoint, b_nodes[i]);
        }
    }

    // Root: component containing the smallest vertex id overall; comps are
    // already sorted so that is component 0.
    tree.root = 0;

    std::vector<bool> seen(tree.size(), false);
    std::queue<int> q;
    q.push(tree.root);
    seen[tree.root] = true;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        std::sort(adj[x].begin(), adj[x].end());
        for (int y : adj[x]) {
            if (seen[y])
                continue;
            seen[y] = true;
            ++reached;
            tree.nodes[y].parent = x;
            tree.nodes[x].children.push_back(y);
            q.push(y);
        }
    }
    if (reached != tree.size())
        throw std::logic_error("decomposition tree is not connected");

    // Attachment vertices: own vertex for A/P, inherited from the parent
    // articulation for B/C.
    std::vector<int> order;
    order.push_back(tree.root);
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : tree.nodes[order[i]].children)
            order.push_back(c);
    for (int x : order) {
        AbcNode& node = tree.nodes[x];
        if (x == tree.root) {
            node.attachment = -1;
        } else if (node.kind == NodeKind::Articulation || node.kind == NodeKind::Pendant) {
            node.attachment = node.vertex;
        } else {
            node.attachment = tree.nodes[node.parent].attachment;
        }
    }
    return tree;
}

} // namespace rmis
