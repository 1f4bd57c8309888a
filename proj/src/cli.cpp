#include "rmis/cli.hpp"

#include "rmis/classification.hpp"
#include "rmis/construction.hpp"
#include "rmis/decomposition.hpp"
#include "rmis/graph.hpp"
#include "rmis/io.hpp"
#include "rmis/labeling.hpp"
#include "rmis/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace rmis {

namespace {

using nlohmann::json;

GraphFormat parse_format(const std::string& name)
{
    if (name == "edgelist")
        return GraphFormat::EdgeList;
    if (name == "dimacs")
        return GraphFormat::Dimacs;
    return GraphFormat::Auto;
}

struct Component {
    Graph graph;
    IdMap map; // local <-> dense ids of the parsed graph
};

std::vector<Component> split_components(const Graph& g)
{
    std::vector<Component> out;
    for (const VertexSet& comp : connected_components(g)) {
        auto [sub, map] = induced_subgraph(g, comp);
        out.push_back({std::move(sub), std::move(map)});
    }
    if (out.empty())
        out.push_back({Graph(0, {}), IdMap{}});
    return out;
}

std::string join_labels(const std::vector<int>& labels)
{
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

std::vector<int> witness_labels(
    const ParsedGraph& parsed, const Component& comp, const VertexSet& local_set)
{
    std::vector<int> out;
    for (int v : local_set.members())
        out.push_back(parsed.original_label[comp.map.original(v)]);
    return out;
}

int cmd_decide(const ParsedGraph& parsed, std::ostream& out)
{
    bool all_yes = true;
    for (const Component& comp : split_components(parsed.graph))
        if (!decide(comp.graph).accepted)
            all_yes = false;
    out << (all_yes ? "YES" : "NO") << "\n";
    return all_yes ? kExitYes : kExitNo;
}

int cmd_construct(const ParsedGraph& parsed, std::ostream& out)
{
    std::vector<int> labels;
    for (const Component& comp : split_components(parsed.graph)) {
        Decision decision = decide(comp.graph);
        if (!decision.accepted) {
            out << "NONE\n";
            return kExitNo;
        }
        RmisWitness witness = extract_rmis(comp.graph, decision);
        auto part = witness_labels(parsed, comp, witness.set);
        labels.insert(labels.end(), part.begin(), part.end());
    }
    std::sort(labels.begin(), labels.end());
    out << join_labels(labels) << "\n";
    return kExitYes;
}

int cmd_verify(const ParsedGraph& parsed, const std::string& mis_arg, std::ostream& out)
{
    std::map<int, int> dense_of;
    for (size_t i = 0; i < parsed.original_label.size(); ++i)
        dense_of[parsed.original_label[i]] = static_cast<int>(i);

    VertexSet set(parsed.graph.vertex_count());
    std::istringstream in(mis_arg);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        int label = std::stoi(token);
        auto it = dense_of.find(label);
        if (it == dense_of.end())
            throw ParseError("unknown vertex label " + token);
        set.insert(it->second);
    }

    bool robust = true;
    for (const Component& comp : split_components(parsed.graph)) {
        VertexSet local(comp.graph.vertex_count());
        for (int v = 0; v < comp.graph.vertex_count(); ++v)
            if (set.contains(comp.map.original(v)))
                local.insert(v);
        try {
            if (!oracle::is_robust_mis(comp.graph, local))
                robust = false;
        } catch (const std::invalid_argument&) {
            out << "NOT_AN_MIS\n";
            return kExitNo;
        }
    }
    out << (robust ? "ROBUST" : "NOT_ROBUST") << "\n";
    return robust ? kExitYes : kExitNo;
}

int cmd_classify(const ParsedGraph& parsed, std::ostream& out)
{
    std::vector<Component> comps = split_components(parsed.graph);
    int code = kExitYes;
    for (size_t i = 0; i < comps.size(); ++i) {
        RobustnessClass result = classify(comps[i].graph);
        if (comps.size() > 1)
            out << "component " << i << ": ";
        out << to_string(result.tag) << " " << result.evidence;
        if (result.witness)
            out << " witness=" << join_labels(witness_labels(parsed, comps[i], *result.witness));
        out << "\n";
        if (result.tag == RobustnessTag::NoneRobust)
            code = kExitNo;
    }
    return code;
}

char kind_letter(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Pendant:
        return 'P';
    case NodeKind::Articulation:
        return 'A';
    case NodeKind::Bridge:
        return 'B';
    case NodeKind::Component:
        return 'C';
    }
    return '?';
}

std::string node_payload(const ParsedGraph& parsed, const Component& comp, const AbcNode& node)
{
    auto label = [&](int local) { return parsed.original_label[comp.map.original(local)]; };
    switch (node.kind) {
    case NodeKind::Pendant:
    case NodeKind::Articulation:
        return std::to_string(label(node.vertex));
    case NodeKind::Bridge:
        return std::to_string(label(node.edge.first)) + "-" + std::to_string(label(node.edge.second));
    case NodeKind::Component: {
        std::string s = "{";
        bool first = true;
        for (int v : node.component.members()) {
            if (!first)
                s += ",";
            first = false;
            s += std::to_string(label(v));
        }
        return s + "}";
    }
    }
    return "";
}

int cmd_decompose(const ParsedGraph& parsed, bool dot, bool as_json, std::ostream& out)
{
    std::vector<Component> comps = split_components(parsed.graph);
    json doc = json::array();
    if (dot)
        out << "graph abc {\n";

    for (size_t i = 0; i < comps.size(); ++i) {
        const Component& comp = comps[i];
        Decision decision = decide(comp.graph);
        json jcomp;
        jcomp["tree_graph"] = decision.tree_graph;
        jcomp["accepted"] = decision.accepted;
        jcomp["nodes"] = json::array();

        if (decision.tree_graph) {
            if (dot)
                out << "  // component " << i << ": tree graph\n";
            else if (!as_json)
                out << "component " << i << ": tree graph\n";
            doc.push_back(jcomp);
            continue;
        }
        const AbcTree& tree = *decision.tree;
        for (int id = 0; id < tree.size(); ++id) {
            const AbcNode& node = tree.node(id);
            std::string payload = node_payload(parsed, comp, node);
            std::string labels = id < static_cast<int>(decision.labels.size())
                ? decision.labels[id].to_string()
                : "-";
            if (dot) {
                static const std::map<char, std::string> shapes{
                    {'P', "circle"}, {'A', "diamond"}, {'B', "box"}, {'C', "doublecircle"}};
                out << "  n" << i << "_" << id << " [shape=" << shapes.at(kind_letter(node.kind))
                    << " label=\"" << kind_letter(node.kind) << " " << payload;
                if (labels != "-")
                    out << "\\n" << labels;
                out << "\"];\n";
                if (node.parent != -1)
                    out << "  n" << i << "_" << node.parent << " -- n" << i << "_" << id << ";\n";
            } else if (!as_json) {
                out << "component " << i << " node " << id << " " << kind_letter(node.kind) << " "
                    << payload << " parent="
                    << (node.parent == -1 ? std::string("-") : std::to_string(node.parent))
                    << " attachment="
                    << (node.attachment == -1
                            ? std::string("-")
                            : std::to_string(
                                  parsed.original_label[comp.map.original(node.attachment)]))
                    << " labels=" << labels << "\n";
            }
            json jnode;
            jnode["node_id"] = id;
            jnode["kind"] = std::string(1, kind_letter(node.kind));
            jnode["payload"] = payload;
            jnode["parent"] = node.parent;
            jnode["attachment"] = node.attachment == -1
                ? -1
                : parsed.original_label[comp.map.original(node.attachment)];
            json jlabels = json::array();
            const LabelSet& l = decision.labels[id];
            if (l.pi)
                jlabels.push_back("PI");
            if (l.po)
                jlabels.push_back("PO");
            if (l.pe)
                jlabels.push_back("PE");
            jnode["labels"] = jlabels;
            jcomp["nodes"].push_back(jnode);
        }
        doc.push_back(jcomp);
    }
    if (dot)
        out << "}\n";
    if (as_json)
        out << doc.dump(2) << "\n";
    return kExitYes;
}

int cmd_oracle(const ParsedGraph& parsed, const std::string& mode, std::ostream& out)
{
    bool yes = true;
    for (const Component& comp : split_components(parsed.graph)) {
        if (mode == "decide")
            yes = yes && oracle::exists_rmis_bf(comp.graph).has_value();
        else
            yes = yes && oracle::forall_rmis_bf(comp.graph);
    }
    out << (yes ? "YES" : "NO") << "\n";
    return yes ? kExitYes : kExitNo;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, uint64_t seed,
    std::ostream& out)
{
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError(
                "gen " + family + ": expected " + std::to_string(count) + " parameter(s)");
    };
    Graph g;
    if (family == "path") {
        want(1);
        g = gen_path(std::stoi(params[0]));
    } else if (family == "cycle") {
        want(1);
        g = gen_cycle(std::stoi(params[0]));
    } else if (family == "complete_bipartite") {
        want(2);
        g = gen_complete_bipartite(std::stoi(params[0]), std::stoi(params[1]));
    } else if (family == "star") {
        want(1);
        g = gen_star(std::stoi(params[0]));
    } else if (family == "sputnik") {
        want(1);
        g = gen_sputnik(parse_graph_file(params[0]).graph);
    } else if (family == "random_connected") {
        if (params.size() == 3)
            seed = std::stoull(params[2]);
        else
            want(2);
        g = gen_random_connected(std::stoi(params[0]), std::stod(params[1]), seed);
    } else if (family == "fixture_component_b") {
        want(0);
        g = gen_fixture_component_b().graph;
    } else {
        throw CLI::ValidationError("unknown family '" + family + "'");
    }
    out << serialize_edgelist(g);
    return kExitYes;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"robust maximal independent set toolkit"};
    app.require_subcommand(1);

    std::string file, format_name = "auto", mis_arg, oracle_mode, family;
    std::vector<std::string> gen_params;
    uint64_t seed = 0;
    bool dot = false, as_json = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file")->required();
        cmd->add_option("--format", format_name, "edgelist|dimacs|auto");
    };
    add_file(app.add_subcommand("decide", "does a robust MIS exist"));
    add_file(app.add_subcommand("construct", "print a robust MIS"));
    auto* verify = app.add_subcommand("verify", "check a candidate MIS for robustness");
    add_file(verify);
    verify->add_option("--mis", mis_arg, "comma-separated vertex labels")->required();
    add_file(app.add_subcommand("classify", "ALL_ROBUST / SOME_ROBUST / NONE_ROBUST"));
    auto* decompose = app.add_subcommand("decompose", "print the decomposition tree");
    add_file(decompose);
    decompose->add_flag("--dot", dot, "graphviz output");
    decompose->add_flag("--json", as_json, "JSON output");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counterparts");
    oracle_cmd->add_option("mode", oracle_mode, "decide|forall")
        ->required()
        ->check(CLI::IsMember({"decide", "forall"}));
    add_file(oracle_cmd);
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("family", family, "path|cycle|complete_bipartite|star|sputnik|random_connected|fixture_component_b")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--seed", seed, "random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("gen"))
            return cmd_gen(family, gen_params, seed, out);
        ParsedGraph parsed = parse_graph_file(file, parse_format(format_name));
        if (app.got_subcommand("decide"))
            return cmd_decide(parsed, out);
        if (app.got_subcommand("construct"))
            return cmd_construct(parsed, out);
        if (app.got_subcommand("verify"))
            return cmd_verify(parsed, mis_arg, out);
        if (app.got_subcommand("classify"))
            return cmd_classify(parsed, out);
        if (app.got_subcommand("decompose"))
            return cmd_decompose(parsed, dot, as_json, out);
        if (app.got_subcommand("oracle"))
            return cmd_oracle(parsed, oracle_mode, out);
    } catch (const oracle::SizeGuardError& e) {
        err << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace rmis
