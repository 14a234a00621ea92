// domrec: command-line surface for the domination / reconfiguration toolkit.
//
// Exit codes: 0 success, 2 input parse error, 3 unknown variant,
// 4 undefined or infinite parameter, 5 bad host, 6 parameter mismatch,
// 1 anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "domrec/constructions.hpp"
#include "domrec/reconfig.hpp"
#include "domrec/solvers.hpp"
#include "domrec/verify.hpp"

using namespace domrec;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::malformed_header:
        case Errc::truncated_body:
        case Errc::non_canonical_padding:
        case Errc::parse_error:
        case Errc::endpoint_out_of_range:
        case Errc::self_loop:
        case Errc::duplicate_label:
        case Errc::unsupported_size:
            return 2;
        case Errc::unknown_variant:
        case Errc::no_construction_for_variant:
            return 3;
        case Errc::parameter_undefined_or_infinite:
            return 4;
        case Errc::empty_host:
            return 5;
        case Errc::parameter_mismatch:
            return 6;
        default:
            return 1;
    }
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_all(path);
    if (format == "edges") return Graph::read_edge_list(text);
    return Graph::parse_graph6(text);
}

DomVariant need_variant(const std::string& name) {
    auto v = parse_variant(name);
    if (!v) throw Error(Errc::unknown_variant, "unknown variant \"" + name + "\"");
    return *v;
}

void apply_threads(int threads_flag) {
    if (threads_flag > 0) {
        set_solver_threads(threads_flag);
        return;
    }
    if (const char* env = std::getenv("DOMREC_THREADS"))
        set_solver_threads(std::atoi(env));
}

nlohmann::json set_json(const Graph& g, const VertexSet& s) {
    nlohmann::json j;
    j["indices"] = s.members();
    std::vector<std::string> labels;
    s.for_each([&](int v) { labels.push_back(g.display(v)); });
    j["labels"] = labels;
    return j;
}

ReconfigGraph build_requested_graph(const Graph& g, const std::string& variant,
                                    const std::string& model, int k, bool k_set) {
    if (variant == "k-dom") {
        if (!k_set) throw Error(Errc::invalid_argument, "k-dom requires --k");
        return build_k_dominating_graph(g, k);
    }
    if (k_set) throw Error(Errc::invalid_argument, "--k only applies to --variant k-dom");
    AdjacencyModel m = model == "jump" ? AdjacencyModel::jump : AdjacencyModel::slide;
    return build_variant_graph(g, need_variant(variant), m);
}

nlohmann::json rgraph_json(const ReconfigGraph& r) {
    nlohmann::json j;
    j["model"] = std::string(model_name(r.model));
    if (r.model == AdjacencyModel::add_remove) j["k"] = r.k;
    nlohmann::json nodes = nlohmann::json::array();
    for (const VertexSet& s : r.nodes.sets) nodes.push_back(set_json(r.base, s));
    j["nodes"] = nodes;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : r.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination variants, reconfiguration graphs, and realizability verification"};
    app.require_subcommand(1);
    // --h names a host graph below, so help stays on --help alone
    app.set_help_flag("--help", "print help");
    int threads = 0;
    app.add_option("--threads", threads, "solver worker cap (default: DOMREC_THREADS or 1)");

    struct {
        std::string input = "-", format = "g6", variant, model = "slide", out, target, host;
        int k = 0, extra = 0;
        bool json = false, labels = false, stuck = false, frozen = false;
    } o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "input graph path, - for stdin");
        sub->add_option("--format", o.format, "input format")
            ->check(CLI::IsMember({"g6", "edges"}));
    };

    CLI::App* cmd_param = app.add_subcommand("param", "print a domination parameter");
    add_input(cmd_param);
    cmd_param->add_option("--variant", o.variant)->required();

    CLI::App* cmd_sets = app.add_subcommand("sets", "enumerate all optimal sets");
    add_input(cmd_sets);
    cmd_sets->add_option("--variant", o.variant)->required();
    cmd_sets->add_flag("--json", o.json);

    CLI::App* cmd_rgraph = app.add_subcommand("rgraph", "build a reconfiguration graph");
    add_input(cmd_rgraph);
    cmd_rgraph->add_option("--variant", o.variant)->required();
    cmd_rgraph->add_option("--model", o.model)->check(CLI::IsMember({"slide", "jump"}));
    CLI::Option* rg_k = cmd_rgraph->add_option("--k", o.k, "cardinality cap (k-dom only)");
    cmd_rgraph->add_option("--out", o.out)->check(CLI::IsMember({"dot", "g6", "json"}));

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit a realizability construction");
    cmd_construct->set_help_flag("--help", "print help");
    cmd_construct->add_option("--target", o.target)
        ->required()
        ->check(CLI::IsMember({"connelly", "id", "locating", "upper"}));
    cmd_construct->add_option("--h", o.host, "host graph H")->required();
    cmd_construct->add_option("--format", o.format)->check(CLI::IsMember({"g6", "edges"}));
    cmd_construct->add_option("--extra", o.extra, "attach this many extra gadget copies");
    cmd_construct->add_option("--out", o.out)->check(CLI::IsMember({"g6", "dot"}));
    cmd_construct->add_flag("--labels", o.labels, "also print the label sidecar JSON");

    CLI::App* cmd_verify = app.add_subcommand("verify", "verify realizability for a host graph");
    cmd_verify->set_help_flag("--help", "print help");
    cmd_verify->add_option("--h", o.host, "host graph H")->required();
    cmd_verify->add_option("--format", o.format)->check(CLI::IsMember({"g6", "edges"}));
    cmd_verify->add_option("--variant", o.variant)->required();

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "connectivity / stuck / frozen report");
    add_input(cmd_analyze);
    cmd_analyze->add_option("--variant", o.variant)->required();
    cmd_analyze->add_option("--model", o.model)->check(CLI::IsMember({"slide", "jump"}));
    CLI::Option* an_k = cmd_analyze->add_option("--k", o.k, "cardinality cap (k-dom only)");
    cmd_analyze->add_flag("--stuck", o.stuck, "include per-node stuck vertices");
    cmd_analyze->add_flag("--frozen", o.frozen, "include per-node frozen vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        apply_threads(threads);
        if (*cmd_param) {
            Graph g = load_graph(o.input, o.format);
            std::cout << parameter(g, need_variant(o.variant)).to_string() << "\n";
        } else if (*cmd_sets) {
            Graph g = load_graph(o.input, o.format);
            OptimalResult res = bb_optimal(g, need_variant(o.variant));
            if (o.json) {
                nlohmann::json j = nlohmann::json::array();
                for (const VertexSet& s : res.family.sets) j.push_back(set_json(g, s));
                std::cout << j.dump(2) << "\n";
            } else {
                for (const VertexSet& s : res.family.sets) std::cout << g.format_set(s) << "\n";
            }
        } else if (*cmd_rgraph) {
            Graph g = load_graph(o.input, o.format);
            ReconfigGraph r = build_requested_graph(g, o.variant, o.model, o.k, !rg_k->empty());
            if (o.out == "g6")
                std::cout << to_graph(r).to_graph6() << "\n";
            else if (o.out == "json")
                std::cout << rgraph_json(r).dump(2) << "\n";
            else
                std::cout << to_dot(r);
        } else if (*cmd_construct) {
            Graph h = load_graph(o.host, o.format);
            Construction c;
            if (o.target == "connelly")
                c = construct_connelly(h);
            else if (o.target == "id")
                c = construct_id(h);
            else if (o.target == "locating")
                c = construct_locating(h);
            else
                c = construct_upper(h);
            if (o.extra > 0) c = multiply(c, o.extra);
            if (o.out == "dot")
                std::cout << c.graph.to_dot();
            else
                std::cout << c.graph.to_graph6() << "\n";
            if (o.labels) {
                nlohmann::json j;
                for (int v = 0; v < c.graph.vertex_count(); ++v) j[c.graph.label(v)] = v;
                std::cout << j.dump(2) << "\n";
            }
        } else if (*cmd_verify) {
            Graph h = load_graph(o.host, o.format);
            Report rep = verify_realizability(h, need_variant(o.variant));
            std::cout << report_json(rep);
            return rep.isomorphic ? 0 : 1;
        } else if (*cmd_analyze) {
            Graph g = load_graph(o.input, o.format);
            ReconfigGraph r = build_requested_graph(g, o.variant, o.model, o.k, !an_k->empty());
            ReconfigAnalysis a = analyze(r);
            nlohmann::json j = rgraph_json(r);
            j["components"] = a.component_count;
            j["component_of"] = a.component_of;
            j["component_sizes"] = a.component_sizes;
            j["diameters"] = a.component_diameters;
            if (o.stuck) {
                nlohmann::json st = nlohmann::json::array();
                for (int i = 0; i < r.node_count(); ++i)
                    st.push_back(set_json(r.base, stuck_vertices(r, i)));
                j["stuck"] = st;
            }
            if (o.frozen) {
                nlohmann::json fr = nlohmann::json::array();
                for (const VertexSet& s : frozen_vertices(r)) fr.push_back(set_json(r.base, s));
                j["frozen"] = fr;
            }
            std::cout << j.dump(2) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "domrec: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "domrec: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
