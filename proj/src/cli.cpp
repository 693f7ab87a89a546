#include "ulcg/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ulcg/canonical.hpp"
#include "ulcg/constructions.hpp"
#include "ulcg/decompose.hpp"
#include "ulcg/families.hpp"
#include "ulcg/graph6.hpp"
#include "ulcg/recognizers.hpp"
#include "ulcg/serialize.hpp"
#include "ulcg/verify.hpp"

namespace ulcg {

namespace {

struct GraphInput {
    std::string graph6;
    std::string edges_file;
    std::string named;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph as a graph6 record");
        cmd->add_option("--edges", edges_file, "graph as an edge-list JSON file");
        cmd->add_option("--graph", named, "named generator, e.g. figure1 or theta:2,2,4");
    }

    Graph resolve() const {
        int given = !graph6.empty() + !edges_file.empty() + !named.empty();
        if (given != 1)
            throw CLI::ValidationError("give exactly one of --graph6, --edges, --graph");
        if (!graph6.empty()) return graph6_decode(graph6);
        if (!named.empty()) return parse_graph_spec(named);
        std::ifstream in(edges_file);
        if (!in) throw CLI::ValidationError("cannot open " + edges_file);
        std::stringstream ss;
        ss << in.rdbuf();
        nlohmann::json j = nlohmann::json::parse(ss.str());
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return graph_from_edges(j.at("n").get<int>(), edges);
    }
};

void render_flat(const nlohmann::ordered_json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_flat(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
        out << prefix;
        for (std::size_t pad = prefix.size(); pad < 28; pad++) out << ' ';
        out << " " << j.dump() << "\n";
    }
}

void emit(const nlohmann::ordered_json& j, const std::string& mode, std::ostream& out) {
    if (mode == "table")
        render_flat(j, "", out);
    else
        out << j.dump() << "\n";
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return nlohmann::json::parse(ss.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engines and recognizers for uniquely list colorable graphs"};
    app.require_subcommand(1);

    std::uint64_t budget = search_options{}.budget;
    int threads = 0;
    std::string output_mode = "json";
    app.add_option("--budget", budget, "node-expansion limit per search task")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = hardware default)");
    app.add_option("--output", output_mode, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    GraphInput gin;
    int k = 0;
    std::string f_file, corpus_file, plane_file, check_name, family, op;
    std::string lists_file, order_arg, spec;
    int t_param = 0, vertex_param = 0;

    auto* decode = app.add_subcommand("decode", "decode a graph6 record");
    decode->add_option("--graph6", gin.graph6, "graph6 record")->required();

    auto* encode = app.add_subcommand("encode", "encode a graph as graph6");
    gin.add_flags(encode);

    auto* generate = app.add_subcommand("generate", "build a named graph family");
    generate->add_option("--family", spec, "e.g. cycle:6, theta:2,2,4, figure1")->required();

    auto* mnum = app.add_subcommand("m-number", "least k with no unique k-list coloring");
    gin.add_flags(mnum);

    auto* uklc = app.add_subcommand("uklc", "search a unique k-list coloring witness");
    gin.add_flags(uklc);
    uklc->add_option("--k", k, "list size")->required();

    auto* uflc = app.add_subcommand("uflc", "witness search with per-vertex list sizes");
    gin.add_flags(uflc);
    uflc->add_option("--f", f_file, "JSON file {\"vertex\": size, ...}")->required();

    auto* choosable = app.add_subcommand("choosable", "decide k-choosability");
    gin.add_flags(choosable);
    choosable->add_option("--k", k, "list size")->required();

    auto* chi = app.add_subcommand("chi-list", "list chromatic number");
    gin.add_flags(chi);

    auto* recognize = app.add_subcommand("recognize", "run a fast recognizer");
    gin.add_flags(recognize);
    recognize
        ->add_option("--family", family,
                     "2-choosable | u2lc | theta | 3-list-critical | list-critical | "
                     "edge-list-critical")
        ->required();

    auto* construct = app.add_subcommand("construct", "run a constructive proof");
    gin.add_flags(construct);
    construct->add_option("--op", op, "lemma1 | equality-flist | gstar | duplicate")->required();
    construct->add_option("--k", k, "parameter k for lemma1");
    construct->add_option("--lists", lists_file, "list assignment JSON file (gstar)");
    construct->add_option("--t", t_param, "palette size t (gstar)");
    construct->add_option("--order", order_arg, "comma-separated vertex order (equality-flist)");
    construct->add_option("--vertex", vertex_param, "vertex to duplicate");

    auto* verify = app.add_subcommand("verify", "replay a bound on a graph or corpus");
    gin.add_flags(verify);
    verify
        ->add_option("--check", check_name,
                     "sigmafv | bound | logbnd | 8face | kcolor | edge-mnumber | critical-mnumber")
        ->required();
    verify->add_option("--k", k, "witness list size for sigmafv/kcolor");
    verify->add_option("--plane", plane_file, "plane-graph JSON file (8face)");
    verify->add_option("--corpus", corpus_file, "graph6 corpus, one record per line");

    auto* scan = app.add_subcommand("scan", "scan a planar corpus for conjecture counterexamples");
    scan->add_option("--corpus", corpus_file, "graph6 corpus with planar sidecar flags")
        ->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    search_options opts{budget};
    engine_cache cache;

    try {
        if (decode->parsed()) {
            Graph g = graph6_decode(gin.graph6);
            auto j = graph_to_json(g);
            j["degree_sequence"] = degree_sequence(g);
            emit(j, output_mode, out);
            return 0;
        }
        if (encode->parsed()) {
            nlohmann::ordered_json j;
            j["graph6"] = graph6_encode(gin.resolve());
            emit(j, output_mode, out);
            return 0;
        }
        if (generate->parsed()) {
            emit(graph_to_json(parse_graph_spec(spec)), output_mode, out);
            return 0;
        }
        if (mnum->parsed()) {
            auto res = m_number(gin.resolve(), opts);
            emit(mnumber_to_json(res), output_mode, out);
            return 0;
        }
        if (uklc->parsed()) {
            auto rep = is_uklc(gin.resolve(), k, opts);
            emit(witness_report_to_json(rep), output_mode, out);
            return rep.decided ? 0 : 2;
        }
        if (uflc->parsed()) {
            Graph g = gin.resolve();
            auto f = sizes_from_json(load_json_file(f_file), g.n);
            auto rep = is_uflc(g, f, opts);
            emit(witness_report_to_json(rep), output_mode, out);
            return rep.decided ? 0 : 2;
        }
        if (choosable->parsed()) {
            auto res = is_k_choosable(gin.resolve(), k, opts, &cache);
            emit(choosable_to_json(res, k), output_mode, out);
            return 0;
        }
        if (chi->parsed()) {
            nlohmann::ordered_json j;
            j["schema"] = "ulcg.chilist/1";
            j["chi_list"] = list_chromatic_number(gin.resolve(), opts, &cache);
            emit(j, output_mode, out);
            return 0;
        }
        if (recognize->parsed()) {
            Graph g = gin.resolve();
            nlohmann::ordered_json j;
            if (family == "2-choosable") {
                j["schema"] = "ulcg.recognize/1";
                j["two_choosable"] = is_2_choosable_fast(g);
            } else if (family == "u2lc") {
                j["schema"] = "ulcg.recognize/1";
                j["u2lc"] = is_u2lc_fast(g);
            } else if (family == "theta") {
                j["schema"] = "ulcg.recognize/1";
                auto lengths = recognize_theta(g);
                j["theta"] = lengths ? nlohmann::ordered_json(*lengths)
                                     : nlohmann::ordered_json(nullptr);
            } else if (family == "3-list-critical") {
                j = verdict_to_json(is_3_list_critical_fast(g));
            } else if (family == "list-critical") {
                j["schema"] = "ulcg.recognize/1";
                j["list_critical"] = is_list_critical_bruteforce(g, opts, &cache);
            } else if (family == "edge-list-critical") {
                j["schema"] = "ulcg.recognize/1";
                j["edge_list_critical"] = is_edge_list_critical(g, opts, &cache);
            } else {
                throw CLI::ValidationError("unknown recognizer family: " + family);
            }
            emit(j, output_mode, out);
            return 0;
        }
        if (construct->parsed()) {
            Graph g = gin.resolve();
            nlohmann::ordered_json j;
            j["schema"] = "ulcg.construct/1";
            if (op == "lemma1") {
                if (k < 1) throw CLI::ValidationError("lemma1 needs --k");
                auto L = lemma1_assignment(g, k);
                j["graph6"] = graph6_encode(g);
                j["lists"] = lists_to_json(L);
                j["coloring"] = coloring_to_json(*unique_list_coloring(g, L));
            } else if (op == "equality-flist") {
                std::pair<std::vector<int>, ListAssignment> res =
                    order_arg.empty()
                        ? equality_flist(g)
                        : [&] {
                              std::vector<int> order;
                              std::stringstream ss(order_arg);
                              std::string tok;
                              while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
                              return equality_flist(g, order);
                          }();
                j["graph6"] = graph6_encode(g);
                nlohmann::ordered_json fj = nlohmann::ordered_json::object();
                for (size_t v = 0; v < res.first.size(); v++) fj[std::to_string(v)] = res.first[v];
                j["f"] = fj;
                j["lists"] = lists_to_json(res.second);
                j["sum_f"] = g.n + g.edge_count();
            } else if (op == "gstar") {
                if (lists_file.empty() || t_param < 1)
                    throw CLI::ValidationError("gstar needs --lists and --t");
                auto L = lists_from_json(load_json_file(lists_file), g.n);
                Graph gs = gstar(g, L, t_param);
                j["graph6"] = graph6_encode(gs);
                j["n"] = gs.n;
                j["e"] = gs.edge_count();
                j["uniquely_t_colorable"] = is_uniquely_k_colorable(gs, t_param).has_value();
            } else if (op == "duplicate") {
                Graph d = duplicate_vertex(g, vertex_param);
                j = graph_to_json(d);
                j["schema"] = "ulcg.construct/1";
            } else {
                throw CLI::ValidationError("unknown construction: " + op);
            }
            emit(j, output_mode, out);
            return 0;
        }
        if (verify->parsed()) {
            auto run_check = [&](const Graph& g, const std::string& name) -> CheckOutcome {
                if (check_name == "bound") return check_bound(g, name, opts, &cache);
                if (check_name == "logbnd") return check_logbnd(g, name, opts, &cache);
                if (check_name == "edge-mnumber") return check_edge_mnumber(g, name, opts, &cache);
                if (check_name == "critical-mnumber")
                    return check_critical_mnumber(g, name, opts, &cache);
                if (check_name == "sigmafv" || check_name == "kcolor") {
                    if (k < 1) throw CLI::ValidationError(check_name + " needs --k");
                    auto rep = is_uklc(g, k, opts);
                    if (!rep.decided || !rep.witness)
                        throw precondition_error("no unique k-list coloring witness at k = " +
                                                 std::to_string(k));
                    if (check_name == "sigmafv") return check_sigmafv(g, rep, name);
                    return check_kcolor(g, rep.witness->first, rep.witness->second, k, name);
                }
                throw CLI::ValidationError("unknown check: " + check_name);
            };
            if (check_name == "8face") {
                if (plane_file.empty()) throw CLI::ValidationError("8face needs --plane FILE");
                auto outcome = check_8face(plane_from_json_file(plane_file), plane_file, opts, &cache);
                emit(outcome_to_json(outcome), output_mode, out);
                return 0;
            }
            if (!corpus_file.empty()) {
                for (const auto& entry : read_corpus_file(corpus_file))
                    emit(outcome_to_json(run_check(entry.graph, entry.name())), output_mode, out);
                return 0;
            }
            auto outcome = run_check(gin.resolve(), "");
            emit(outcome_to_json(outcome), output_mode, out);
            return 0;
        }
        if (scan->parsed()) {
            auto entries = read_corpus_file(corpus_file);
            for (const auto& o : scan_conjecture_u3lc_planar(entries, opts))
                emit(outcome_to_json(o), output_mode, out);
            return 0;
        }
    } catch (const m_number_undecided& e) {
        err << "undecided: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "undecided: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace ulcg
