#include "poscodeg/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "poscodeg/catalog.hpp"
#include "poscodeg/constructions.hpp"
#include "poscodeg/embed.hpp"
#include "poscodeg/hypergraph.hpp"
#include "poscodeg/io.hpp"
#include "poscodeg/reproduce.hpp"
#include "poscodeg/search.hpp"
#include "poscodeg/verify.hpp"

namespace poscodeg::cli {

namespace {

using nlohmann::json;

/// A graph argument is either a catalog name or a path to a .hg/.json file.
Hypergraph resolve_graph(const std::string& spec) {
    if (catalog_has(spec)) return catalog_get(spec);
    return load_graph_file(spec);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

json edges_json(const Hypergraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(e);
    return edges;
}

std::string edge_list_str(const Hypergraph& g) {
    std::ostringstream s;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i > 0) s << ' ';
        s << '(' << g.edges[i][0] << ',' << g.edges[i][1] << ','
          << g.edges[i][2] << ')';
    }
    return s.str();
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void emit_graph(std::ostream& out, const Hypergraph& g, bool as_json) {
    if (as_json) {
        emit_json(out, graph_to_json(g));
    } else {
        write_hg(out, g);
    }
}

int run_delta(std::ostream& out, bool as_json, const std::string& graph_spec) {
    const Hypergraph h = resolve_graph(graph_spec);
    const int delta = min_positive_codegree(h);
    if (as_json) {
        emit_json(out, json{{"command", "delta"},
                            {"delta", delta},
                            {"edges", h.edges.size()},
                            {"n", h.n}});
    } else {
        out << delta << '\n';
    }
    return 0;
}

int run_free(std::ostream& out, bool as_json, const std::string& f_spec,
             const std::string& graph_spec) {
    const Hypergraph f = resolve_graph(f_spec);
    const Hypergraph h = resolve_graph(graph_spec);
    const auto emb = contains_copy(f, h);
    if (as_json) {
        json j{{"command", "free"}, {"free", !emb.has_value()}};
        j["embedding"] = emb ? json(emb->map) : json(nullptr);
        emit_json(out, j);
    } else if (emb) {
        out << "contains:";
        for (size_t v = 0; v < emb->map.size(); ++v)
            out << ' ' << v << "->" << emb->map[v];
        out << '\n';
    } else {
        out << "free\n";
    }
    return emb ? 1 : 0;
}

int run_count(std::ostream& out, bool as_json, const std::string& f_spec,
              const std::string& graph_spec) {
    const Hypergraph f = resolve_graph(f_spec);
    const Hypergraph h = resolve_graph(graph_spec);
    const long long copies = count_copies(f, h);
    if (as_json) {
        emit_json(out, json{{"command", "count"}, {"copies", copies}});
    } else {
        out << copies << '\n';
    }
    return 0;
}

int run_search(std::ostream& out, bool as_json, const std::string& f_spec,
               int n, long long budget, int jobs) {
    const Hypergraph f = resolve_graph(f_spec);
    SearchOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    const SearchReport rep = copex_exact(n, f, f_spec, opts);
    if (as_json) {
        json witnesses = json::array();
        for (const CanonicalForm& w : rep.witnesses)
            witnesses.push_back(edges_json(canonical_to_graph(w)));
        emit_json(out, json{{"command", "search"},
                            {"exhaustive", rep.exhaustive},
                            {"forbidden", rep.forbidden},
                            {"n", rep.n},
                            {"nodes_explored", rep.nodes_explored},
                            {"value", rep.value},
                            {"witness_total", rep.witness_total},
                            {"witnesses", witnesses}});
    } else {
        out << "n " << rep.n << '\n';
        out << "forbidden " << rep.forbidden << '\n';
        out << "value " << rep.value << '\n';
        out << "exhaustive " << yesno(rep.exhaustive) << '\n';
        out << "nodes_explored " << rep.nodes_explored << '\n';
        out << "witness_total " << rep.witness_total << '\n';
        for (const CanonicalForm& w : rep.witnesses)
            out << "witness " << edge_list_str(canonical_to_graph(w)) << '\n';
    }
    return rep.exhaustive ? 0 : 2;
}

int run_verify(std::ostream& out, bool as_json, const std::string& lemma,
               const std::string& graph_spec, const std::string& f_spec,
               const std::vector<int>& set, bool set_given, int z1, int z2,
               const std::vector<int>& n_list) {
    auto need_graph = [&]() -> Hypergraph {
        if (graph_spec.empty()) {
            throw std::invalid_argument("the " + lemma + " check needs -H");
        }
        return resolve_graph(graph_spec);
    };
    if (lemma == "edge-bound") {
        const EdgeBoundReport rep = edge_bound_check(need_graph());
        if (as_json) {
            emit_json(out, json{{"command", "verify"},
                                {"lemma", lemma},
                                {"c", rational_str(rep.c)},
                                {"edges", rep.lhs},
                                {"bound", rational_str(rep.rhs)},
                                {"holds", rep.holds}});
        } else {
            out << "lemma " << lemma << '\n'
                << "c " << rational_str(rep.c) << '\n'
                << "edges " << rep.lhs << '\n'
                << "bound " << rational_str(rep.rhs) << '\n'
                << "holds " << yesno(rep.holds) << '\n';
        }
        return rep.holds ? 0 : 1;
    }
    if (lemma == "independent-set") {
        const Hypergraph h = need_graph();
        if (set_given) {
            const IndependentSetBoundReport rep =
                independent_set_bound_check(h, set);
            if (as_json) {
                emit_json(out, json{{"command", "verify"},
                                    {"lemma", lemma},
                                    {"set", rep.set},
                                    {"delta", rep.delta},
                                    {"bound", rep.bound},
                                    {"holds", rep.holds}});
            } else {
                out << "lemma " << lemma << '\n' << "set";
                for (int v : rep.set) out << ' ' << v;
                out << '\n'
                    << "delta " << rep.delta << '\n'
                    << "bound " << rep.bound << '\n'
                    << "holds " << yesno(rep.holds) << '\n';
            }
            return rep.holds ? 0 : 1;
        }
        int violations = 0;
        const auto sets = greedy_maximal_independent_sets(h);
        for (const auto& s : sets) {
            if (!independent_set_bound_check(h, s).holds) ++violations;
        }
        if (as_json) {
            emit_json(out, json{{"command", "verify"},
                                {"lemma", lemma},
                                {"sets", sets.size()},
                                {"violations", violations},
                                {"holds", violations == 0}});
        } else {
            out << "lemma " << lemma << '\n'
                << "sets " << sets.size() << '\n'
                << "violations " << violations << '\n'
                << "holds " << yesno(violations == 0) << '\n';
        }
        return violations == 0 ? 0 : 1;
    }
    if (lemma == "supersaturation") {
        const SupersaturationReport rep = supersaturation_check(need_graph());
        if (as_json) {
            emit_json(out, json{{"command", "verify"},
                                {"lemma", lemma},
                                {"epsilon", rational_str(rep.epsilon)},
                                {"min_per_edge", rep.min_per_edge},
                                {"per_edge_bound", rational_str(rep.per_edge_bound)},
                                {"total_copies", rep.total_copies},
                                {"total_bound", rational_str(rep.total_bound)},
                                {"holds", rep.holds}});
        } else {
            out << "lemma " << lemma << '\n'
                << "epsilon " << rational_str(rep.epsilon) << '\n'
                << "min_per_edge " << rep.min_per_edge << '\n'
                << "per_edge_bound " << rational_str(rep.per_edge_bound) << '\n'
                << "total_copies " << rep.total_copies << '\n'
                << "total_bound " << rational_str(rep.total_bound) << '\n'
                << "holds " << yesno(rep.holds) << '\n';
        }
        return rep.holds ? 0 : 1;
    }
    if (lemma == "t-statistic") {
        const TStatReport rep = t_statistic(need_graph());
        if (as_json) {
            emit_json(out, json{{"command", "verify"},
                                {"lemma", lemma},
                                {"t", rep.t},
                                {"positive_pairs", rep.positive_pairs},
                                {"lower_bound", rep.lower_bound},
                                {"holds", rep.holds}});
        } else {
            out << "lemma " << lemma << '\n'
                << "t " << rep.t << '\n'
                << "positive_pairs " << rep.positive_pairs << '\n'
                << "lower_bound " << rep.lower_bound << '\n'
                << "holds " << yesno(rep.holds) << '\n';
        }
        return rep.holds ? 0 : 1;
    }
    if (lemma == "link-c4") {
        if (z1 < 0 || z2 < 0) {
            throw std::invalid_argument(
                "the link-c4 check needs --z1 and --z2");
        }
        const bool free = link_c4_free(need_graph(), z1, z2);
        if (as_json) {
            emit_json(out, json{{"command", "verify"},
                                {"lemma", lemma},
                                {"z1", z1},
                                {"z2", z2},
                                {"c4_free", free},
                                {"holds", free}});
        } else {
            out << "lemma " << lemma << '\n'
                << "z1 " << z1 << '\n'
                << "z2 " << z2 << '\n'
                << "c4_free " << yesno(free) << '\n';
        }
        return free ? 0 : 1;
    }
    // dichotomy
    if (f_spec.empty()) {
        throw std::invalid_argument("the dichotomy probe needs -F");
    }
    const Hypergraph f = resolve_graph(f_spec);
    const DichotomyReport rep = dichotomy_probe(f, n_list);
    bool all_certified = true;
    for (const DichotomyEntry& e : rep.entries)
        all_certified = all_certified && e.certified;
    if (as_json) {
        json j{{"command", "verify"},
               {"lemma", lemma},
               {"three_partite", rep.three_partite}};
        if (rep.partition) {
            j["partition"] = rep.partition->classes;
        } else {
            json entries = json::array();
            for (const DichotomyEntry& e : rep.entries) {
                entries.push_back(json{{"n", e.n},
                                       {"delta", e.delta},
                                       {"free", e.f_free},
                                       {"certified", e.certified}});
            }
            j["entries"] = entries;
        }
        j["holds"] = all_certified;
        emit_json(out, j);
    } else {
        out << "lemma " << lemma << '\n'
            << "three_partite " << yesno(rep.three_partite) << '\n';
        if (rep.partition) {
            out << "partition";
            for (size_t i = 0; i < rep.partition->classes.size(); ++i) {
                out << (i == 0 ? " " : " | ");
                const auto& cls = rep.partition->classes[i];
                for (size_t v = 0; v < cls.size(); ++v)
                    out << (v == 0 ? "" : ",") << cls[v];
            }
            out << '\n';
        } else {
            for (const DichotomyEntry& e : rep.entries) {
                out << "n " << e.n << " delta " << e.delta << " free "
                    << yesno(e.f_free) << " certified "
                    << yesno(e.certified) << '\n';
            }
        }
    }
    return all_certified ? 0 : 1;
}

int run_table(std::ostream& out, bool as_json, int n) {
    if (as_json) {
        json rows = json::array();
        for (const TableRow& row : table_rows(n)) {
            rows.push_back(json{{"name", row.name},
                                {"construction", row.construction},
                                {"delta", row.delta},
                                {"achieved", rational_str(row.achieved)},
                                {"gamma_lower", rational_str(row.gamma_lower)},
                                {"gamma_upper", rational_str(row.gamma_upper)}});
        }
        emit_json(out, json{{"command", "table"}, {"n", n}, {"rows", rows}});
    } else {
        out << table_emit(n);
    }
    return 0;
}

int run_catalog(std::ostream& out, bool as_json, const std::string& name) {
    if (name.empty()) {
        if (as_json) {
            json graphs = json::array();
            for (const NamedGraph& entry : catalog_entries()) {
                graphs.push_back(json{{"name", entry.name},
                                      {"n", entry.graph.n},
                                      {"m", entry.graph.edges.size()},
                                      {"source", entry.source}});
            }
            emit_json(out, json{{"command", "catalog"}, {"graphs", graphs}});
        } else {
            for (const NamedGraph& entry : catalog_entries()) {
                out << entry.name << "  n=" << entry.graph.n
                    << " m=" << entry.graph.edges.size() << "  "
                    << entry.source << '\n';
            }
        }
        return 0;
    }
    const Hypergraph& g = catalog_get(name);
    if (as_json) {
        json j = graph_to_json(g);
        for (const NamedGraph& entry : catalog_entries()) {
            if (entry.name == name) j["source"] = entry.source;
        }
        j["name"] = name;
        emit_json(out, j);
    } else {
        write_hg(out, g);
    }
    return 0;
}

int run_reproduce(std::ostream& out, bool as_json, long long probe_budget,
                  int jobs) {
    ReproduceOptions opts;
    opts.probe_budget = probe_budget;
    opts.jobs = jobs;
    const auto results = reproduce_all(opts);
    const bool passed = reproduce_passed(results);
    if (as_json) {
        json criteria = json::array();
        for (const CriterionResult& r : results) {
            criteria.push_back(json{{"name", r.name},
                                    {"passed", r.passed},
                                    {"informational", r.informational},
                                    {"detail", r.detail}});
        }
        emit_json(out,
                  json{{"command", "reproduce"},
                       {"criteria", criteria},
                       {"passed", passed}});
    } else {
        for (const CriterionResult& r : results) {
            const char* tag =
                r.informational ? (r.passed ? "INFO" : "FAIL")
                                : (r.passed ? "PASS" : "FAIL");
            out << tag << "  " << r.name << '\n';
            if (!r.detail.empty()) out << "      " << r.detail << '\n';
        }
        out << (passed ? "all criteria passed" : "SUITE FAILED") << '\n';
    }
    return passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"minimum positive co-degree toolkit for 3-uniform "
                 "hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    int jobs = 1;
    app.add_option("--jobs", jobs,
                   "worker threads; any value gives identical output")
        ->envname("POSCODEG_JOBS");

    int exit_code = 0;

    // delta
    auto* cmd_delta =
        app.add_subcommand("delta", "minimum positive co-degree of a graph");
    std::string delta_graph;
    cmd_delta->add_option("-H,--graph", delta_graph,
                          "catalog name or .hg/.json file")
        ->required();
    cmd_delta->callback(
        [&] { exit_code = run_delta(out, as_json, delta_graph); });

    // free
    auto* cmd_free = app.add_subcommand(
        "free", "test whether a graph avoids a forbidden graph");
    std::string free_f, free_graph;
    cmd_free->add_option("-F,--forbidden", free_f,
                         "catalog name or .hg/.json file")
        ->required();
    cmd_free->add_option("-H,--graph", free_graph,
                         "catalog name or .hg/.json file")
        ->required();
    cmd_free->callback(
        [&] { exit_code = run_free(out, as_json, free_f, free_graph); });

    // count
    auto* cmd_count =
        app.add_subcommand("count", "number of unlabeled copies of F in H");
    std::string count_f, count_graph;
    cmd_count->add_option("-F,--forbidden", count_f,
                          "catalog name or .hg/.json file")
        ->required();
    cmd_count->add_option("-H,--graph", count_graph,
                          "catalog name or .hg/.json file")
        ->required();
    cmd_count->callback(
        [&] { exit_code = run_count(out, as_json, count_f, count_graph); });

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "emit a construction");
    cmd_gen->require_subcommand(1);
    auto* gen_balanced = cmd_gen->add_subcommand(
        "balanced", "balanced complete k-partite graph");
    int gen_n = 0, gen_k = 0;
    gen_balanced->add_option("--n", gen_n, "vertex count")->required();
    gen_balanced->add_option("--k", gen_k, "class count (>= 3)")->required();
    gen_balanced->callback([&] {
        emit_graph(out, balanced_complete_k_partite(gen_n, gen_k), as_json);
    });
    auto* gen_oneway = cmd_gen->add_subcommand(
        "oneway", "complete one-way bipartite graph (edges = 2 from X, 1 "
                  "from Y)");
    int gen_x = 0, gen_y = 0;
    gen_oneway->add_option("--x", gen_x, "size of X (>= 2)")->required();
    gen_oneway->add_option("--y", gen_y, "size of Y (>= 1)")->required();
    gen_oneway->callback([&] {
        emit_graph(out, one_way_bipartite_complete(gen_x, gen_y), as_json);
    });
    auto* gen_blowup = cmd_gen->add_subcommand("blowup", "blow-up of a graph");
    std::string blowup_base;
    std::vector<int> blowup_sizes;
    gen_blowup->add_option("--base", blowup_base,
                           "catalog name or .hg/.json file")
        ->required();
    gen_blowup
        ->add_option("--sizes", blowup_sizes,
                     "comma-separated class sizes, one per vertex")
        ->required()
        ->delimiter(',');
    gen_blowup->callback([&] {
        emit_graph(out, blow_up(resolve_graph(blowup_base), blowup_sizes),
                   as_json);
    });
    auto* gen_circle = cmd_gen->add_subcommand(
        "circle", "triples of circle points containing the center");
    std::vector<std::string> circle_angles;
    gen_circle
        ->add_option("--angles", circle_angles,
                     "comma-separated angles in degrees (1e-6 grid)")
        ->required()
        ->delimiter(',');
    gen_circle->callback([&] {
        std::vector<std::int64_t> micro;
        micro.reserve(circle_angles.size());
        for (const std::string& a : circle_angles)
            micro.push_back(parse_angle_microdeg(a));
        emit_graph(out, circle_construction(micro), as_json);
    });
    auto* gen_k222 = cmd_gen->add_subcommand(
        "k222", "tripartite point-line incidence construction");
    int k222_q = 0, k222_x = 0;
    gen_k222->add_option("--q", k222_q, "prime order")->required();
    gen_k222->add_option("--x", k222_x, "size of the X class (>= 2)")
        ->required();
    gen_k222->callback(
        [&] { emit_graph(out, k222_tripartite(k222_q, k222_x), as_json); });
    auto* gen_jk = cmd_gen->add_subcommand(
        "jk", "apex vertex joined to all pairs of a k-set");
    int jk_k = 0;
    gen_jk->add_option("--k", jk_k, "size of the base set (>= 2)")->required();
    gen_jk->callback([&] { emit_graph(out, j_k(jk_k), as_json); });

    // search
    auto* cmd_search = app.add_subcommand(
        "search", "exact maximum of the minimum positive co-degree over "
                  "F-free graphs");
    std::string search_f;
    int search_n = 0;
    long long search_budget = 1'000'000'000;
    cmd_search->add_option("-F,--forbidden", search_f,
                           "catalog name or .hg/.json file")
        ->required();
    cmd_search->add_option("--n", search_n, "vertex count (<= 7)")->required();
    cmd_search->add_option("--budget", search_budget,
                           "node cap per level (binding only at n = 7)");
    cmd_search->callback([&] {
        exit_code =
            run_search(out, as_json, search_f, search_n, search_budget, jobs);
    });

    // verify
    auto* cmd_verify =
        app.add_subcommand("verify", "check one lemma on concrete data");
    std::string verify_lemma, verify_graph, verify_f;
    std::vector<int> verify_set, verify_n_list{9, 12, 15};
    int verify_z1 = -1, verify_z2 = -1;
    cmd_verify
        ->add_option("lemma", verify_lemma,
                     "edge-bound | independent-set | supersaturation | "
                     "t-statistic | link-c4 | dichotomy")
        ->required()
        ->check(CLI::IsMember({"edge-bound", "independent-set",
                               "supersaturation", "t-statistic", "link-c4",
                               "dichotomy"}));
    cmd_verify->add_option("-H,--graph", verify_graph,
                           "catalog name or .hg/.json file");
    cmd_verify->add_option("-F,--forbidden", verify_f,
                           "forbidden graph for the dichotomy probe");
    auto* set_opt =
        cmd_verify
            ->add_option("--set", verify_set,
                         "comma-separated vertex set (independent-set)")
            ->delimiter(',');
    cmd_verify->add_option("--z1", verify_z1, "first link vertex");
    cmd_verify->add_option("--z2", verify_z2, "second link vertex");
    cmd_verify
        ->add_option("--n-list", verify_n_list,
                     "comma-separated sizes for the dichotomy probe")
        ->delimiter(',');
    cmd_verify->callback([&] {
        exit_code = run_verify(out, as_json, verify_lemma, verify_graph,
                               verify_f, verify_set, set_opt->count() > 0,
                               verify_z1, verify_z2, verify_n_list);
    });

    // table
    auto* cmd_table = app.add_subcommand(
        "table", "construction ratios against the reference density bounds");
    int table_n = 0;
    cmd_table->add_option("--n", table_n, "vertex count (>= 6)")->required();
    cmd_table->callback([&] { exit_code = run_table(out, as_json, table_n); });

    // catalog
    auto* cmd_catalog = app.add_subcommand(
        "catalog", "list the named graphs, or print one in HG format");
    std::string catalog_name;
    cmd_catalog->add_option("name", catalog_name, "catalog graph name");
    cmd_catalog->callback(
        [&] { exit_code = run_catalog(out, as_json, catalog_name); });

    // reproduce
    auto* cmd_reproduce = app.add_subcommand(
        "reproduce", "run the full acceptance suite and print the matrix");
    long long reproduce_budget = ReproduceOptions{}.probe_budget;
    cmd_reproduce->add_option("--budget", reproduce_budget,
                              "node cap per level of the n = 7 probes");
    cmd_reproduce->callback([&] {
        exit_code = run_reproduce(out, as_json, reproduce_budget, jobs);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    }
    return exit_code;
}

}  // namespace poscodeg::cli
