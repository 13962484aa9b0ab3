// Command-line front door: validate instances, run the capacity-2 PEF
// solver, check fairness notions of a given assignment, decide EF/PEF
// existence by brute force, materialize the clique reductions, generate
// instances, and benchmark the solver.
//
// Exit codes: 0 success / property holds / witness found;
//             1 property fails / no witness;
//             2 input error;
//             3 enumeration limit exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairshare/fairness.hpp"
#include "fairshare/generators.hpp"
#include "fairshare/json_io.hpp"
#include "fairshare/oracle.hpp"
#include "fairshare/reductions.hpp"
#include "fairshare/solver.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw fairshare::ValidationError(fairshare::ValidationError::Code::ParseError,
                                         "cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw fairshare::ValidationError(fairshare::ValidationError::Code::ParseError,
                                         "cannot write file '" + path + "'");
    }
    out << content << "\n";
}

std::string render_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::string out;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return out;
}

/// Text rendering of a FairnessReport; violating pairs and the minimum
/// PROP ratio are printed as exact rationals.
std::string render_report_text(const fairshare::FairnessReport& report) {
    std::ostringstream out;
    if (report.has_violations) {
        out << "EF: " << (report.ef() ? "yes" : "no") << " / PEF: "
            << (report.pef() ? "yes" : "no") << "\n";
        if (!report.ef_violations.empty()) {
            out << "EF violations: " << render_pairs(report.ef_violations) << "\n";
        }
        if (!report.pef_violations.empty()) {
            out << "PEF violations: " << render_pairs(report.pef_violations) << "\n";
        }
    }
    if (report.has_prop) {
        out << "PROP: " << (report.is_prop() ? "yes" : "no") << "\n";
        if (report.min_prop_ratio) {
            out << "min PROP ratio = " << report.min_prop_ratio->str() << "\n";
        } else {
            out << "min PROP ratio = satisfied (all PROP shares are zero)\n";
        }
    }
    return out.str();
}

struct CheckOptions {
    std::string instance_path;
    std::string assignment_path;
    std::string notion;
    bool json = false;
};

int run_check(const CheckOptions& opts) {
    fairshare::Instance inst = fairshare::instance_from_json(read_file(opts.instance_path));
    fairshare::Assignment x = fairshare::assignment_from_json(read_file(opts.assignment_path));

    if (opts.notion == "ef" || opts.notion == "pef") {
        fairshare::FairnessReport report = opts.notion == "ef" ? fairshare::check_ef(inst, x)
                                                               : fairshare::check_pef(inst, x);
        std::cout << (opts.json ? fairshare::report_to_json(report) + "\n"
                                : render_report_text(report));
        bool holds = opts.notion == "ef" ? report.ef() : report.pef();
        return holds ? kExitHolds : kExitFails;
    }
    if (opts.notion == "prop") {
        fairshare::FairnessReport report = fairshare::check_prop(inst, x);
        std::cout << (opts.json ? fairshare::report_to_json(report) + "\n"
                                : render_report_text(report));
        return report.is_prop() ? kExitHolds : kExitFails;
    }
    if (opts.notion == "pprop") {
        bool all_hold = true;
        nlohmann::json agents = nlohmann::json::array();
        std::ostringstream text;
        for (int i = 0; i < inst.n; ++i) {
            auto result = fairshare::check_pareto_prop(inst, x, i);
            all_hold = all_hold && (result.cond1 || result.cond2);
            if (opts.json) {
                agents.push_back({{"agent", i},
                                  {"cond1", result.cond1},
                                  {"cond1_count", result.cond1_count},
                                  {"cond2", result.cond2},
                                  {"cond2_threshold", result.cond2_threshold}});
            } else {
                text << "agent " << i << ": cond1=" << (result.cond1 ? "yes" : "no")
                     << " (rank count " << result.cond1_count << "/" << inst.m
                     << "), cond2=" << (result.cond2 ? "yes" : "no") << " (threshold "
                     << result.cond2_threshold << ")\n";
            }
        }
        if (opts.json) {
            std::cout << nlohmann::json{{"agents", agents}, {"pprop", all_hold}}.dump(2) << "\n";
        } else {
            text << "Pareto-PROP: " << (all_hold ? "yes" : "no") << "\n";
            std::cout << text.str();
        }
        return all_hold ? kExitHolds : kExitFails;
    }
    throw fairshare::ValidationError(fairshare::ValidationError::Code::ParseError,
                                     "unknown notion '" + opts.notion + "'");
}

int run_bench(int trials, unsigned long long seed, int max_m, const std::string& edge_prob,
              int value_max) {
    fairshare::Rational p = fairshare::Rational::parse(edge_prob);
    std::cout << "seed,n,m,case1,case2,case3,case4,wall_ms,pef_ok\n";
    for (int t = 0; t < trials; ++t) {
        int m = 2 + (max_m > 2 ? t % (max_m - 1) : 0);
        unsigned long long trial_seed = seed + static_cast<unsigned long long>(t);
        fairshare::Instance inst = fairshare::random_dorm(trial_seed, m, 2, p, value_max);

        auto start = std::chrono::steady_clock::now();
        fairshare::SolveResult result = fairshare::solve_pef_cap2(inst);
        auto stop = std::chrono::steady_clock::now();
        double wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

        int cases[5] = {0, 0, 0, 0, 0};
        for (const auto& round : result.trace.rounds) {
            ++cases[round.case_id];
        }
        bool pef_ok = fairshare::check_pef(inst, result.assignment).pef();
        std::cout << trial_seed << "," << inst.n << "," << m << "," << cases[1] << ","
                  << cases[2] << "," << cases[3] << "," << cases[4] << "," << wall_ms << ","
                  << (pef_ok ? 1 : 0) << "\n";
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fairshare: solver and verifier for fair resource sharing with externalities"};
    app.require_subcommand(1);

    // validate
    std::string validate_path;
    auto* cmd_validate = app.add_subcommand("validate", "Validate an instance file");
    cmd_validate->add_option("file", validate_path, "Instance JSON file")->required();

    // solve
    std::string solve_instance;
    std::string solve_output;
    bool solve_trace = false;
    auto* cmd_solve =
        app.add_subcommand("solve", "Compute a PEF assignment (capacity-2 dorm sharing)");
    cmd_solve->add_option("--instance", solve_instance, "Instance JSON file")->required();
    cmd_solve->add_option("-o,--output", solve_output, "Output file (default stdout)");
    cmd_solve->add_flag("--trace", solve_trace, "Include the solve trace in the output");

    // check
    CheckOptions check_opts;
    auto* cmd_check = app.add_subcommand("check", "Check a fairness notion of an assignment");
    cmd_check->add_option("--instance", check_opts.instance_path, "Instance JSON file")
        ->required();
    cmd_check->add_option("--assignment", check_opts.assignment_path, "Assignment JSON file")
        ->required();
    cmd_check->add_option("--notion", check_opts.notion, "ef | pef | prop | pprop")->required();
    cmd_check->add_flag("--json", check_opts.json, "Emit the report as JSON");

    // decide
    std::string decide_instance;
    std::string decide_notion;
    unsigned long long decide_limit = fairshare::kDefaultEnumerationLimit;
    auto* cmd_decide =
        app.add_subcommand("decide", "Decide EF/PEF existence by exhaustive search");
    cmd_decide->add_option("--instance", decide_instance, "Instance JSON file")->required();
    cmd_decide->add_option("--notion", decide_notion, "ef | pef")->required();
    cmd_decide->add_option("--limit", decide_limit, "Enumeration limit (default 10^7)");

    // reduce
    std::string reduce_graph;
    std::string reduce_target;
    std::string reduce_output;
    int reduce_k = 0;
    auto* cmd_reduce =
        app.add_subcommand("reduce", "Build the clique-to-EF/PEF hardness instance");
    cmd_reduce->add_option("--graph", reduce_graph, "Graph JSON file")->required();
    cmd_reduce->add_option("--k", reduce_k, "Clique size target")->required();
    cmd_reduce->add_option("--target", reduce_target, "ef | pef")->required();
    cmd_reduce->add_option("-o,--output", reduce_output, "Output file (default stdout)");

    // gen
    std::string gen_kind;
    std::string gen_output;
    std::string gen_p = "1/2";
    std::string gen_t = "3";
    unsigned long long gen_seed = 1;
    int gen_m = 2;
    int gen_c = 2;
    int gen_value_max = 10;
    auto* cmd_gen = app.add_subcommand("gen", "Generate canned or random instances");
    cmd_gen->add_option("--kind", gen_kind,
                        "no-pef-cap5 | no-pef-cap3 | pef-not-pprop | ef-not-prop | "
                        "prop4-tight | prop5-tight | random-dorm")
        ->required();
    cmd_gen->add_option("--seed", gen_seed, "Random seed (random-dorm)");
    cmd_gen->add_option("--m", gen_m, "Resource count");
    cmd_gen->add_option("--c", gen_c, "Capacity");
    cmd_gen->add_option("--p", gen_p, "Edge probability, rational (random-dorm)");
    cmd_gen->add_option("--value-max", gen_value_max, "Maximum value (random-dorm)");
    cmd_gen->add_option("--T", gen_t, "Externality weight T (ef-not-prop)");
    cmd_gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

    // bench
    int bench_trials = 20;
    int bench_max_m = 10;
    unsigned long long bench_seed = 1;
    std::string bench_p = "1/2";
    int bench_value_max = 10;
    auto* cmd_bench = app.add_subcommand("bench", "Benchmark the solver on random instances");
    cmd_bench->add_option("--trials", bench_trials, "Number of instances");
    cmd_bench->add_option("--seed", bench_seed, "Base seed");
    cmd_bench->add_option("--max-m", bench_max_m, "Largest dorm count");
    cmd_bench->add_option("--p", bench_p, "Edge probability, rational");
    cmd_bench->add_option("--value-max", bench_value_max, "Maximum dorm value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kExitInputError;
    }

    try {
        if (*cmd_validate) {
            fairshare::Instance inst = fairshare::instance_from_json(read_file(validate_path));
            std::cout << "valid instance: n=" << inst.n << " m=" << inst.m
                      << " dorm_sharing=" << (inst.profile.is_dorm_sharing ? "yes" : "no")
                      << "\n";
            return kExitHolds;
        }
        if (*cmd_solve) {
            fairshare::Instance inst = fairshare::instance_from_json(read_file(solve_instance));
            fairshare::SolveResult result = fairshare::solve_pef_cap2(inst);
            nlohmann::json out =
                nlohmann::json::parse(fairshare::assignment_to_json(result.assignment));
            if (solve_trace) {
                out["trace"] = nlohmann::json::parse(fairshare::trace_to_json(result.trace));
            }
            write_output(solve_output, out.dump(2));
            return kExitHolds;
        }
        if (*cmd_check) {
            return run_check(check_opts);
        }
        if (*cmd_decide) {
            fairshare::Instance inst = fairshare::instance_from_json(read_file(decide_instance));
            std::optional<fairshare::Assignment> witness;
            if (decide_notion == "ef") {
                witness = fairshare::decide_ef(inst, decide_limit);
            } else if (decide_notion == "pef") {
                witness = fairshare::decide_pef(inst, decide_limit);
            } else {
                throw fairshare::ValidationError(
                    fairshare::ValidationError::Code::ParseError,
                    "unknown notion '" + decide_notion + "' (expected ef or pef)");
            }
            if (witness) {
                std::cout << fairshare::assignment_to_json(*witness) << "\n";
                return kExitHolds;
            }
            std::cout << "no " << decide_notion << " assignment exists\n";
            return kExitFails;
        }
        if (*cmd_reduce) {
            fairshare::CliqueInstance ci;
            ci.graph = fairshare::graph_from_json(read_file(reduce_graph));
            ci.k = reduce_k;
            if (2 * ci.k <= ci.graph.vertex_count()) {
                ci = fairshare::pad_clique(ci);
                std::cerr << "note: padded to " << ci.graph.vertex_count() << " vertices, k="
                          << ci.k << "\n";
            }
            fairshare::Instance inst;
            if (reduce_target == "ef") {
                inst = fairshare::reduce_clique_to_ef(ci);
            } else if (reduce_target == "pef") {
                inst = fairshare::reduce_clique_to_pef(ci);
            } else {
                throw fairshare::ValidationError(
                    fairshare::ValidationError::Code::ParseError,
                    "unknown target '" + reduce_target + "' (expected ef or pef)");
            }
            write_output(reduce_output, fairshare::instance_to_json(inst));
            return kExitHolds;
        }
        if (*cmd_gen) {
            std::map<std::string, std::string> meta{{"generator", gen_kind}};
            fairshare::GeneratedInstance generated;
            if (gen_kind == "no-pef-cap5" || gen_kind == "no-pef-cap3" ||
                gen_kind == "pef-not-pprop") {
                generated = fairshare::canned_instance(gen_kind);
            } else if (gen_kind == "ef-not-prop" || gen_kind == "prop4-tight" ||
                       gen_kind == "prop5-tight") {
                generated = fairshare::tight_instance(gen_kind, gen_c, gen_m,
                                                      fairshare::Rational::parse(gen_t));
            } else if (gen_kind == "random-dorm") {
                generated.instance =
                    fairshare::random_dorm(gen_seed, gen_m, gen_c,
                                           fairshare::Rational::parse(gen_p), gen_value_max);
                meta["scheme"] = std::string(fairshare::kRandomScheme);
                meta["seed"] = std::to_string(gen_seed);
                meta["m"] = std::to_string(gen_m);
                meta["c"] = std::to_string(gen_c);
                meta["edge_prob"] = gen_p;
                meta["value_max"] = std::to_string(gen_value_max);
            } else {
                throw fairshare::ValidationError(fairshare::ValidationError::Code::ParseError,
                                                 "unknown kind '" + gen_kind + "'");
            }
            write_output(gen_output, fairshare::bundle_to_json(generated.instance,
                                                               generated.assignment, meta));
            return kExitHolds;
        }
        if (*cmd_bench) {
            return run_bench(bench_trials, bench_seed, bench_max_m, bench_p, bench_value_max);
        }
    } catch (const fairshare::LimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const fairshare::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
