#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mgdom/dominate.hpp"
#include "mgdom/graph.hpp"
#include "mgdom/solve.hpp"
#include "mgdom/theorems.hpp"
#include "mgdom/transform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace mgdom;

// Exit codes: 0 success / all rows match, 1 some verification row
// mismatched, 2 usage or input error, 3 a solve ran out of budget.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Shared option plumbing

struct SolveFlags {
    long long time_ms = -1;  // -1 = not set on the command line
    long long nodes = -1;
    bool timing = false;  // keep real milliseconds (and skip the lex-min witness pass)
};

// Budgets resolve as: built-in defaults, then the MGDOM_BUDGET environment
// variable ("MS" or "MS:NODES"), then explicit command-line flags.
SolveOptions resolve_solve_options(const SolveFlags& f) {
    SolveOptions opts;
    if (const char* env = std::getenv("MGDOM_BUDGET")) {
        const std::string text(env);
        try {
            std::size_t used = 0;
            const long long ms = std::stoll(text, &used);
            if (used == text.size()) {
                opts.time_budget_ms = ms;
            } else if (text[used] == ':') {
                std::size_t used2 = 0;
                const std::string rest = text.substr(used + 1);
                const long long nodes = std::stoll(rest, &used2);
                if (used2 != rest.size()) throw std::invalid_argument(text);
                opts.time_budget_ms = ms;
                opts.node_budget = nodes;
            } else {
                throw std::invalid_argument(text);
            }
            if (opts.time_budget_ms <= 0 || opts.node_budget <= 0)
                throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw UsageError("invalid MGDOM_BUDGET '" + text + "' (expected 'MS' or 'MS:NODES')");
        }
    }
    if (f.time_ms >= 0) opts.time_budget_ms = f.time_ms;
    if (f.nodes >= 0) opts.node_budget = f.nodes;
    opts.deterministic = !f.timing;
    return opts;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--time-budget-ms", f.time_ms, "solver wall-clock budget per solve");
    cmd->add_option("--node-budget", f.nodes, "solver search-node budget per solve");
    cmd->add_flag("--timing", f.timing,
                  "report real milliseconds instead of deterministic output "
                  "(also keeps the first optimal witness found)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write to '" + path + "'");
    out << content;
}

// ---------------------------------------------------------------------------
// Instance sources shared by gen and compute

struct InstanceFlags {
    std::string family;
    int p1 = 0;
    int p2 = 0;
    std::string random_kind;
    int n = 0;
    double p = 0.35;
    std::uint64_t seed = 42;
    std::string input;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool with_input) {
    cmd->add_option("--family", f.family, "named family: path, cycle, complete, "
                                          "complete_bipartite, star, wheel, double_star, friendship");
    cmd->add_option("--p1", f.p1, "first family parameter (n, q, h or k)");
    cmd->add_option("--p2", f.p2, "second family parameter where the family needs one");
    cmd->add_option("--random", f.random_kind, "random instance: tree, connected, isolate_free")
        ->check(CLI::IsMember({"tree", "connected", "isolate_free"}));
    cmd->add_option("--n", f.n, "vertex count for --random");
    cmd->add_option("--p", f.p, "edge probability for --random connected/isolate_free");
    cmd->add_option("--seed", f.seed, "seed for --random");
    if (with_input)
        cmd->add_option("-i,--input", f.input, "read an edge-list file ('-' for stdin)");
}

Graph build_instance(const InstanceFlags& f) {
    const int sources = (!f.family.empty() ? 1 : 0) + (!f.random_kind.empty() ? 1 : 0) +
                        (!f.input.empty() ? 1 : 0);
    if (sources != 1)
        throw UsageError("need exactly one instance source: --family, --random or --input");
    if (!f.input.empty()) {
        if (f.input == "-") return parse_edge_list(std::cin);
        return parse_edge_list_file(f.input);
    }
    if (!f.family.empty()) {
        const auto fam = parse_family(f.family);
        if (!fam) throw UsageError("unknown family '" + f.family + "'");
        return generate({*fam, f.p1, f.p2});
    }
    Rng rng(f.seed);
    if (f.random_kind == "tree") return random_tree(rng, f.n);
    if (f.random_kind == "connected") return random_connected_graph(rng, f.n, f.p);
    return random_isolate_free_graph(rng, f.n, f.p);
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const InstanceFlags& inst, bool emit_middle, const std::string& output) {
    const Graph g = build_instance(inst);
    if (emit_middle)
        write_output(output, middle_graph_to_json(MiddleGraph(g)) + "\n");
    else
        write_output(output, serialize_edge_list(g));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const InstanceFlags& inst, const std::string& kind_name_arg, bool on_middle,
                bool restrict_sd, bool use_oracle, int threads, const SolveFlags& sf,
                const std::string& output) {
    const auto kind = parse_kind(kind_name_arg);
    if (!kind) throw UsageError("unknown kind '" + kind_name_arg + "'");
    if (restrict_sd && !on_middle)
        throw UsageError("--restrict-sd only makes sense together with --middle");
    if (restrict_sd && use_oracle)
        throw UsageError("--oracle does not support --restrict-sd");
    if (threads < 1) throw UsageError("--threads must be >= 1");

    const SolveOptions opts = resolve_solve_options(sf);
    const Graph base = build_instance(inst);

    SolveResult result;
    if (on_middle) {
        const MiddleGraph mg(base);
        if (use_oracle)
            result = threads == 1 ? brute_force_oracle(mg.graph(), *kind)
                                  : brute_force_oracle_parallel(mg.graph(), *kind, threads);
        else if (restrict_sd)
            result = minimum_restricted(mg.graph(), *kind, subdivision_vertices(mg), opts);
        else
            result = minimum(mg.graph(), *kind, opts);
    } else {
        if (use_oracle)
            result = threads == 1 ? brute_force_oracle(base, *kind)
                                  : brute_force_oracle_parallel(base, *kind, threads);
        else
            result = minimum(base, *kind, opts);
    }

    if (opts.deterministic) result.millis = 0;
    write_output(output, solve_result_to_json(result) + "\n");
    return result.status == SolveStatus::BudgetExceeded ? kExitBudget : kExitOk;
}

// ---------------------------------------------------------------------------
// verify

std::string reports_to_json(const std::vector<TheoremReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json row;
        row["theorem_id"] = theorem_id_name(r.id);
        row["instance"] = r.instance;
        row["expected"] = r.expected;
        if (r.solver_value >= 0)
            row["solver_value"] = r.solver_value;
        else
            row["solver_value"] = nullptr;
        row["verdict"] = verdict_name(r.verdict);
        row["millis"] = r.millis;
        row["witness"] = r.witness;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

int run_verify(const std::string& suite, int max_n, int samples, std::uint64_t seed, int threads,
               const SolveFlags& sf, const std::string& format, const std::string& output) {
    if (threads < 1) throw UsageError("--threads must be >= 1");
    if (format != "csv" && format != "json")
        throw UsageError("unknown --format '" + format + "' (expected csv or json)");

    VerifyOptions vo;
    vo.max_n = max_n;
    vo.samples = samples;
    vo.seed = seed;
    vo.solve = resolve_solve_options(sf);

    // A job is either one claim suite or the shared inequality pass.
    struct Job {
        bool inequalities = false;
        TheoremId id = TheoremId::T34_cycle;
    };
    std::vector<Job> jobs;
    if (suite == "all") {
        for (TheoremId id :
             {TheoremId::T34_cycle, TheoremId::T34_path, TheoremId::T34_complete,
              TheoremId::T34_bipartite, TheoremId::T35_bounds, TheoremId::T41_certificate,
              TheoremId::P42_maxdeg, TheoremId::P43_bipartite, TheoremId::T44_mid_cycle,
              TheoremId::T45_mid_path, TheoremId::P46_friendship, TheoremId::T47_double_star,
              TheoremId::L51_sd_restriction, TheoremId::L52_deletion, TheoremId::T53_path_bound,
              TheoremId::T54_tree_bound, TheoremId::C55_strong_support,
              TheoremId::C56_no_strong_support, TheoremId::P57_join}) {
            if (id == TheoremId::T35_bounds)
                jobs.push_back({true, id});
            else
                jobs.push_back({false, id});
        }
    } else if (suite == "chains") {
        jobs.push_back({true, TheoremId::T35_bounds});
    } else {
        const auto id = parse_theorem_id(suite);
        if (!id) throw UsageError("unknown --suite '" + suite + "' (expected a claim id, 'chains' or 'all')");
        jobs.push_back({false, *id});
    }

    std::vector<std::vector<TheoremReport>> results(jobs.size());
    std::vector<std::string> errors(jobs.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int j = 0; j < static_cast<int>(jobs.size()); ++j) {
        try {
            results[j] = jobs[j].inequalities ? verify_inequalities(vo)
                                              : verify_theorem(jobs[j].id, vo);
        } catch (const std::exception& e) {
            errors[j] = e.what();
        }
    }

    for (const auto& err : errors)
        if (!err.empty()) throw UsageError(err);

    std::vector<TheoremReport> rows;
    for (auto& suite_rows : results)
        rows.insert(rows.end(), std::make_move_iterator(suite_rows.begin()),
                    std::make_move_iterator(suite_rows.end()));

    if (vo.solve.deterministic)
        for (auto& row : rows) row.millis = 0;

    write_output(output, format == "csv" ? reports_to_csv(rows) : reports_to_json(rows));

    bool any_mismatch = false, any_budget = false;
    for (const auto& row : rows) {
        any_mismatch |= row.verdict == Verdict::Mismatch;
        any_budget |= row.verdict == Verdict::BudgetExceeded;
    }
    if (any_mismatch) return kExitMismatch;
    if (any_budget) return kExitBudget;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct SweepRowOutcome {
    std::string text;
    bool violation = false;
    bool budget = false;
};

int run_sweep(const std::string& mode, int count, std::uint64_t seed, int min_n, int max_n,
              int threads, const SolveFlags& sf, const std::string& output) {
    if (threads < 1) throw UsageError("--threads must be >= 1");
    if (mode != "trees" && mode != "graphs")
        throw UsageError("unknown --mode '" + mode + "' (expected trees or graphs)");
    if (count < 0) throw UsageError("--count must be >= 0");
    const bool trees = mode == "trees";
    if (min_n == 0) min_n = trees ? 5 : 2;
    if (max_n == 0) max_n = trees ? 10 : 8;
    if (min_n < 2 || max_n < min_n) throw UsageError("need 2 <= min-n <= max-n");

    const SolveOptions opts = resolve_solve_options(sf);

    const char* header =
        trees ? "index,seed,n,m,mid_disjunctive,mid_total_disjunctive,mid_paired,"
                "mid_paired_disjunctive,bound_general,bound_strong,bound_leaf,"
                "every_leaf_on_strong_support,no_strong_supports,is_star,"
                "leaf_pairs_separated,chain_ok,total_chain_ok,bounds_ok,"
                "tree_bounds_ok,status\n"
              : "index,seed,n,p,m,mid_disjunctive,mid_total_disjunctive,mid_paired,"
                "mid_paired_disjunctive,path_bound,chain_ok,total_chain_ok,bounds_ok,"
                "t53_ok,status\n";

    struct ProbChoice {
        const char* label;
        double value;
    };
    constexpr ProbChoice kProbs[] = {{"0.2", 0.2}, {"0.35", 0.35}, {"0.5", 0.5}};

    std::vector<SweepRowOutcome> rows(count);
    std::vector<std::string> errors(count);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int idx = 0; idx < count; ++idx) {
        try {
            const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(idx));
            const int n = min_n + idx % (max_n - min_n + 1);
            Rng rng(s);
            SweepRowOutcome row;
            std::ostringstream line;
            if (trees) {
                const Graph tree = random_tree(rng, n);
                const TreeProfile profile = tree_profile(tree);
                const ChainCheck cc = check_inequalities(MiddleGraph(tree).graph(), opts);
                const bool applicable = !profile.is_star && profile.leaf_pairs_separated;
                const bool pre_strong = applicable && profile.every_leaf_on_strong_support;
                const bool pre_none = applicable && profile.no_strong_supports;
                const bool tree_ok =
                    (!applicable || cc.paired_disjunctive >= profile.bound_general) &&
                    (!pre_strong || cc.paired_disjunctive >= profile.bound_strong) &&
                    (!pre_none || cc.paired_disjunctive >= profile.bound_leaf);
                row.budget = !cc.all_optimal;
                row.violation = cc.all_optimal &&
                                !(cc.chain_ok && cc.total_chain_ok && cc.bounds_ok && tree_ok);
                line << idx << ',' << s << ',' << n << ',' << tree.size() << ','
                     << cc.disjunctive << ',' << cc.total_disjunctive << ',' << cc.paired << ','
                     << cc.paired_disjunctive << ',' << profile.bound_general << ','
                     << profile.bound_strong << ',' << profile.bound_leaf << ','
                     << bool_str(profile.every_leaf_on_strong_support) << ','
                     << bool_str(profile.no_strong_supports) << ',' << bool_str(profile.is_star)
                     << ',' << bool_str(profile.leaf_pairs_separated) << ','
                     << bool_str(cc.chain_ok) << ',' << bool_str(cc.total_chain_ok) << ','
                     << bool_str(cc.bounds_ok) << ',' << bool_str(tree_ok) << ','
                     << (cc.all_optimal ? "ok" : "budget_exceeded") << '\n';
            } else {
                const auto& p = kProbs[idx % 3];
                const Graph base = random_connected_graph(rng, n, p.value);
                const ChainCheck cc = check_inequalities(MiddleGraph(base).graph(), opts);
                const int path_bound = formula_value(TheoremId::T45_mid_path, n);
                const bool t53_ok = cc.all_optimal && 2 <= cc.paired_disjunctive &&
                                    cc.paired_disjunctive <= path_bound;
                row.budget = !cc.all_optimal;
                row.violation = cc.all_optimal &&
                                !(cc.chain_ok && cc.total_chain_ok && cc.bounds_ok && t53_ok);
                line << idx << ',' << s << ',' << n << ',' << p.label << ',' << base.size() << ','
                     << cc.disjunctive << ',' << cc.total_disjunctive << ',' << cc.paired << ','
                     << cc.paired_disjunctive << ',' << path_bound << ',' << bool_str(cc.chain_ok)
                     << ',' << bool_str(cc.total_chain_ok) << ',' << bool_str(cc.bounds_ok) << ','
                     << bool_str(t53_ok) << ',' << (cc.all_optimal ? "ok" : "budget_exceeded")
                     << '\n';
            }
            row.text = line.str();
            rows[idx] = std::move(row);
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    }

    for (const auto& err : errors)
        if (!err.empty()) throw UsageError(err);

    std::string out = header;
    bool any_violation = false, any_budget = false;
    for (const auto& row : rows) {
        out += row.text;
        any_violation |= row.violation;
        any_budget |= row.budget;
    }
    write_output(output, out);
    if (any_violation) return kExitMismatch;
    if (any_budget) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verification harness for domination-type parameters "
                 "of graphs and their middle graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance as an edge list (or middle-graph JSON)");
    InstanceFlags gen_inst;
    add_instance_flags(gen, gen_inst, /*with_input=*/false);
    bool gen_middle = false;
    std::string gen_output = "-";
    gen->add_flag("--middle", gen_middle, "emit the middle graph as JSON (with provenance)");
    gen->add_option("-o,--output", gen_output, "output file ('-' for stdout)");

    // compute
    auto* compute = app.add_subcommand("compute", "solve one domination parameter exactly");
    InstanceFlags comp_inst;
    add_instance_flags(compute, comp_inst, /*with_input=*/true);
    std::string comp_kind = "paired_disjunctive";
    bool comp_middle = false, comp_restrict_sd = false, comp_oracle = false;
    int comp_threads = 1;
    SolveFlags comp_sf;
    std::string comp_output = "-";
    compute->add_option("--kind", comp_kind,
                        "dominating, total_dominating, disjunctive, total_disjunctive, "
                        "paired or paired_disjunctive");
    compute->add_flag("--middle", comp_middle, "solve on the middle graph of the instance");
    compute->add_flag("--restrict-sd", comp_restrict_sd,
                      "restrict candidates to the edge vertices (needs --middle)");
    compute->add_flag("--oracle", comp_oracle,
                      "use the exhaustive reference instead of branch and bound (<= 20 vertices)");
    compute->add_option("--threads", comp_threads, "worker threads for --oracle");
    add_solve_flags(compute, comp_sf);
    compute->add_option("-o,--output", comp_output, "output file ('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run claim verification suites and report rows");
    std::string ver_suite = "all";
    int ver_max_n = 0, ver_samples = 0, ver_threads = 1;
    std::uint64_t ver_seed = 42;
    SolveFlags ver_sf;
    std::string ver_format = "csv", ver_output = "-";
    verify->add_option("--suite", ver_suite, "claim id, 'chains' (T35+O31+O32) or 'all'");
    verify->add_option("--max-n", ver_max_n, "override the top of each suite's size range");
    verify->add_option("--samples", ver_samples, "override each suite's random sample count");
    verify->add_option("--seed", ver_seed, "campaign seed");
    verify->add_option("--threads", ver_threads, "run suites in parallel");
    add_solve_flags(verify, ver_sf);
    verify->add_option("--format", ver_format, "csv or json");
    verify->add_option("-o,--output", ver_output, "output file ('-' for stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "tabulate solver values over random instances");
    std::string sw_mode = "trees";
    int sw_count = 100, sw_min_n = 0, sw_max_n = 0, sw_threads = 1;
    std::uint64_t sw_seed = 42;
    SolveFlags sw_sf;
    std::string sw_output = "-";
    sweep->add_option("--mode", sw_mode, "trees (tree bounds) or graphs (path bound)");
    sweep->add_option("--count", sw_count, "number of rows");
    sweep->add_option("--seed", sw_seed, "campaign seed");
    sweep->add_option("--min-n", sw_min_n, "smallest instance order (default 5 trees / 2 graphs)");
    sweep->add_option("--max-n", sw_max_n, "largest instance order (default 10 trees / 8 graphs)");
    sweep->add_option("--threads", sw_threads, "compute rows in parallel");
    add_solve_flags(sweep, sw_sf);
    sweep->add_option("-o,--output", sw_output, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_inst, gen_middle, gen_output);
        if (compute->parsed())
            return run_compute(comp_inst, comp_kind, comp_middle, comp_restrict_sd, comp_oracle,
                               comp_threads, comp_sf, comp_output);
        if (verify->parsed())
            return run_verify(ver_suite, ver_max_n, ver_samples, ver_seed, ver_threads, ver_sf,
                              ver_format, ver_output);
        if (sweep->parsed())
            return run_sweep(sw_mode, sw_count, sw_seed, sw_min_n, sw_max_n, sw_threads, sw_sf,
                             sw_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
