#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdelete/clique_wheel.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/cover.hpp"
#include "kdelete/error.hpp"
#include "kdelete/json_io.hpp"
#include "kdelete/maxcut.hpp"
#include "kdelete/oddgirth.hpp"
#include "kdelete/oracle.hpp"
#include "verify.hpp"

namespace kdelete::cli {

namespace {

using nlohmann::json;

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

struct Input {
    std::string text;
    Graph graph;
};

Input load(const std::string& path, std::istream& in) {
    Input input;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        input.text = buf.str();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        input.text = buf.str();
    }
    std::istringstream parse(input.text);
    input.graph = read_edge_list(parse);
    return input;
}

struct Run {
    std::string command;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(std::ostream& out, const std::string& digest, json result) const {
        json report{{"command", command}, {"args", args}, {"seed", seed}, {"result", std::move(result)}};
        if (!digest.empty()) report["input_digest"] = digest;
        if (timing)
            report["wall_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << report.dump(2) << '\n';
    }
};

std::vector<std::size_t> nonempty(std::vector<std::size_t> v, std::vector<std::size_t> fallback) {
    return v.empty() ? fallback : v;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-deletion k-partitioning toolkit", "kdelete"};
    app.require_subcommand(1);

    Run run;
    run.args = args;
    std::string input_path = "-";

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    std::string kind, spec_text;
    std::size_t gen_n = 0, gen_a = 0, gen_b = 0, gen_rim = 0, gen_t = 1;
    double gen_p = 0.5;
    std::vector<std::size_t> gen_parts;
    gen->add_option("--kind", kind,
                    "empty|cycle|path|complete|complete_multipartite|petersen|wheel|random|random_bipartite");
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--p", gen_p, "Edge probability");
    gen->add_option("--parts", gen_parts, "Part sizes for complete_multipartite")->delimiter(',');
    gen->add_option("--a", gen_a, "First side (random_bipartite)");
    gen->add_option("--b", gen_b, "Second side (random_bipartite)");
    gen->add_option("--rim", gen_rim, "Rim length (wheel)");
    gen->add_option("--t", gen_t, "Blow-up factor applied to the result")->check(CLI::PositiveNumber);
    gen->add_option("--spec", spec_text, "JSON construction spec {\"kind\",\"params\",\"seed\"}");
    gen->add_option("--seed", run.seed, "Random seed");

    // partition
    auto* part = app.add_subcommand("partition", "k-partition with a guaranteed deletion bound");
    std::string method = "trianglefree";
    std::size_t k = 2, r = 2, trials = 16;
    bool verify_pre = false;
    part->add_option("input", input_path, "Edge-list file, '-' for stdin");
    part->add_option("--method", method, "trianglefree|clique|wheel|oddgirth|oddcycle|random")
        ->check(CLI::IsMember({"trianglefree", "clique", "wheel", "oddgirth", "oddcycle", "random"}));
    part->add_option("--k", k, "Number of parts")->required()->check(CLI::PositiveNumber);
    part->add_option("--r", r, "Clique size, or odd-cycle / wheel parameter")->check(CLI::PositiveNumber);
    part->add_option("--trials", trials, "Random trials (random method)");
    part->add_option("--seed", run.seed, "Random seed");
    part->add_flag("--verify-preconditions", verify_pre, "Check H-freeness first");

    // maxcut
    auto* maxcut = app.add_subcommand("maxcut", "Max-l-Cut");
    std::string cut_method = "local";
    std::size_t cut_l = 2, cut_r = 2, restarts = 8;
    maxcut->add_option("input", input_path, "Edge-list file, '-' for stdin");
    maxcut->add_option("--l", cut_l, "Number of sides")->check(CLI::Range(2, 64));
    maxcut->add_option("--method", cut_method, "exact|local|driver|split")
        ->check(CLI::IsMember({"exact", "local", "driver", "split"}));
    maxcut->add_option("--r", cut_r, "Excluded odd cycle C_(2r+1) (driver, split)")->check(CLI::PositiveNumber);
    maxcut->add_option("--trials", restarts, "Local-search restarts");
    maxcut->add_option("--seed", run.seed, "Random seed");

    // cover
    auto* cover = app.add_subcommand("cover", "Neighborhood cover selection");
    std::string strategy = "greedy";
    std::size_t cover_k = 1;
    std::size_t cover_trials = 0;
    cover->add_option("input", input_path, "Edge-list file, '-' for stdin");
    cover->add_option("--k", cover_k, "Number of centers (t for even)")->check(CLI::PositiveNumber);
    cover->add_option("--method", strategy, "greedy|random|certified|derandomized|even")
        ->check(CLI::IsMember({"greedy", "random", "certified", "derandomized", "even"}));
    cover->add_option("--trials", cover_trials, "Random trials (default 64k)");
    cover->add_option("--seed", run.seed, "Random seed");

    // scrub
    auto* scrub = app.add_subcommand("scrub", "Delete short odd cycles");
    std::size_t scrub_r = 2;
    std::string scrub_out;
    scrub->add_option("input", input_path, "Edge-list file, '-' for stdin");
    scrub->add_option("--r", scrub_r, "Remove odd cycles shorter than 2r+1")->check(CLI::PositiveNumber);
    scrub->add_flag("--verify-preconditions", verify_pre, "Check C_(2r+1)-freeness first");
    scrub->add_option("--write-graph", scrub_out, "Also write the scrubbed graph to this file");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact h, Max-k-Cut or u on small graphs");
    std::string quantity;
    std::size_t oracle_k = 2;
    oracle->add_option("quantity", quantity, "h|maxcut|u")->required()->check(CLI::IsMember({"h", "maxcut", "u"}));
    oracle->add_option("input", input_path, "Edge-list file, '-' for stdin");
    oracle->add_option("--k", oracle_k, "k (parts, sides or centers)")->check(CLI::PositiveNumber);

    // spectral
    auto* spectral = app.add_subcommand("spectral", "Second eigenvalue, mixing check, lower-bound certificate");
    std::size_t spec_k = 2, samples = 200, iterations = 100000;
    bool exhaustive = false;
    spectral->add_option("input", input_path, "Edge-list file, '-' for stdin");
    spectral->add_option("--k", spec_k, "k for the certificate")->check(CLI::PositiveNumber);
    spectral->add_option("--samples", samples, "Random subset pairs in the mixing check");
    spectral->add_option("--iterations", iterations, "Power-iteration cap");
    spectral->add_flag("--exhaustive", exhaustive, "All subset pairs (n <= 10)");
    spectral->add_option("--seed", run.seed, "Random seed");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    std::string tier = "tiny";
    std::vector<int> only;
    verify->add_option("--tier", tier, "tiny|small|desk")->check(CLI::IsMember({"tiny", "small", "desk"}));
    verify->add_option("--only", only, "Run only these numbered checks")->delimiter(',');
    verify->add_option("--seed", run.seed, "Random seed");

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep (n,k,r,method) and print CSV");
    std::vector<std::size_t> bench_n, bench_k, bench_r;
    std::vector<std::string> bench_methods;
    std::size_t jobs = 1;
    bench->add_option("--n", bench_n, "Vertex counts")->delimiter(',');
    bench->add_option("--k", bench_k, "Part counts")->delimiter(',');
    bench->add_option("--r", bench_r, "r values")->delimiter(',');
    bench->add_option("--method", bench_methods, "Methods")->delimiter(',');
    bench->add_option("--jobs", jobs, "Concurrent grid points")->check(CLI::PositiveNumber);
    bench->add_option("--seed", run.seed, "Random seed");

    app.add_flag("--timing", run.timing, "Include wall time in JSON reports");
    app.fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            run.command = "gen";
            Graph g;
            if (!spec_text.empty()) {
                g = generate(json::parse(spec_text));
            } else {
                if (kind.empty()) {
                    err << "gen: --kind or --spec is required\n";
                    return kExitUsage;
                }
                json params{{"n", gen_n}, {"p", gen_p}, {"a", gen_a}, {"b", gen_b}, {"rim", gen_rim}};
                if (!gen_parts.empty()) params["parts"] = gen_parts;
                g = generate({{"kind", kind}, {"params", params}, {"seed", run.seed}});
            }
            if (gen_t > 1) g = blow_up(g, gen_t);
            write_edge_list(out, g);
            return kExitOk;
        }
        if (*part) {
            run.command = "partition";
            const Input input = load(input_path, in);
            const Graph& g = input.graph;
            BoundReport report;
            if (method == "trianglefree") report = partition_triangle_free(g, k, verify_pre);
            else if (method == "clique") report = partition_clique_free(g, r, k, verify_pre, run.seed);
            else if (method == "wheel") report = partition_wheel_free(g, r, k, verify_pre, run.seed);
            else if (method == "oddgirth") report = partition_odd_girth(g, r, k, verify_pre);
            else if (method == "oddcycle") report = partition_odd_cycle_free(g, r, k, verify_pre);
            else {
                report.method = "random";
                report.requested_k = k;
                report.partition = random_partition(g, k, trials, run.seed);
                report.bound = Rational(BigInt(g.m()), BigInt(k));
                report.bound_formula = "m/k";
                settle(report);
            }
            json result = to_json(report);
            result["n"] = g.n();
            result["m"] = g.m();
            run.emit(out, fnv1a64(input.text), result);
            return kExitOk;
        }
        if (*maxcut) {
            run.command = "maxcut";
            const Input input = load(input_path, in);
            CutResult cut;
            if (cut_method == "exact") cut = max_k_cut_exact(input.graph, cut_l);
            else if (cut_method == "local") cut = local_search_cut(input.graph, cut_l, restarts, run.seed);
            else if (cut_method == "driver") cut = maxcut_dense_driver(input.graph, cut_r, restarts, run.seed);
            else cut = maxcut_odd_cycle_free(input.graph, cut_r, restarts, run.seed);
            json result = to_json(cut);
            result["m"] = input.graph.m();
            run.emit(out, fnv1a64(input.text), result);
            return kExitOk;
        }
        if (*cover) {
            run.command = "cover";
            const Input input = load(input_path, in);
            const Graph& g = input.graph;
            CoverSelection sel;
            const std::size_t t = cover_trials == 0 ? 64 * cover_k : cover_trials;
            if (strategy == "greedy") sel = select_cover_greedy(g, cover_k);
            else if (strategy == "random") sel = select_cover_random(g, cover_k, t, run.seed);
            else if (strategy == "certified") sel = select_cover_certified(g, cover_k);
            else if (strategy == "derandomized") sel = select_cover_derandomized(g, cover_k);
            else sel = even_parts(g, cover_k, CoverStrategy::Greedy, run.seed);
            run.emit(out, fnv1a64(input.text), to_json(sel));
            return kExitOk;
        }
        if (*scrub) {
            run.command = "scrub";
            const Input input = load(input_path, in);
            const ScrubReport rep = scrub_short_odd_cycles(input.graph, scrub_r, verify_pre);
            if (!scrub_out.empty()) {
                std::ofstream file(scrub_out);
                if (!file) throw std::runtime_error("cannot write '" + scrub_out + "'");
                write_edge_list(file, rep.result);
            }
            run.emit(out, fnv1a64(input.text), to_json(rep));
            return kExitOk;
        }
        if (*oracle) {
            const Input input = load(input_path, in);
            std::uint64_t value = 0;
            if (quantity == "h") value = exact_h(input.graph, oracle_k, OracleBudget::from_env());
            else if (quantity == "maxcut") value = max_k_cut_exact(input.graph, oracle_k).crossing;
            else value = exact_u(input.graph, oracle_k);
            out << value << '\n';
            return kExitOk;
        }
        if (*spectral) {
            run.command = "spectral";
            const Input input = load(input_path, in);
            const Graph& g = input.graph;
            const SpectralProfile profile = second_eigenvalue(g, iterations, run.seed);
            json result{{"profile", to_json(profile)}};
            if (profile.d) {
                result["mixing"] = to_json(mixing_check(g, profile.lambda, samples, run.seed, exhaustive));
                result["certificate"] = to_json(spectral_lower_bound(g, profile, spec_k));
            }
            run.emit(out, fnv1a64(input.text), result);
            return kExitOk;
        }
        if (*verify) {
            run.command = "verify";
            const auto results = checks::run_checks(checks::parse_tier(tier), run.seed, only);
            json list = json::array();
            bool violated = false;
            for (const auto& c : results) {
                list.push_back({{"criterion", c.criterion},
                                {"name", c.name},
                                {"passed", c.passed},
                                {"informational", c.informational},
                                {"detail", c.detail}});
                if (!c.passed && !c.informational) violated = true;
            }
            run.emit(out, "", {{"tier", tier}, {"checks", list}, {"all_passed", !violated}});
            return violated ? kExitViolation : kExitOk;
        }
        if (*bench) {
            std::vector<checks::BenchPoint> grid;
            const auto ns = nonempty(bench_n, {70, 140, 280});
            const auto ks = nonempty(bench_k, {2, 4, 8});
            const auto rs = nonempty(bench_r, {2});
            const std::vector<std::string> ms = bench_methods.empty() ? std::vector<std::string>{"oddgirth"} : bench_methods;
            for (const auto& m : ms)
                for (std::size_t rv : rs)
                    for (std::size_t nv : ns)
                        for (std::size_t kv : ks) grid.push_back({nv, kv, rv, m});
            out << checks::bench_csv_header() << '\n';
            for (const auto& row : checks::run_bench(grid, jobs, run.seed)) {
                out << checks::bench_csv_row(row) << '\n';
                if (!row.error.empty()) err << "bench " << row.point.method << " n=" << row.point.n << ": " << row.error << '\n';
            }
            return kExitOk;
        }
    } catch (const CapabilityError& e) {
        err << "capability limit: " << e.what() << '\n';
        return kExitCapability;
    } catch (const PreconditionViolation& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitError;
    } catch (const json::exception& e) {
        err << "invalid JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}

} // namespace kdelete::cli
