// dispersion: command-line front end for the max-min k-dispersion solvers.
//
//   dispersion solve  --k 4 --algo exact --input points.txt
//   dispersion gen    --dist uniform-square --n 1000 --seed 7 --out points.txt
//   dispersion bench  --algo exact --k 4 --sizes 100,200,400,800
//   dispersion bounds --k 300000

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "dispersion/approx.hpp"
#include "dispersion/errors.hpp"
#include "dispersion/generate.hpp"
#include "dispersion/io.hpp"
#include "dispersion/solve.hpp"

namespace {

using namespace dispersion;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSolverFailure = 1;
constexpr int kExitUsage = 2;

struct SolveArgs {
    std::size_t k = 0;
    std::string algo = "exact";
    std::string input;
    std::string graph;
    std::string graph_format = "auto";
    std::string dist;
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 1;
    SolveOptions options;
};

struct GenArgs {
    std::string dist = "uniform-square";
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
};

struct BenchArgs {
    std::string algo = "exact";
    std::size_t k = 2;
    std::size_t d = 2;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
    int repeats = 3;
    int threads = 1;
};

struct BoundsArgs {
    std::size_t k = 0;
    std::size_t n = 0;
    double shrink = 0.995;
    double radius_fraction = 1.0 / 240.0;
};

void summary(const RunReport& rep) {
    const DispersionResult& r = rep.result;
    std::cerr << rep.algo << ": n=" << rep.n << " d=" << rep.d << " k=" << rep.k << " status=" << to_string(r.status)
              << " value=" << r.value() << " (" << rep.elapsed_ms << " ms)\n";
}

int run_solve(const SolveArgs& a) {
    const int sources = !a.input.empty() + !a.graph.empty() + !a.dist.empty();
    if (sources != 1) throw UsageError("solve needs exactly one of --input, --graph or --gen");

    RunReport rep;
    rep.k = a.k;
    rep.config = {{"threads", a.options.threads}, {"fallback", a.options.fallback}};
    const Algo algo = parse_algo(a.algo);
    rep.algo = std::string(to_string(algo));

    const auto start = std::chrono::steady_clock::now();
    if (!a.graph.empty()) {
        if (algo != Algo::clique) throw UsageError("graph input is only supported by --algo clique");
        const WeightedCompleteGraph g = read_graph_file(a.graph, parse_graph_format(a.graph_format));
        rep.n = g.size();
        rep.d = 0;
        rep.config["input"] = a.graph;
        rep.config["max_part_cliques"] = a.options.max_part_cliques;
        rep.result = solve_graph_dispersion(g, a.k, CliqueOptions{a.options.max_part_cliques, a.options.threads});
    } else {
        PointSet points;
        if (!a.input.empty()) {
            points = read_points_file(a.input);
            rep.config["input"] = a.input;
        } else {
            points = generate(parse_distribution(a.dist), a.n, a.seed, a.d);
            rep.seed = a.seed;
            rep.config["dist"] = a.dist;
            rep.config["prng"] = std::string(Rng::kName);
        }
        rep.n = points.size();
        rep.d = points.dim();
        if (algo == Algo::lattice) {
            rep.config["shrink"] = a.options.shrink;
            rep.config["radius_fraction"] = a.options.radius_fraction;
        }
        if (algo == Algo::clique) rep.config["max_part_cliques"] = a.options.max_part_cliques;
        rep.result = run_solver(algo, points, a.k, a.options);
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (rep.result.algo != rep.algo) rep.config["solver"] = rep.result.algo;

    std::cout << to_json(rep).dump(2) << '\n';
    summary(rep);
    return rep.result.status == Status::failed ? kExitSolverFailure : kExitOk;
}

int run_gen(const GenArgs& a) {
    const PointSet points = generate(parse_distribution(a.dist), a.n, a.seed, a.d);
    if (a.out == "-") {
        write_points(std::cout, points);
    } else {
        std::ofstream out(a.out);
        if (!out) throw UsageError("cannot write '" + a.out + "'");
        write_points(out, points);
    }
    std::cerr << "generated " << points.size() << " points (" << a.dist << ", d=" << points.dim() << ", seed=" << a.seed
              << ", prng=" << Rng::kName << ")\n";
    return kExitOk;
}

int run_bench_cmd(const BenchArgs& a) {
    BenchConfig cfg;
    cfg.algo = parse_algo(a.algo);
    cfg.k = a.k;
    cfg.dim = a.d;
    cfg.sizes = a.sizes;
    cfg.seed = a.seed;
    cfg.repeats = a.repeats;
    cfg.solve.threads = a.threads;
    BenchReport report;
    try {
        report = run_bench(cfg);
    } catch (const UsageError&) {
        throw;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolverFailure;
    }
    std::cout << to_json(report).dump(2) << '\n';
    std::cerr << "bench " << a.algo << " k=" << a.k << ": fitted exponent " << report.exponent << '\n';
    return kExitOk;
}

int run_bounds(const BoundsArgs& a) {
    const OptUpperBound opt = opt_upper_bound(a.k);
    LatticeConfig cfg;
    cfg.k = a.k;
    cfg.shrink = a.shrink;
    cfg.radius_fraction = a.radius_fraction;
    cfg.validate();
    const double alg = alg_lower_bound(a.k, a.shrink);

    json doc;
    doc["k"] = a.k;
    doc["shrink"] = a.shrink;
    doc["radius_fraction"] = a.radius_fraction;
    doc["opt_upper_bound"] = opt.unsimplified;
    doc["opt_upper_bound_simplified"] = opt.simplified;
    doc["simplified_valid"] = opt.simplified_valid;
    doc["alg_lower_bound"] = alg;
    doc["ratio"] = alg / opt.simplified;
    doc["y"] = cfg.y();
    doc["edge"] = cfg.edge();
    doc["radius"] = cfg.radius();
    doc["separation"] = cfg.edge() - 2.0 * cfg.radius();
    if (cfg.y() < 0.5) doc["lattice_centers"] = build_lattice(cfg).size();
    if (a.n > 0) {
        doc["n"] = a.n;
        doc["empty_disk_probability_bound"] = empty_disk_probability_bound(a.n, cfg);
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-min k-dispersion solvers"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve one instance and print a JSON report");
    s->add_option("--k", solve.k, "Subset size")->required();
    s->add_option("--algo", solve.algo, "exact|brute|clique|greedy|lattice")->capture_default_str();
    s->add_option("--input", solve.input, "Point file ('-' for stdin)");
    s->add_option("--graph", solve.graph, "Weighted complete graph file (clique solver)");
    s->add_option("--graph-format", solve.graph_format, "auto|matrix|edges")->capture_default_str();
    s->add_option("--gen", solve.dist, "Generate the instance: uniform-square|uniform-cube|grid|circle");
    s->add_option("--n", solve.n, "Generated point count");
    s->add_option("--d", solve.d, "Generated dimension (0 = natural)");
    s->add_option("--seed", solve.seed, "Generator seed")->capture_default_str();
    s->add_option("--threads", solve.options.threads, "OpenMP threads")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_flag("--fallback", solve.options.fallback, "Fall back to greedy when the lattice run fails");
    s->add_option("--shrink", solve.options.shrink, "Lattice shrink constant")->capture_default_str();
    s->add_option("--radius-fraction", solve.options.radius_fraction, "Lattice disk radius as a fraction of y")
        ->capture_default_str();
    s->add_option("--max-part-cliques", solve.options.max_part_cliques, "Clique solver part-size cap")
        ->capture_default_str();

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated point set");
    g->add_option("--dist", gen.dist, "uniform-square|uniform-cube|grid|circle")->capture_default_str();
    g->add_option("--n", gen.n, "Point count")->required();
    g->add_option("--d", gen.d, "Dimension (0 = natural)");
    g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    g->add_option("--out", gen.out, "Output path ('-' for stdout)")->capture_default_str();

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Fit the empirical scaling exponent of a solver");
    b->add_option("--algo", bench.algo, "Solver")->capture_default_str();
    b->add_option("--k", bench.k, "Subset size")->capture_default_str();
    b->add_option("--d", bench.d, "Dimension (2 or 3)")->capture_default_str();
    b->add_option("--sizes", bench.sizes, "Comma-separated increasing sizes")->required()->delimiter(',');
    b->add_option("--seed", bench.seed, "Seed")->capture_default_str();
    b->add_option("--repeats", bench.repeats, "Runs per size (median)")->capture_default_str();
    b->add_option("--threads", bench.threads, "OpenMP threads")->capture_default_str();

    BoundsArgs bounds;
    auto* bd = app.add_subcommand("bounds", "Print the packing and lattice bounds for k");
    bd->add_option("--k", bounds.k, "Subset size")->required();
    bd->add_option("--n", bounds.n, "Point count for the empty-disk bound");
    bd->add_option("--shrink", bounds.shrink, "Lattice shrink constant")->capture_default_str();
    bd->add_option("--radius-fraction", bounds.radius_fraction, "Disk radius as a fraction of y")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (s->parsed()) return run_solve(solve);
        if (g->parsed()) return run_gen(gen);
        if (b->parsed()) return run_bench_cmd(bench);
        if (bd->parsed()) return run_bounds(bounds);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolverFailure;
    }
    return kExitUsage;
}
