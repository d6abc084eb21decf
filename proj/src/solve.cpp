#include "dispersion/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dispersion/errors.hpp"
#include "dispersion/exact.hpp"
#include "dispersion/generate.hpp"

namespace dispersion {

using nlohmann::json;

Algo parse_algo(const std::string& name) {
    if (name == "exact") return Algo::exact;
    if (name == "brute") return Algo::brute;
    if (name == "clique") return Algo::clique;
    if (name == "greedy") return Algo::greedy;
    if (name == "lattice") return Algo::lattice;
    throw UsageError("unknown algorithm '" + name + "' (expected exact, brute, clique, greedy or lattice)");
}

std::string_view to_string(Algo a) noexcept {
    switch (a) {
        case Algo::exact: return "exact";
        case Algo::brute: return "brute";
        case Algo::clique: return "clique";
        case Algo::greedy: return "greedy";
        case Algo::lattice: return "lattice";
    }
    return "unknown";
}

DispersionResult run_solver(Algo algo, const PointSet& points, std::size_t k, const SolveOptions& options) {
    switch (algo) {
        case Algo::exact: return solve_exact(points, k, ExactOptions{options.threads});
        case Algo::brute: return brute_force(points, k);
        case Algo::clique: return solve_clique(points, k, CliqueOptions{options.max_part_cliques, options.threads});
        case Algo::greedy: return greedy(points, k);
        case Algo::lattice: {
            LatticeConfig cfg;
            cfg.shrink = options.shrink;
            cfg.radius_fraction = options.radius_fraction;
            cfg.fallback_to_greedy = options.fallback;
            return lattice_approx(points, k, cfg);
        }
    }
    throw UsageError("unknown algorithm");
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Status parse_status(const std::string& s) {
    if (s == "exact") return Status::exact;
    if (s == "approximate") return Status::approximate;
    if (s == "failed") return Status::failed;
    throw ParseError("unknown status '" + s + "'", 0);
}

}  // namespace

json to_json(const RunReport& report) {
    const DispersionResult& r = report.result;
    json doc;
    doc["algo"] = report.algo;
    doc["n"] = report.n;
    doc["d"] = report.d;
    doc["k"] = report.k;
    if (r.metric == Metric::raw_weight) {
        doc["value"] = finite_or_null(r.value2);
        doc["value2"] = finite_or_null(r.value2 * r.value2);
    } else {
        doc["value"] = finite_or_null(r.value());
        doc["value2"] = finite_or_null(r.value2);
    }
    doc["indices"] = r.indices;
    doc["closest_pair"] = r.closest_pair ? json{{"i", r.closest_pair->i}, {"j", r.closest_pair->j}} : json(nullptr);
    doc["status"] = std::string(to_string(r.status));
    doc["elapsed_ms"] = report.elapsed_ms;
    doc["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    doc["config"] = report.config;
    return doc;
}

RunReport report_from_json(const json& doc) {
    RunReport rep;
    rep.algo = doc.at("algo").get<std::string>();
    rep.n = doc.at("n").get<std::size_t>();
    rep.d = doc.at("d").get<std::size_t>();
    rep.k = doc.at("k").get<std::size_t>();
    rep.elapsed_ms = doc.at("elapsed_ms").get<double>();
    if (!doc.at("seed").is_null()) rep.seed = doc.at("seed").get<std::uint64_t>();
    rep.config = doc.at("config");

    DispersionResult& r = rep.result;
    r.k = rep.k;
    r.algo = rep.algo;
    r.indices = doc.at("indices").get<std::vector<Index>>();
    r.status = parse_status(doc.at("status").get<std::string>());
    r.value2 = doc.at("value2").is_null() ? kInfinity : doc.at("value2").get<double>();
    if (!doc.at("closest_pair").is_null()) {
        const json& cp = doc.at("closest_pair");
        r.closest_pair = PairWitness{cp.at("i").get<Index>(), cp.at("j").get<Index>(), r.value2};
    }
    return rep;
}

// ---------------------------------------------------------------------------

double fit_exponent(const std::vector<std::size_t>& sizes, const std::vector<double>& times) {
    if (sizes.size() != times.size() || sizes.size() < 2) throw UsageError("exponent fit needs matching sizes and times");
    const double m = static_cast<double>(sizes.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(std::max(times[i], 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.sizes.size() < 4) throw UsageError("bench needs at least 4 sizes");
    if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end(), std::less_equal<>()))
        throw UsageError("bench sizes must be strictly increasing");
    if (cfg.repeats < 1) throw UsageError("bench repeats must be positive");
    Distribution dist;
    if (cfg.dim == 2) dist = Distribution::uniform_square;
    else if (cfg.dim == 3) dist = Distribution::uniform_cube;
    else throw UsageError("bench supports d = 2 or d = 3");

    BenchReport report;
    report.config = cfg;
    for (std::size_t n : cfg.sizes) {
        const PointSet points = generate(dist, n, cfg.seed);
        std::vector<double> runs;
        for (int rep = 0; rep < cfg.repeats; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            DispersionResult r;
            try {
                r = run_solver(cfg.algo, points, cfg.k, cfg.solve);
            } catch (const std::exception& e) {
                throw std::runtime_error("bench " + std::string(to_string(cfg.algo)) + " at n = " + std::to_string(n) +
                                         ": " + e.what());
            }
            const auto stop = std::chrono::steady_clock::now();
            if (r.status == Status::failed)
                throw std::runtime_error("bench " + std::string(to_string(cfg.algo)) + " failed at n = " +
                                         std::to_string(n));
            runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(runs.begin(), runs.end());
        report.median_ms.push_back(runs[runs.size() / 2]);
    }
    report.exponent = fit_exponent(cfg.sizes, report.median_ms);
    return report;
}

json to_json(const BenchReport& report) {
    const BenchConfig& c = report.config;
    json doc;
    doc["algo"] = std::string(to_string(c.algo));
    doc["k"] = c.k;
    doc["d"] = c.dim;
    doc["seed"] = c.seed;
    doc["repeats"] = c.repeats;
    doc["threads"] = c.solve.threads;
    doc["sizes"] = c.sizes;
    doc["median_ms"] = report.median_ms;
    doc["fitted_exponent"] = report.exponent;
    doc["prng"] = std::string(Rng::kName);
    return doc;
}

}  // namespace dispersion
