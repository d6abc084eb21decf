#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dispersion/approx.hpp"
#include "dispersion/clique.hpp"
#include "dispersion/geom.hpp"
#include "dispersion/result.hpp"

namespace dispersion {

enum class Algo { exact, brute, clique, greedy, lattice };

Algo parse_algo(const std::string& name);
std::string_view to_string(Algo a) noexcept;

struct SolveOptions {
    int threads = 1;
    bool fallback = false;
    double shrink = 0.995;
    double radius_fraction = 1.0 / 240.0;
    std::size_t max_part_cliques = 2'000'000;
};

/// Runs one solver on a point set.
DispersionResult run_solver(Algo algo, const PointSet& points, std::size_t k, const SolveOptions& options);

/// The JSON document emitted by `solve`.
struct RunReport {
    std::string algo;
    std::size_t n = 0, d = 0, k = 0;
    DispersionResult result;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> seed;
    nlohmann::json config = nlohmann::json::object();
};

/// {algo, n, d, k, value, value2, indices, closest_pair, status, elapsed_ms, seed, config}.
/// Infinite values are written as null.
nlohmann::json to_json(const RunReport& report);

/// Inverse of to_json for the fields a DispersionResult carries.
RunReport report_from_json(const nlohmann::json& doc);

// ---------------------------------------------------------------------------

struct BenchConfig {
    Algo algo = Algo::exact;
    std::size_t k = 2;
    std::size_t dim = 2;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
    int repeats = 3;
    SolveOptions solve;
};

struct BenchReport {
    BenchConfig config;
    std::vector<double> median_ms;
    double exponent = 0.0;
};

/// Times the solver on seeded uniform instances of each size (median of
/// `repeats` runs) and fits log(time) against log(n).
BenchReport run_bench(const BenchConfig& cfg);

/// Least-squares slope of log(times) over log(sizes).
double fit_exponent(const std::vector<std::size_t>& sizes, const std::vector<double>& times);

nlohmann::json to_json(const BenchReport& report);

}  // namespace dispersion
