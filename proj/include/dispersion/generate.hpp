#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "dispersion/approx.hpp"
#include "dispersion/geom.hpp"

namespace dispersion {

/// mt19937_64 with a portable [0, 1) conversion (top 53 bits). Streams are
/// split by seeding a child engine from a SplitMix64 hash of (seed, stream id).
class Rng {
public:
    static constexpr std::string_view kName = "mt19937_64/splitmix64";

    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint64_t next() { return engine_(); }

    Rng split(std::uint64_t stream) const;

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

enum class Distribution { uniform_square, uniform_cube, grid, circle };

Distribution parse_distribution(const std::string& name);
std::string_view to_string(Distribution d) noexcept;

/// Deterministic instance for (dist, n, seed). `dim` 0 picks the natural
/// dimension; uniform-square and circle are planar, uniform-cube is 3D and
/// grid takes any dimension (first n points of the integer grid, row-major).
PointSet generate(Distribution dist, std::size_t n, std::uint64_t seed, std::size_t dim = 0);

/// The uniform-square sequence of generate() as a stream of n points.
class UniformSquareStream {
public:
    UniformSquareStream(std::size_t n, std::uint64_t seed) : rng_(seed), remaining_(n) {}

    std::optional<Point2> operator()() {
        if (remaining_ == 0) return std::nullopt;
        --remaining_;
        const double x = rng_.uniform01();
        const double y = rng_.uniform01();
        return Point2{x, y};
    }

private:
    Rng rng_;
    std::size_t remaining_;
};

}  // namespace dispersion
