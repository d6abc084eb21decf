#include "dispersion/generate.hpp"

#include <cmath>
#include <numbers>

#include "dispersion/errors.hpp"

namespace dispersion {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream))); }

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform-square") return Distribution::uniform_square;
    if (name == "uniform-cube") return Distribution::uniform_cube;
    if (name == "grid") return Distribution::grid;
    if (name == "circle") return Distribution::circle;
    throw UsageError("unknown generator '" + name + "' (expected uniform-square, uniform-cube, grid or circle)");
}

std::string_view to_string(Distribution d) noexcept {
    switch (d) {
        case Distribution::uniform_square: return "uniform-square";
        case Distribution::uniform_cube: return "uniform-cube";
        case Distribution::grid: return "grid";
        case Distribution::circle: return "circle";
    }
    return "unknown";
}

namespace {

std::size_t require_dim(Distribution dist, std::size_t requested, std::size_t natural) {
    if (requested != 0 && requested != natural)
        throw UsageError(std::string(to_string(dist)) + " points have dimension " + std::to_string(natural));
    return natural;
}

}  // namespace

PointSet generate(Distribution dist, std::size_t n, std::uint64_t seed, std::size_t dim) {
    std::vector<double> coords;
    switch (dist) {
        case Distribution::uniform_square:
        case Distribution::uniform_cube: {
            dim = require_dim(dist, dim, dist == Distribution::uniform_square ? 2 : 3);
            Rng rng(seed);
            coords.resize(n * dim);
            for (double& c : coords) c = rng.uniform01();
            break;
        }
        case Distribution::grid: {
            if (dim == 0) dim = 2;
            std::size_t side = 1;
            while (static_cast<double>(std::pow(static_cast<double>(side), static_cast<double>(dim))) <
                   static_cast<double>(n))
                ++side;
            coords.reserve(n * dim);
            std::vector<std::size_t> digit(dim, 0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t t = 0; t < dim; ++t) coords.push_back(static_cast<double>(digit[t]));
                for (std::size_t t = dim; t-- > 0;) {
                    if (++digit[t] < side) break;
                    digit[t] = 0;
                }
            }
            break;
        }
        case Distribution::circle: {
            dim = require_dim(dist, dim, 2);
            Rng rng(seed);
            coords.reserve(n * 2);
            for (std::size_t i = 0; i < n; ++i) {
                const double angle = 2.0 * std::numbers::pi * rng.uniform01();
                coords.push_back(0.5 + 0.5 * std::cos(angle));
                coords.push_back(0.5 + 0.5 * std::sin(angle));
            }
            break;
        }
    }
    return PointSet(dim, std::move(coords));
}

}  // namespace dispersion
