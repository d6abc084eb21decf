#pragma once

// Instance generators and independent reference computations shared by the tests.

#include <algorithm>
#include <random>
#include <vector>

#include "dispersion/geom.hpp"

namespace testing {

using dispersion::Index;
using dispersion::PairWitness;
using dispersion::PointSet;

inline PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(n * dim);
    for (double& v : c) v = u(rng);
    return PointSet(dim, std::move(c));
}

/// Small integer coordinates: plenty of exact ties and duplicate points.
inline PointSet random_lattice_points(std::mt19937_64& rng, std::size_t n, std::size_t dim, int range) {
    std::uniform_int_distribution<int> u(0, range);
    std::vector<double> c(n * dim);
    for (double& v : c) v = u(rng);
    return PointSet(dim, std::move(c));
}

inline PointSet make_points(std::size_t dim, std::initializer_list<double> coords) {
    return PointSet(dim, std::vector<double>(coords));
}

inline PointSet unit_square() { return make_points(2, {0, 0, 1, 0, 0, 1, 1, 1}); }

/// Farthest pair by scanning every pair, lexicographically smallest on ties.
inline PairWitness all_pairs_diameter(const PointSet& p) {
    PairWitness best{0, 1, -1.0};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            double s = 0;
            for (std::size_t t = 0; t < p.dim(); ++t) {
                const double d = p.point(i)[t] - p.point(j)[t];
                s += d * d;
            }
            if (s > best.dist2) best = {static_cast<Index>(i), static_cast<Index>(j), s};
        }
    return best;
}

/// All pairwise squared distances, sorted.
inline std::vector<double> pairwise_multiset(const PointSet& p) {
    std::vector<double> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(dispersion::dist2(p, i, j));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testing
