#pragma once

#include "dispersion/geom.hpp"
#include "dispersion/result.hpp"

namespace dispersion {

struct ExactOptions {
    /// OpenMP threads for the top-level pair scan; 1 runs the serial reference path.
    int threads = 1;
};

/// Exhaustive search over all C(n, k) subsets. Returns the lexicographically
/// smallest maximizer. Independent of solve_exact; used as the test oracle.
DispersionResult brute_force(const PointSet& points, std::size_t k);

/// Exact max-min k-dispersion by recursive closest-pair guessing.
///
/// Every pair (a, b) is a guess for the closest pair of an optimal subset. With
/// x = |ab|, every point strictly closer than x to a or b is discarded and the
/// (k - 2)-dispersion of the survivors is solved recursively; the guess is
/// accepted when that recursive optimum is at least x. Pairs are scanned by
/// decreasing distance, so the first accepted pair is optimal. k = 2 is the
/// diameter and k = 1 is the point with index 0.
///
/// The returned value2 does not depend on the thread count, and neither does the
/// subset: blocks of pairs are evaluated in parallel and the earliest accepted
/// pair in scan order wins.
DispersionResult solve_exact(const PointSet& points, std::size_t k, const ExactOptions& options = {});

}  // namespace dispersion
