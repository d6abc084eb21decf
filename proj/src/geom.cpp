#include "dispersion/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "dispersion/errors.hpp"

namespace dispersion {

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw UsageError("point dimension must be at least 1");
    if (coords_.size() % dim_ != 0)
        throw UsageError("coordinate count " + std::to_string(coords_.size()) +
                         " is not a multiple of dimension " + std::to_string(dim_));
    for (double c : coords_)
        if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
}

PointSet PointSet::scaled(double factor) const {
    std::vector<double> out(coords_);
    for (double& c : out) c *= factor;
    return PointSet(dim_, std::move(out));
}

PointSet PointSet::translated(std::span<const double> offset) const {
    if (offset.size() != dim_) throw UsageError("translation has wrong dimension");
    std::vector<double> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i % dim_];
    return PointSet(dim_, std::move(out));
}

double dist2(const PointSet& points, std::size_t i, std::size_t j) {
    if (i >= points.size() || j >= points.size())
        throw UsageError("point index out of range (n = " + std::to_string(points.size()) + ")");
    return dist2_unchecked(points, i, j);
}

double min_pairwise_dist2(const PointSet& points, std::span<const Index> subset) {
    std::vector<Index> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw UsageError("subset contains duplicate indices");
    if (!sorted.empty() && sorted.back() >= points.size())
        throw UsageError("subset index out of range");

    double best = kInfinity;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            best = std::min(best, dist2_unchecked(points, subset[a], subset[b]));
    return best;
}

namespace {

double cross(const PointSet& p, Index o, Index a, Index b) {
    const auto po = p.point(o), pa = p.point(a), pb = p.point(b);
    return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
}

// cross((a1 - a0), (b1 - b0))
double edge_cross(const PointSet& p, Index a0, Index a1, Index b0, Index b1) {
    const auto pa0 = p.point(a0), pa1 = p.point(a1), pb0 = p.point(b0), pb1 = p.point(b1);
    return (pa1[0] - pa0[0]) * (pb1[1] - pb0[1]) - (pa1[1] - pa0[1]) * (pb1[0] - pb0[0]);
}

PairWitness make_pair(const PointSet& p, Index a, Index b) {
    if (a > b) std::swap(a, b);
    return {a, b, dist2_unchecked(p, a, b)};
}

bool beats(const PairWitness& cand, const PairWitness& best) {
    if (cand.dist2 != best.dist2) return cand.dist2 > best.dist2;
    return std::tie(cand.i, cand.j) < std::tie(best.i, best.j);
}

PairWitness diameter_all_pairs(const PointSet& p, std::span<const Index> subset) {
    PairWitness best = make_pair(p, subset[0], subset[1]);
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            const PairWitness cand = make_pair(p, subset[a], subset[b]);
            if (beats(cand, best)) best = cand;
        }
    return best;
}

PairWitness diameter_calipers(const PointSet& p, std::span<const Index> subset) {
    const std::vector<Index> hull = convex_hull_2d(p, subset);
    const std::size_t h = hull.size();

    if (h == 1) {
        // every point coincides: all pairs tie at zero
        Index lo = subset[0], second = subset[1];
        if (lo > second) std::swap(lo, second);
        for (std::size_t t = 2; t < subset.size(); ++t) {
            const Index v = subset[t];
            if (v < lo) {
                second = lo;
                lo = v;
            } else if (v < second) {
                second = v;
            }
        }
        return make_pair(p, lo, second);
    }
    if (h == 2) return make_pair(p, hull[0], hull[1]);

    PairWitness best = make_pair(p, hull[0], hull[1]);
    auto consider = [&](Index a, Index b) {
        const PairWitness cand = make_pair(p, a, b);
        if (beats(cand, best)) best = cand;
    };

    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t ni = (i + 1) % h;
        for (std::size_t guard = 0; guard <= h; ++guard) {
            const std::size_t nj = (j + 1) % h;
            const double c = edge_cross(p, hull[i], hull[ni], hull[j], hull[nj]);
            if (c > 0) {
                j = nj;
                continue;
            }
            consider(hull[i], hull[j]);
            consider(hull[ni], hull[j]);
            if (c == 0) {
                // parallel edges: both endpoints of edge j are antipodal to edge i
                consider(hull[i], hull[nj]);
                consider(hull[ni], hull[nj]);
            }
            break;
        }
    }
    return best;
}

}  // namespace

std::vector<Index> convex_hull_2d(const PointSet& points) {
    std::vector<Index> all(points.size());
    std::iota(all.begin(), all.end(), Index{0});
    return convex_hull_2d(points, all);
}

std::vector<Index> convex_hull_2d(const PointSet& points, std::span<const Index> subset) {
    if (points.dim() != 2) throw UsageError("convex hull requires planar points");
    for (Index v : subset)
        if (v >= points.size()) throw UsageError("subset index out of range");

    std::vector<Index> order(subset.begin(), subset.end());
    auto key = [&](Index v) {
        const auto q = points.point(v);
        return std::make_tuple(q[0], q[1], v);
    };
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return key(a) < key(b); });

    // collapse coincident points onto the lowest index
    std::vector<Index> uniq;
    uniq.reserve(order.size());
    for (Index v : order) {
        if (!uniq.empty()) {
            const auto a = points.point(uniq.back()), b = points.point(v);
            if (a[0] == b[0] && a[1] == b[1]) continue;
        }
        uniq.push_back(v);
    }
    if (uniq.size() <= 2) return uniq;

    // Andrew's monotone chain; cross <= 0 pops collinear points
    std::vector<Index> hull(2 * uniq.size());
    std::size_t len = 0;
    for (Index v : uniq) {
        while (len >= 2 && cross(points, hull[len - 2], hull[len - 1], v) <= 0) --len;
        hull[len++] = v;
    }
    const std::size_t lower = len + 1;
    for (std::size_t t = uniq.size() - 1; t-- > 0;) {
        const Index v = uniq[t];
        while (len >= lower && cross(points, hull[len - 2], hull[len - 1], v) <= 0) --len;
        hull[len++] = v;
    }
    hull.resize(len - 1);
    return hull;
}

PairWitness diameter(const PointSet& points) {
    std::vector<Index> all(points.size());
    std::iota(all.begin(), all.end(), Index{0});
    return diameter(points, all);
}

PairWitness diameter(const PointSet& points, std::span<const Index> subset) {
    if (subset.size() < 2) throw UsageError("diameter needs at least two points");
    for (Index v : subset)
        if (v >= points.size()) throw UsageError("subset index out of range");
    if (points.dim() == 2) return diameter_calipers(points, subset);
    return diameter_all_pairs(points, subset);
}

std::vector<double> squared_distance_matrix(const PointSet& points) {
    const std::size_t n = points.size();
    std::vector<double> d(n * n, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = dist2_unchecked(points, i, j);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    return d;
}

}  // namespace dispersion
