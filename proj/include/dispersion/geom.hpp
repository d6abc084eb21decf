#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dispersion {

using Index = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// n points in d dimensions, stored row-major. Coordinates are finite; duplicates allowed.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t dim, std::vector<double> coords);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ ? coords_.size() / dim_ : 0; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> point(std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const noexcept { return coords_; }

    /// Every coordinate multiplied by `factor`.
    PointSet scaled(double factor) const;
    /// Every point shifted by `offset` (length must equal dim()).
    PointSet translated(std::span<const double> offset) const;

private:
    std::size_t dim_ = 1;
    std::vector<double> coords_;
};

/// A pair of point indices with i < j and their squared distance.
struct PairWitness {
    Index i = 0;
    Index j = 0;
    double dist2 = 0.0;

    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Squared Euclidean distance. Throws UsageError for out-of-range indices.
double dist2(const PointSet& points, std::size_t i, std::size_t j);

/// Unchecked variant for hot loops.
inline double dist2_unchecked(const PointSet& points, std::size_t i, std::size_t j) noexcept {
    const auto a = points.point(i);
    const auto b = points.point(j);
    double sum = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const double diff = a[t] - b[t];
        sum += diff * diff;
    }
    return sum;
}

/// Minimum squared distance over all unordered pairs in `subset`; +inf when |subset| <= 1.
/// Throws UsageError on duplicate or out-of-range indices.
double min_pairwise_dist2(const PointSet& points, std::span<const Index> subset);

/// Extreme points of a planar set in counterclockwise order, starting from the
/// lexicographically smallest. Collinear edge points are dropped and duplicate
/// coordinates collapse to their lowest index.
std::vector<Index> convex_hull_2d(const PointSet& points);
std::vector<Index> convex_hull_2d(const PointSet& points, std::span<const Index> subset);

/// Farthest pair. Planar input uses hull + rotating calipers, other dimensions
/// scan all pairs. Ties go to the lexicographically smallest (i, j).
PairWitness diameter(const PointSet& points);
PairWitness diameter(const PointSet& points, std::span<const Index> subset);

/// Squared distances between all pairs, as a dense row-major n x n matrix.
std::vector<double> squared_distance_matrix(const PointSet& points);

}  // namespace dispersion
