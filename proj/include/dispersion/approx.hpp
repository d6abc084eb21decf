#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "dispersion/geom.hpp"
#include "dispersion/result.hpp"

namespace dispersion {

/// Farthest-point greedy: start from a diameter pair, then repeatedly add the
/// point whose nearest selected point is farthest (ties to the lowest index).
/// On metric inputs the result is within a factor 1/2 of optimal.
DispersionResult greedy(const PointSet& points, std::size_t k);

// ---------------------------------------------------------------------------
// Packing bounds for k points in the unit square.

struct OptUpperBound {
    double unsimplified = 0.0;  // 2 / (12^{1/4} sqrt(k) - 2)
    double simplified = 0.0;    // 2 * 1.002 / (12^{1/4} sqrt(k))
    bool simplified_valid = false;  // k >= 3e5, where simplified >= unsimplified is guaranteed
};

inline constexpr std::size_t kSimplifiedBoundMinK = 300'000;

/// Upper bound on the optimal k-dispersion distance of any k points in [0,1]^2.
OptUpperBound opt_upper_bound(std::size_t k);

/// Lattice half-spacing y = sqrt(shrink) * (4/27)^{1/4} / sqrt(k).
double lattice_y(std::size_t k, double shrink);

/// shrink^{3/2} * sqrt(3) * (4/27)^{1/4} / sqrt(k), i.e. shrink * sqrt(3) * y.
/// A successful lattice run reaches it whenever 2r <= (1 - shrink) * sqrt(3) * y,
/// which the default radius y/240 satisfies at shrink 0.995.
double alg_lower_bound(std::size_t k, double shrink);

// ---------------------------------------------------------------------------
// Triangular-lattice approximation for points in the unit square.

struct LatticeConfig {
    std::size_t k = 2;
    double shrink = 0.995;
    double radius_fraction = 1.0 / 240.0;
    /// When the lattice run fails, lattice_approx on a PointSet falls back to greedy.
    bool fallback_to_greedy = false;

    void validate() const;
    double y() const { return lattice_y(k, shrink); }
    /// Nearest-neighbour spacing sqrt(3) * y.
    double edge() const;
    double radius() const { return radius_fraction * y(); }
    /// (edge - 2 * radius)^2: guaranteed squared separation of any two disk members.
    double separation2() const;
};

using Point2 = std::array<double, 2>;

/// Lattice centers inside [y/2, 1 - y/2]^2 and the per-disk occupancy.
struct LatticeState {
    double y = 0.0, edge = 0.0, radius = 0.0;
    std::vector<Point2> centers;            // row-major construction order
    std::vector<std::size_t> row_offset;    // first center of row q; size rows + 1
    std::vector<std::optional<Index>> occupant;
    std::vector<Point2> occupant_point;
    std::size_t leftover_count = 0;

    std::size_t size() const noexcept { return centers.size(); }
    std::size_t rows() const noexcept { return row_offset.empty() ? 0 : row_offset.size() - 1; }
    std::size_t occupied() const noexcept;

    /// Coordinates of lattice point (row q, column p) before any filtering.
    Point2 lattice_point(std::ptrdiff_t q, std::ptrdiff_t p) const noexcept;
};

/// Lays out the lattice anchored at (y/2, y/2) and keeps the points inside the
/// shrunken square. Throws ConfigError when y >= 1/2.
LatticeState build_lattice(const LatticeConfig& cfg);

/// Center whose disk of radius r contains the point, if any. O(1).
std::optional<std::size_t> assign_to_disk(const Point2& point, const LatticeState& state);

/// Full result of one lattice run.
struct LatticeOutcome {
    DispersionResult result;
    std::size_t centers = 0;
    std::size_t occupied = 0;
    std::size_t leftover = 0;
    bool used_fallback = false;
};

/// Pulls points until it returns nullopt.
using PointSource = std::function<std::optional<Point2>()>;

LatticeOutcome run_lattice(const PointSet& points, const LatticeConfig& cfg);
LatticeOutcome run_lattice(const PointSource& source, const LatticeConfig& cfg);

/// One point per occupied disk, first come first kept, k disks in construction
/// order. Status is `failed` when fewer than k disks are occupied.
DispersionResult lattice_approx(const PointSet& points, std::size_t k, LatticeConfig cfg = {});

/// Upper bound on the chance that a fixed set of k disks has an empty member
/// among n uniform points: k * (1 - pi r^2)^n.
double empty_disk_probability_bound(std::size_t n, const LatticeConfig& cfg);

}  // namespace dispersion
