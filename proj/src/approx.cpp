#include "dispersion/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dispersion/errors.hpp"

namespace dispersion {

DispersionResult greedy(const PointSet& points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 2 || k > n)
        throw UsageError("greedy needs 2 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");

    const PairWitness start = diameter(points);
    std::vector<Index> selected = {start.i, start.j};
    PairWitness closest = start;

    // nearest[p]: selected point nearest to p; gap[p] its squared distance, -1 once selected
    std::vector<double> gap(n);
    std::vector<Index> nearest(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double di = dist2_unchecked(points, p, start.i);
        const double dj = dist2_unchecked(points, p, start.j);
        gap[p] = std::min(di, dj);
        nearest[p] = dj < di ? start.j : start.i;
    }
    gap[start.i] = gap[start.j] = -1.0;

    while (selected.size() < k) {
        std::size_t pick = n;
        for (std::size_t p = 0; p < n; ++p)
            if (gap[p] >= 0.0 && (pick == n || gap[p] > gap[pick])) pick = p;

        const auto v = static_cast<Index>(pick);
        if (gap[pick] < closest.dist2) closest = PairWitness{std::min(v, nearest[pick]), std::max(v, nearest[pick]), gap[pick]};
        selected.push_back(v);
        gap[pick] = -1.0;
        for (std::size_t p = 0; p < n; ++p) {
            if (gap[p] < 0.0) continue;
            const double d = dist2_unchecked(points, p, pick);
            if (d < gap[p]) {
                gap[p] = d;
                nearest[p] = v;
            }
        }
    }

    DispersionResult r;
    r.k = k;
    r.indices = std::move(selected);
    std::sort(r.indices.begin(), r.indices.end());
    r.value2 = closest.dist2;
    r.closest_pair = closest;
    r.algo = "greedy";
    r.status = Status::approximate;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

const double kFourthRootOf12 = std::pow(12.0, 0.25);
const double kFourthRootOf4Over27 = std::pow(4.0 / 27.0, 0.25);

void check_shrink(double shrink) {
    if (!(shrink > 0.0 && shrink < 1.0)) throw UsageError("shrink must lie in (0, 1)");
}

}  // namespace

OptUpperBound opt_upper_bound(std::size_t k) {
    if (k < 2) throw UsageError("packing bound needs k >= 2");
    const double q = kFourthRootOf12 * std::sqrt(static_cast<double>(k));
    return {2.0 / (q - 2.0), 2.0 * 1.002 / q, k >= kSimplifiedBoundMinK};
}

double lattice_y(std::size_t k, double shrink) {
    check_shrink(shrink);
    if (k < 1) throw UsageError("lattice size needs k >= 1");
    return std::sqrt(shrink) * kFourthRootOf4Over27 / std::sqrt(static_cast<double>(k));
}

double alg_lower_bound(std::size_t k, double shrink) {
    check_shrink(shrink);
    if (k < 1) throw UsageError("lattice size needs k >= 1");
    return std::pow(shrink, 1.5) * std::numbers::sqrt3 * kFourthRootOf4Over27 / std::sqrt(static_cast<double>(k));
}

double empty_disk_probability_bound(std::size_t n, const LatticeConfig& cfg) {
    cfg.validate();
    const double r = cfg.radius();
    const double area = std::numbers::pi * r * r;
    return static_cast<double>(cfg.k) * std::exp(static_cast<double>(n) * std::log1p(-area));
}

// ---------------------------------------------------------------------------

void LatticeConfig::validate() const {
    if (k < 1) throw ConfigError("lattice size needs k >= 1");
    if (!(shrink > 0.0 && shrink < 1.0)) throw ConfigError("shrink must lie in (0, 1)");
    if (!(radius_fraction > 0.0 && radius_fraction <= 0.5)) throw ConfigError("radius_fraction must lie in (0, 1/2]");
}

double LatticeConfig::edge() const { return std::numbers::sqrt3 * y(); }

double LatticeConfig::separation2() const {
    const double gap = edge() - 2.0 * radius();
    return gap * gap;
}

Point2 LatticeState::lattice_point(std::ptrdiff_t q, std::ptrdiff_t p) const noexcept {
    const double half = y / 2.0;
    const double offset = (q % 2 != 0) ? edge / 2.0 : 0.0;
    return {half + offset + static_cast<double>(p) * edge, half + static_cast<double>(q) * 1.5 * y};
}

std::size_t LatticeState::occupied() const noexcept {
    return static_cast<std::size_t>(std::count_if(occupant.begin(), occupant.end(), [](const auto& o) { return o.has_value(); }));
}

LatticeState build_lattice(const LatticeConfig& cfg) {
    cfg.validate();
    LatticeState s;
    s.y = cfg.y();
    s.edge = cfg.edge();
    s.radius = cfg.radius();
    if (s.y >= 0.5) throw ConfigError("lattice spacing y = " + std::to_string(s.y) + " leaves an empty domain");

    const double hi = 1.0 - s.y / 2.0;
    s.row_offset.push_back(0);
    for (std::ptrdiff_t q = 0; s.lattice_point(q, 0)[1] <= hi; ++q) {
        for (std::ptrdiff_t p = 0;; ++p) {
            const Point2 c = s.lattice_point(q, p);
            if (c[0] > hi) break;
            s.centers.push_back(c);
        }
        s.row_offset.push_back(s.centers.size());
    }
    s.occupant.assign(s.centers.size(), std::nullopt);
    s.occupant_point.assign(s.centers.size(), Point2{});
    return s;
}

std::optional<std::size_t> assign_to_disk(const Point2& point, const LatticeState& state) {
    const double px = point[0], py = point[1];
    if (!(px >= 0.0 && px <= 1.0 && py >= 0.0 && py <= 1.0))
        throw UsageError("point lies outside the unit square");

    const double half = state.y / 2.0;
    const double r2 = state.radius * state.radius;
    const auto q0 = static_cast<std::ptrdiff_t>(std::floor((py - half) / (1.5 * state.y)));
    for (std::ptrdiff_t q = q0; q <= q0 + 1; ++q) {
        if (q < 0 || static_cast<std::size_t>(q) >= state.rows()) continue;
        const auto row = static_cast<std::size_t>(q);
        const double offset = (q % 2 != 0) ? state.edge / 2.0 : 0.0;
        const auto p0 = static_cast<std::ptrdiff_t>(std::floor((px - half - offset) / state.edge));
        const std::size_t row_len = state.row_offset[row + 1] - state.row_offset[row];
        for (std::ptrdiff_t p = p0; p <= p0 + 1; ++p) {
            if (p < 0 || static_cast<std::size_t>(p) >= row_len) continue;
            const std::size_t c = state.row_offset[row] + static_cast<std::size_t>(p);
            const double dx = px - state.centers[c][0], dy = py - state.centers[c][1];
            if (dx * dx + dy * dy <= r2) return c;
        }
    }
    return std::nullopt;
}

namespace {

struct Member {
    Index index;
    Point2 at;
};

double point_dist2(const Point2& a, const Point2& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

// Closest pair by an x-sorted sweep; pairs with dx^2 >= best cannot win.
std::optional<PairWitness> closest_pair(std::vector<Member> members) {
    if (members.size() < 2) return std::nullopt;
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) { return a.at[0] < b.at[0]; });
    PairWitness best{0, 0, kInfinity};
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const double dx = members[b].at[0] - members[a].at[0];
            if (dx * dx >= best.dist2) break;
            const double d = point_dist2(members[a].at, members[b].at);
            if (d < best.dist2) {
                const Index i = members[a].index, j = members[b].index;
                best = {std::min(i, j), std::max(i, j), d};
            }
        }
    return best;
}

LatticeOutcome lattice_pass(const PointSource& source, const LatticeConfig& cfg) {
    LatticeState state = build_lattice(cfg);
    Index next = 0;
    while (const std::optional<Point2> pt = source()) {
        const Index idx = next++;
        const std::optional<std::size_t> c = assign_to_disk(*pt, state);
        if (!c) {
            ++state.leftover_count;
        } else if (!state.occupant[*c]) {
            state.occupant[*c] = idx;
            state.occupant_point[*c] = *pt;
        }
    }

    std::vector<Member> chosen;
    for (std::size_t c = 0; c < state.size() && chosen.size() < cfg.k; ++c)
        if (state.occupant[c]) chosen.push_back({*state.occupant[c], state.occupant_point[c]});

    LatticeOutcome out;
    out.centers = state.size();
    out.occupied = state.occupied();
    out.leftover = state.leftover_count;

    DispersionResult& r = out.result;
    r.k = cfg.k;
    r.algo = "lattice";
    r.status = chosen.size() >= cfg.k ? Status::approximate : Status::failed;
    r.closest_pair = closest_pair(chosen);
    r.value2 = r.closest_pair ? r.closest_pair->dist2 : kInfinity;
    for (const Member& m : chosen) r.indices.push_back(m.index);
    std::sort(r.indices.begin(), r.indices.end());
    return out;
}

}  // namespace

LatticeOutcome run_lattice(const PointSource& source, const LatticeConfig& cfg) {
    if (cfg.k < 2) throw UsageError("lattice approximation needs k >= 2");
    return lattice_pass(source, cfg);
}

LatticeOutcome run_lattice(const PointSet& points, const LatticeConfig& cfg) {
    if (points.dim() != 2) throw UsageError("lattice approximation needs planar points");
    if (cfg.k < 2) throw UsageError("lattice approximation needs k >= 2");
    std::size_t i = 0;
    const PointSource source = [&]() -> std::optional<Point2> {
        if (i == points.size()) return std::nullopt;
        const auto p = points.point(i++);
        return Point2{p[0], p[1]};
    };
    LatticeOutcome out = lattice_pass(source, cfg);
    if (out.result.status == Status::failed && cfg.fallback_to_greedy && cfg.k <= points.size()) {
        out.result = greedy(points, cfg.k);
        out.used_fallback = true;
    }
    return out;
}

DispersionResult lattice_approx(const PointSet& points, std::size_t k, LatticeConfig cfg) {
    cfg.k = k;
    return run_lattice(points, cfg).result;
}

}  // namespace dispersion
