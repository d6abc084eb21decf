#include "doctest.h"

#include <set>

#include "dispersion/errors.hpp"
#include "dispersion/geom.hpp"
#include "support.hpp"

using namespace dispersion;
using testing::make_points;

TEST_CASE("dist2 examples") {
    CHECK(dist2(make_points(2, {0, 0, 3, 4}), 0, 1) == 25.0);
    CHECK(dist2(make_points(2, {1, 1, 1, 1}), 0, 1) == 0.0);
    CHECK(dist2(make_points(3, {0, 0, 0, 1, 1, 1}), 0, 1) == 3.0);
    CHECK_THROWS_AS(dist2(make_points(2, {0, 0, 3, 4}), 0, 2), UsageError);
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet(2, {0.0, 1.0, 2.0}), UsageError);
    CHECK_THROWS_AS(PointSet(0, {}), UsageError);
    CHECK_THROWS_AS(PointSet(1, {std::numeric_limits<double>::quiet_NaN()}), UsageError);
    CHECK_THROWS_AS(PointSet(1, {kInfinity}), UsageError);
    CHECK(PointSet(3, {}).size() == 0);
}

TEST_CASE("dist2 is symmetric bit for bit") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const PointSet p = testing::random_points(rng, 20, 1 + trial % 4);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) REQUIRE(dist2(p, i, j) == dist2(p, j, i));
    }
}

TEST_CASE("min_pairwise_dist2") {
    const std::vector<Index> all = {0, 1, 2, 3};
    CHECK(min_pairwise_dist2(testing::unit_square(), all) == 1.0);

    const std::vector<Index> single = {3};
    CHECK(min_pairwise_dist2(testing::unit_square(), single) == kInfinity);
    CHECK(min_pairwise_dist2(testing::unit_square(), std::vector<Index>{}) == kInfinity);

    const PointSet line = make_points(2, {0, 0, 2, 0, 4, 0, 5, 0});
    CHECK(min_pairwise_dist2(line, std::vector<Index>{0, 1, 2}) == 4.0);

    CHECK_THROWS_AS(min_pairwise_dist2(line, std::vector<Index>{0, 1, 1}), UsageError);
    CHECK_THROWS_AS(min_pairwise_dist2(line, std::vector<Index>{0, 9}), UsageError);
}

TEST_CASE("min_pairwise_dist2 is permutation invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet p = testing::random_points(rng, 12, 2 + trial % 2);
        std::vector<Index> s = {0, 3, 4, 7, 9, 11};
        const double base = min_pairwise_dist2(p, s);
        std::shuffle(s.begin(), s.end(), rng);
        REQUIRE(min_pairwise_dist2(p, s) == base);
    }
}

TEST_CASE("convex hull examples") {
    const PointSet with_center = make_points(2, {0, 0, 1, 0, 1, 1, 0, 1, 0.5, 0.5});
    CHECK(convex_hull_2d(with_center) == std::vector<Index>{0, 1, 2, 3});

    const PointSet collinear = make_points(2, {0, 0, 1, 0, 2, 0});
    CHECK(convex_hull_2d(collinear) == std::vector<Index>{0, 2});

    // duplicates collapse onto the lowest index
    const PointSet dup = make_points(2, {1, 1, 0, 0, 1, 1, 2, 0, 0, 0, 1, 2});
    CHECK(convex_hull_2d(dup) == std::vector<Index>{1, 3, 5});

    CHECK(convex_hull_2d(make_points(2, {3, 3, 3, 3})) == std::vector<Index>{0});
    CHECK_THROWS_AS(convex_hull_2d(make_points(3, {0, 0, 0})), UsageError);
}

namespace {

// Hull vertices by brute force: a and b span a hull edge iff no point lies
// strictly to the right of a->b and no point is collinear beyond the segment.
std::set<Index> brute_hull_vertices(const PointSet& p) {
    std::set<Index> out;
    const std::size_t n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            bool edge = true;
            for (std::size_t c = 0; c < n && edge; ++c) {
                if (c == a || c == b) continue;
                const auto pa = p.point(a), pb = p.point(b), pc = p.point(c);
                const double cr = (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]);
                if (cr < 0) edge = false;
            }
            if (edge) {
                out.insert(static_cast<Index>(a));
                out.insert(static_cast<Index>(b));
            }
        }
    return out;
}

}  // namespace

TEST_CASE("convex hull matches brute-force edge test on random points") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + trial % 20;
        const PointSet p = testing::random_points(rng, n, 2);
        const std::vector<Index> hull = convex_hull_2d(p);
        CHECK(std::set<Index>(hull.begin(), hull.end()) == brute_hull_vertices(p));
        for (std::size_t t = 0; t < hull.size(); ++t) {
            const auto a = p.point(hull[t]), b = p.point(hull[(t + 1) % hull.size()]),
                       c = p.point(hull[(t + 2) % hull.size()]);
            REQUIRE((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0);
        }
    }
}

TEST_CASE("diameter examples") {
    const PairWitness w = diameter(make_points(2, {0, 0, 3, 4, 1, 0}));
    CHECK(w == PairWitness{0, 1, 25.0});

    const PairWitness sq = diameter(testing::unit_square());
    CHECK(sq.dist2 == 2.0);
    CHECK(sq == PairWitness{0, 3, 2.0});

    CHECK(diameter(make_points(2, {0, 0, 1, 0, 2, 0, 3, 0})) == PairWitness{0, 3, 9.0});
    CHECK(diameter(make_points(2, {5, 5, 5, 5, 5, 5})) == PairWitness{0, 1, 0.0});
    CHECK(diameter(make_points(3, {0, 0, 0, 1, 1, 1, 2, 0, 0})) == PairWitness{0, 2, 4.0});

    CHECK_THROWS_AS(diameter(make_points(2, {0, 0})), UsageError);
}

TEST_CASE("diameter equals the all-pairs scan") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 199);
        const std::size_t dim = trial % 5 == 0 ? 3 : 2;
        const PointSet p = testing::random_points(rng, n, dim);
        REQUIRE(diameter(p).dist2 == testing::all_pairs_diameter(p).dist2);
    }
}

TEST_CASE("diameter ties resolve to the smallest pair") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 40);
        const PointSet p = testing::random_lattice_points(rng, n, 2, 1 + trial % 6);
        REQUIRE(diameter(p) == testing::all_pairs_diameter(p));
    }
}

TEST_CASE("diameter pair is unchanged by integer translation") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = trial % 3 == 0 ? 3 : 2;
        const PointSet p = testing::random_lattice_points(rng, 2 + trial % 30, dim, 50);
        std::vector<double> shift(dim);
        for (double& s : shift) s = static_cast<double>(static_cast<int>(rng() % 2001) - 1000);
        const PairWitness a = diameter(p), b = diameter(p.translated(shift));
        REQUIRE(a.i == b.i);
        REQUIRE(a.j == b.j);
    }
}
