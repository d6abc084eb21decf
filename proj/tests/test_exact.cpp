#include "doctest.h"

#include "dispersion/errors.hpp"
#include "dispersion/exact.hpp"
#include "support.hpp"

using namespace dispersion;
using testing::make_points;

namespace {

PointSet grid3x3() { return make_points(2, {0, 0, 0, 1, 0, 2, 1, 0, 1, 1, 1, 2, 2, 0, 2, 1, 2, 2}); }

void check_consistent(const PointSet& p, const DispersionResult& r) {
    REQUIRE(r.indices.size() == r.k);
    REQUIRE(std::is_sorted(r.indices.begin(), r.indices.end()));
    REQUIRE(std::adjacent_find(r.indices.begin(), r.indices.end()) == r.indices.end());
    REQUIRE(min_pairwise_dist2(p, r.indices) == r.value2);
    if (r.closest_pair) {
        REQUIRE(std::binary_search(r.indices.begin(), r.indices.end(), r.closest_pair->i));
        REQUIRE(std::binary_search(r.indices.begin(), r.indices.end(), r.closest_pair->j));
        REQUIRE(dist2(p, r.closest_pair->i, r.closest_pair->j) == r.value2);
    }
}

}  // namespace

TEST_CASE("brute force examples") {
    CHECK(brute_force(testing::unit_square(), 4).value2 == 1.0);
    CHECK(brute_force(testing::unit_square(), 2).value2 == 2.0);

    const DispersionResult line = brute_force(make_points(2, {0, 0, 2, 0, 4, 0, 5, 0}), 3);
    CHECK(line.value2 == 4.0);
    CHECK(line.indices == std::vector<Index>{0, 1, 2});
    CHECK(line.status == Status::exact);

    const DispersionResult one = brute_force(testing::unit_square(), 1);
    CHECK(one.indices == std::vector<Index>{0});
    CHECK(one.value2 == kInfinity);

    CHECK_THROWS_AS(brute_force(testing::unit_square(), 5), UsageError);
    CHECK_THROWS_AS(brute_force(testing::unit_square(), 0), UsageError);
}

TEST_CASE("brute force returns the lexicographically smallest maximizer") {
    // every 3-subset of the square has min distance 1
    CHECK(brute_force(testing::unit_square(), 3).indices == std::vector<Index>{0, 1, 2});
    // 3x3 grid corners are the unique optimum for k = 4
    CHECK(brute_force(grid3x3(), 4).indices == std::vector<Index>{0, 2, 6, 8});
}

TEST_CASE("solve_exact examples") {
    const DispersionResult sq = solve_exact(testing::unit_square(), 3);
    CHECK(sq.value2 == 1.0);
    check_consistent(testing::unit_square(), sq);

    const DispersionResult grid = solve_exact(grid3x3(), 4);
    CHECK(grid.value2 == 4.0);
    CHECK(grid.indices == std::vector<Index>{0, 2, 6, 8});

    std::mt19937_64 rng(12);
    const PointSet cube = testing::random_points(rng, 12, 3);
    CHECK(solve_exact(cube, 5).value2 == brute_force(cube, 5).value2);
}

TEST_CASE("solve_exact base cases and errors") {
    const DispersionResult one = solve_exact(testing::unit_square(), 1);
    CHECK(one.indices == std::vector<Index>{0});
    CHECK(one.value2 == kInfinity);
    CHECK_FALSE(one.closest_pair.has_value());

    const DispersionResult two = solve_exact(testing::unit_square(), 2);
    CHECK(two.indices == std::vector<Index>{0, 3});
    CHECK(two.closest_pair == PairWitness{0, 3, 2.0});

    CHECK(solve_exact(testing::unit_square(), 4).value2 == 1.0);
    CHECK_THROWS_AS(solve_exact(testing::unit_square(), 5), UsageError);
    CHECK_THROWS_AS(solve_exact(testing::unit_square(), 0), UsageError);
    CHECK_THROWS_AS(solve_exact(testing::unit_square(), 2, ExactOptions{0}), UsageError);
}

TEST_CASE("solve_exact handles coincident points") {
    const PointSet same = make_points(2, {1, 1, 1, 1, 1, 1, 1, 1});
    for (std::size_t k = 1; k <= 4; ++k) {
        const DispersionResult r = solve_exact(same, k);
        check_consistent(same, r);
        if (k >= 2) CHECK(r.value2 == 0.0);
    }
    const PointSet mixed = make_points(2, {0, 0, 0, 0, 3, 0, 3, 0, 0, 4});
    CHECK(solve_exact(mixed, 4).value2 == brute_force(mixed, 4).value2);
    CHECK(solve_exact(mixed, 5).value2 == 0.0);
}

TEST_CASE("solve_exact matches the exhaustive oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(rng() % 10);
        const std::size_t dim = 2 + trial % 2;
        const std::size_t k = std::min<std::size_t>(n, 2 + static_cast<std::size_t>(rng() % 5));
        const PointSet p = trial % 4 == 3 ? testing::random_lattice_points(rng, n, dim, 3)
                                          : testing::random_points(rng, n, dim);
        const DispersionResult got = solve_exact(p, k);
        const DispersionResult want = brute_force(p, k);
        INFO("trial " << trial << " n=" << n << " k=" << k);
        REQUIRE(got.value2 == want.value2);
        check_consistent(p, got);
        check_consistent(p, want);
    }
}

TEST_CASE("parallel pair scan returns the serial answer") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const PointSet p = testing::random_points(rng, 40, 2 + trial % 2);
        const std::size_t k = 3 + trial % 4;
        const DispersionResult serial = solve_exact(p, k, ExactOptions{1});
        for (int threads : {2, 4}) {
            const DispersionResult par = solve_exact(p, k, ExactOptions{threads});
            REQUIRE(par.value2 == serial.value2);
            REQUIRE(par.indices == serial.indices);
        }
    }
}

TEST_CASE("solve_exact is deterministic") {
    std::mt19937_64 rng(8);
    const PointSet p = testing::random_points(rng, 60, 2);
    const DispersionResult first = solve_exact(p, 5);
    for (int rep = 0; rep < 3; ++rep) CHECK(solve_exact(p, 5).indices == first.indices);
}
