#include <algorithm>
#include <bit>

#include "doctest.h"
#include "ordvis/error.hpp"
#include "ordvis/geometry.hpp"
#include "ordvis/oracles.hpp"
#include "support.hpp"

using namespace ordvis;
using namespace ordvis::oracle;
using testing::make;

TEST_CASE("clique oracle") {
    CHECK(bf_clique(testing::complete(5)) == 5);
    CHECK(bf_clique(testing::hole5()) == 2);
    CHECK(bf_clique(make(4, {})) == 1);
    CHECK(bf_clique(make(0, {})) == 0);
    CHECK(bf_clique(geom::visibility_graph(testing::twelve_gon())) == testing::kTwelveGonOmega);
    Guards small;
    small.clique_max_vertices = 4;
    CHECK_THROWS_AS(bf_clique(testing::hole5(), small), GuardExceeded);
}

TEST_CASE("chromatic oracle") {
    CHECK(bf_chromatic(testing::complete(4)) == 4);
    CHECK(bf_chromatic(testing::hole5()) == 3);
    CHECK(bf_chromatic(make(7, {})) == 1);
    CHECK(bf_chromatic(make(0, {})) == 0);
    // Mycielski graph: triangle-free with chromatic number 4.
    auto grotzsch = make(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}, {6, 0},
                              {6, 2}, {7, 1}, {7, 3}, {8, 2}, {8, 4}, {9, 3}, {9, 0},
                              {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}});
    CHECK(bf_clique(grotzsch) == 2);
    CHECK(bf_chromatic(grotzsch) == 4);
    CHECK_THROWS_AS(bf_chromatic(make(17, {})), GuardExceeded);
}

TEST_CASE("crossing-sequence oracle") {
    auto edge = make(2, {{0, 1}});
    CHECK(bf_crossing_sequence(edge, 0, 1));
    CHECK(bf_crossing_sequence(edge, 1, 0));
    auto split = make(6, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(bf_crossing_sequence(split, 3, 5));
    CHECK_FALSE(bf_crossing_sequence(split, 4, 3));
    CHECK(bf_crossing_sequence(make(4, {{0, 2}, {1, 3}}), 0, 3));
    CHECK_FALSE(bf_crossing_sequence(make(4, {{0, 2}, {1, 3}}), 3, 0));
    CHECK_THROWS_AS(bf_crossing_sequence(edge, 0, 0), InputError);
    CHECK_THROWS_AS(bf_crossing_sequence(testing::complete(6), 0, 1), GuardExceeded);
}

TEST_CASE("capped, hole and colouring oracles") {
    auto v = bf_capped(make(4, {{0, 2}, {1, 3}}));
    REQUIRE(v);
    CHECK(*v == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(bf_capped(make(4, {{0, 2}, {1, 3}, {0, 3}})));

    auto hole = bf_holes(testing::hole5());
    REQUIRE(hole);
    CHECK(*hole == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_FALSE(bf_holes(testing::complete(5)));
    CHECK_THROWS_AS(bf_holes(make(13, {})), GuardExceeded);

    auto ok = verify_colouring(testing::complete(3), {0, 1, 2});
    CHECK(ok.proper);
    CHECK(ok.num_colours == 3);
    CHECK_FALSE(verify_colouring(testing::complete(3), {0, 1, 1}).proper);
    CHECK_FALSE(verify_colouring(testing::complete(3), {0, 1}).proper);
    CHECK_FALSE(verify_colouring(testing::complete(3), {0, 1, -2}).proper);
    CHECK(verify_colouring(make(3, {}), {5, 5, 9}).num_colours == 2);
}

TEST_CASE("H-freeness oracle") {
    CHECK_FALSE(bf_h_free(testing::h_member()));
    CHECK(bf_h_free(testing::hole5()));
    CHECK(bf_h_free(testing::complete(5)));
}

TEST_CASE("clique oracle agrees with subset enumeration") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + t % 12;
        auto g = testing::random_graph(rng, n, 2 * n);
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool clique = true;
            for (int a = 0; a < n && clique; ++a) {
                for (int b = a + 1; b < n && clique; ++b) {
                    if ((mask >> a & 1) && (mask >> b & 1)) {
                        clique = g.has_edge(a, b);
                    }
                }
            }
            if (clique) {
                best = std::max(best, std::popcount(mask));
            }
        }
        CHECK(bf_clique(g) == best);
        CHECK(bf_chromatic(g) >= best);
    }
}
