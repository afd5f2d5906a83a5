#include <algorithm>

#include "doctest.h"
#include "ordvis/error.hpp"
#include "ordvis/geometry.hpp"
#include "ordvis/obstructions.hpp"
#include "support.hpp"

using namespace ordvis;
using namespace ordvis::geom;

namespace {

Polygon square() { return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

Polygon notched() { return {{{0, 0}, {6, 0}, {6, 6}, {3, 1}, {0, 6}}}; }

Polygon transformed(const Polygon& p, std::int64_t scale, std::int64_t dx, std::int64_t dy) {
    Polygon out;
    for (const Point& q : p.points) {
        out.points.push_back({q.x * scale + dx, q.y * scale + dy});
    }
    return out;
}

}  // namespace

TEST_CASE("orientation") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
    const std::int64_t big = kMaxCoordinate;
    CHECK(orientation({-big, -big}, {big, big - 1}, {big, big}) == 1);
    CHECK_THROWS_AS(orientation({0, 0}, {1, 0}, {big * 5, 0}), InputError);
}

TEST_CASE("segment predicates") {
    CHECK(segments_cross_properly({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_cross_properly({0, 0}, {2, 2}, {1, 1}, {2, 0}));
    CHECK(segments_intersect({0, 0}, {2, 2}, {1, 1}, {2, 0}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
    CHECK(on_segment({0, 0}, {4, 4}, {2, 2}));
    CHECK_FALSE(on_segment({0, 0}, {4, 4}, {5, 5}));
}

TEST_CASE("simple and counterclockwise") {
    CHECK(is_simple_ccw(square()));
    Polygon cw{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    CHECK_FALSE(is_simple_ccw(cw));
    Polygon bowtie{{{0, 0}, {2, 2}, {2, 0}, {0, 2}}};
    CHECK_FALSE(is_simple_ccw(bowtie));
    Polygon repeated{{{0, 0}, {2, 0}, {2, 2}, {2, 0}}};
    CHECK_FALSE(is_simple_ccw(repeated));
    CHECK(is_simple_ccw(testing::twelve_gon()));
}

TEST_CASE("visibility") {
    auto sq = visibility_graph(square());
    CHECK(sq == testing::complete(4));

    auto g = visibility_graph(notched());
    CHECK_FALSE(vertices_visible(notched(), 2, 4));
    CHECK_FALSE(g.has_edge(2, 4));
    for (int i = 0; i < 5; ++i) {
        CHECK(g.has_edge(i, (i + 1) % 5));
    }
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 3));

    // A chord running along two collinear boundary edges touches the boundary only.
    Polygon flat{{{0, 0}, {6, 0}, {6, 6}, {3, 3}}};
    REQUIRE(is_simple_ccw(flat));
    CHECK(vertices_visible(flat, 0, 2));

    // Grazing a reflex vertex from inside is allowed.
    Polygon graze{{{0, 0}, {4, 0}, {4, 4}, {2, 2}, {0, 4}}};
    REQUIRE(is_simple_ccw(graze));
    CHECK(vertices_visible(graze, 0, 2));
    CHECK(vertices_visible(graze, 1, 4));

    CHECK_THROWS_AS(vertices_visible(square(), 0, 0), InputError);
    CHECK_THROWS_AS(visibility_graph(Polygon{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), InputError);
}

TEST_CASE("reference polygon fixture") {
    auto fig = testing::twelve_gon();
    CHECK(vertices_visible(fig, 0, 3));
    CHECK_FALSE(vertices_visible(fig, 1, 11));
    auto g = visibility_graph(fig);
    for (int i = 0; i < 12; ++i) {
        CHECK(g.has_edge(i, (i + 1) % 12));
    }
    std::vector<Edge> expected;
    for (auto [a, b] : testing::twelve_gon_edges_1based()) {
        expected.push_back({a - 1, b - 1});
    }
    CHECK(g.edges() == expected);
    CHECK(is_h_free(g));
    CHECK(is_ordered_hole_free(g));

    std::vector<int> without_third{0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    auto sub = curve_visibility_graph(fig, without_third);
    CHECK(sub.num_vertices() == 11);
    CHECK(is_h_free(sub));
    CHECK(is_ordered_hole_free(sub));
}

TEST_CASE("curve visibility graphs") {
    std::vector<int> three{0, 1, 3};
    CHECK(curve_visibility_graph(square(), three) == testing::complete(3));
    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(curve_visibility_graph(notched(), all) == visibility_graph(notched()));
    std::vector<int> none;
    CHECK_THROWS_AS(curve_visibility_graph(square(), none), InputError);
    std::vector<int> unsorted{2, 1};
    CHECK_THROWS_AS(curve_visibility_graph(square(), unsorted), InputError);
}

TEST_CASE("random simple polygons") {
    auto tri = random_simple_polygon(3, 5, 100);
    CHECK(tri.size() == 3);
    CHECK(is_simple_ccw(tri));

    CHECK(random_simple_polygon(25, 9, 500).points == random_simple_polygon(25, 9, 500).points);
    CHECK(random_simple_polygon(25, 9, 500).points != random_simple_polygon(25, 10, 500).points);

    auto p = random_simple_polygon(20, 42, 1000);
    CHECK(is_simple_ccw(p));
    auto g = visibility_graph(p);
    CHECK(is_h_free(g));
    CHECK(is_ordered_hole_free(g));

    CHECK_THROWS_AS(random_simple_polygon(2, 1, 100), InputError);
    CHECK_THROWS_AS(random_simple_polygon(10, 1, 5), InputError);
    CHECK_THROWS_AS(random_simple_polygon(10, 1, kMaxCoordinate + 1), InputError);
}

TEST_CASE("visibility is symmetric and invariant under translation and scaling") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto p = random_simple_polygon(8 + static_cast<int>(seed), seed, 200);
        auto g = visibility_graph(p);
        CHECK(visibility_graph(transformed(p, 3, -1000, 777)) == g);
        CHECK(visibility_graph(transformed(p, 1, 5, -5)) == g);
        for (int i = 0; i < p.size(); ++i) {
            for (int j = i + 1; j < p.size(); ++j) {
                CHECK(vertices_visible(p, i, j) == vertices_visible(p, j, i));
            }
        }
    }
}

TEST_CASE("convex polygons give complete graphs") {
    // Points on a parabola, left to right, run counterclockwise.
    for (int n = 3; n <= 12; ++n) {
        Polygon p;
        for (int i = 0; i < n; ++i) {
            p.points.push_back({i, i * i});
        }
        REQUIRE(is_simple_ccw(p));
        CHECK(visibility_graph(p) == testing::complete(n));
    }
}

TEST_CASE("point location agrees with the winding number") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto p = random_simple_polygon(12, seed, 60);
        for (const Point& v : p.points) {
            for (int dx = -1; dx <= 1; ++dx) {
                for (int dy = -1; dy <= 1; ++dy) {
                    const Point probe{v.x + dx, v.y + dy};
                    auto where = locate(p, probe);
                    if (where == Location::kBoundary) {
                        continue;
                    }
                    CHECK((where == Location::kInside) == (winding_number(p, probe) != 0));
                }
            }
        }
    }
    CHECK(locate(square(), {0, 0}) == Location::kBoundary);
    CHECK(locate(transformed(square(), 2, 0, 0), {1, 1}) == Location::kInside);
    CHECK(locate(square(), {2, 2}) == Location::kOutside);
}

TEST_CASE("polygon text format") {
    auto p = parse_polygon_string("# square\n4\n0 0\n1 0\n1 1\n0 1\n");
    CHECK(p.points == square().points);
    CHECK(parse_polygon_string(serialize_polygon(testing::twelve_gon())).points ==
          testing::twelve_gon().points);
    CHECK_THROWS_AS(parse_polygon_string("3\n0 0\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse_polygon_string("1\n0 0 0\n"), InputError);
    CHECK_THROWS_AS(parse_polygon_string("1\n2000000000 0\n"), InputError);
    CHECK_THROWS_AS(parse_polygon_string(""), InputError);
}
