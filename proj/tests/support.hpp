#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ordvis/geometry.hpp"
#include "ordvis/obstructions.hpp"
#include "ordvis/ordered_graph.hpp"

namespace testing {

using ordvis::Edge;
using ordvis::OrderedGraph;
using ordvis::Vertex;

inline OrderedGraph make(int n, std::vector<std::pair<Vertex, Vertex>> pairs) {
    return OrderedGraph::build(n, pairs);
}

inline OrderedGraph complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    return make(n, pairs);
}

inline OrderedGraph hole5() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

// Member of H: 0 and 3 are joined by crossing sequences both ways.
inline OrderedGraph h_member() { return make(6, {{0, 2}, {1, 3}, {3, 5}, {0, 4}}); }

// Edges drawn at random; duplicates collapse so the result may have fewer.
inline OrderedGraph random_graph(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (n >= 2) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < m; ++k) {
            int a = pick(rng);
            int b = pick(rng);
            if (a != b) {
                pairs.emplace_back(a, b);
            }
        }
    }
    return make(n, pairs);
}

// Greedily adds random edges that keep the graph H-free.
inline OrderedGraph random_h_free(std::mt19937_64& rng, int n, int attempts) {
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < attempts; ++k) {
        int a = pick(rng);
        int b = pick(rng);
        if (a == b) {
            continue;
        }
        edges.push_back(ordvis::make_edge(a, b));
        if (!ordvis::is_h_free(OrderedGraph::build(n, edges))) {
            edges.pop_back();
        }
    }
    return OrderedGraph::build(n, edges);
}

inline std::vector<Vertex> random_subset(std::mt19937_64& rng, int n) {
    std::vector<Vertex> out;
    std::bernoulli_distribution keep(0.6);
    for (int v = 0; v < n; ++v) {
        if (keep(rng)) {
            out.push_back(v);
        }
    }
    if (out.empty() && n > 0) {
        out.push_back(0);
    }
    return out;
}

// Twelve-vertex polygon with a few reflex corners, coordinates doubled.
inline ordvis::geom::Polygon twelve_gon() {
    return {{{-28, 2}, {-4, -22}, {8, -14}, {-8, -10}, {8, 6}, {17, -8},
             {10, -22}, {26, -22}, {28, -10}, {8, 22}, {-4, 12}, {-12, 16}}};
}

// Frozen after the first computation (1-indexed vertex pairs).
inline const std::vector<std::pair<int, int>>& twelve_gon_edges_1based() {
    static const std::vector<std::pair<int, int>> edges{
        {1, 2},  {1, 4},  {1, 5},  {1, 11}, {1, 12}, {2, 3},  {2, 4},  {3, 4},
        {4, 5},  {4, 10}, {4, 11}, {4, 12}, {5, 6},  {5, 8},  {5, 9},  {5, 10},
        {5, 11}, {5, 12}, {6, 7},  {6, 8},  {6, 9},  {6, 10}, {7, 8},  {7, 9},
        {8, 9},  {8, 10}, {9, 10}, {10, 11}, {11, 12}};
    return edges;
}

inline constexpr int kTwelveGonOmega = 5;

}  // namespace testing
