#pragma once

#include <optional>
#include <vector>

#include "ordvis/ordered_graph.hpp"

namespace ordvis {

/// One node per edge of the graph; an arc e -> f whenever e crosses f.
/// `arcs[i]` lists target node indices in increasing order. Nodes are in
/// the same order as `OrderedGraph::edges()`.
struct CrossingDigraph {
    std::vector<Edge> nodes;
    std::vector<std::vector<int>> arcs;

    std::size_t num_arcs() const;
};

CrossingDigraph crossing_digraph(const OrderedGraph& g);

/// A shortest crossing sequence from u to v, read cyclically: when v < u the
/// sequence lives in the rotation that starts at u. Edges are reported in
/// the original labels. Among shortest sequences the one ending in the
/// smallest edge (in the rotated order) wins, with parents chosen the same
/// way. Throws InputError when u == v or either is out of range.
std::optional<std::vector<Edge>> crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v);

bool has_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v);

/// Membership vector of all w with a crossing sequence from u to w.
std::vector<bool> crossing_targets(const OrderedGraph& g, Vertex u);

/// Membership vector of all w with a crossing sequence from w to v.
std::vector<bool> crossing_sources(const OrderedGraph& g, Vertex v);

/// V[x,y] is valid when there is a crossing sequence from y back to x.
bool is_valid_segment(const OrderedGraph& g, const Segment& s);

/// Left-, right- and strongly-reachable vertices of a valid segment.
/// All three lists are sorted.
struct ReachSets {
    Segment segment;
    std::vector<Vertex> left;    // subset of V[x,y)
    std::vector<Vertex> right;   // subset of V(x,y]
    std::vector<Vertex> strong;  // left ∩ right

    bool is_left(Vertex v) const;
    bool is_right(Vertex v) const;
    bool is_strong(Vertex v) const;
};

/// Throws PreconditionError if the segment is not valid.
ReachSets reach_sets(const OrderedGraph& g, const Segment& s);

}  // namespace ordvis
