#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordvis {

using Vertex = int;

/// An edge stored with its smaller end first.
struct Edge {
    Vertex lo = 0;
    Vertex hi = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Normalizes an unordered pair into an Edge; the ends must differ.
Edge make_edge(Vertex a, Vertex b);

/// The consecutive block V[x,y] = {x, x+1, ..., y}, x < y.
struct Segment {
    Vertex x = 0;
    Vertex y = 0;

    auto operator<=>(const Segment&) const = default;

    bool contains(Vertex v) const { return x <= v && v <= y; }
    bool is_interior(Vertex v) const { return x < v && v < y; }
    int interior_size() const { return y - x - 1; }
};

/// A simple graph on vertices 0..n-1 whose vertex order is the index order.
///
/// Immutable after construction. Edges are kept sorted by (lo, hi), so the
/// edges whose smaller end is `v` form one contiguous block of `edges()`.
class OrderedGraph {
public:
    OrderedGraph() = default;

    /// Builds a graph from arbitrary vertex pairs. Duplicates collapse; each
    /// collapsed duplicate is reported through `duplicates` when non-null.
    /// Throws InputError on out-of-range endpoints or self-loops.
    static OrderedGraph build(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                              std::vector<Edge>* duplicates = nullptr);
    static OrderedGraph build(int n, std::span<const Edge> edges,
                              std::vector<Edge>* duplicates = nullptr);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbour list of `v`.
    std::span<const Vertex> neighbours(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.lo, e.hi); }

    /// Position of `e` in `edges()`, or -1 when absent.
    int edge_index(const Edge& e) const;

    /// Edges whose smaller end is `v`, in increasing order of the larger end.
    std::span<const Edge> edges_from(Vertex v) const;

    bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

    bool operator==(const OrderedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> first_edge_;  // n+1 offsets into edges_ by smaller end
    std::vector<int> adj_offset_;  // n+1 offsets into adj_
    std::vector<Vertex> adj_;
    std::vector<bool> matrix_;
};

/// Result of relabelling: the new graph plus translations in both directions.
struct Relabelled {
    OrderedGraph graph;
    std::vector<Vertex> to_new;  // old id -> new id, -1 when dropped
    std::vector<Vertex> to_old;  // new id -> old id
};

/// True iff e = (a,c) crosses f = (b,d), i.e. a < b < c < d. Directed: at
/// most one of crosses(g,e,f) and crosses(g,f,e) holds. Throws InputError
/// if either edge is missing from g.
bool crosses(const OrderedGraph& g, const Edge& e, const Edge& f);

/// The same test without checking membership.
inline bool edges_cross(const Edge& e, const Edge& f) {
    return e.lo < f.lo && f.lo < e.hi && e.hi < f.hi;
}

/// Relabels old vertex v as (v - r) mod n, so r becomes the minimum.
Relabelled rotate(const OrderedGraph& g, Vertex r);

/// Induced ordered subgraph on a strictly increasing vertex list.
Relabelled induced(const OrderedGraph& g, std::span<const Vertex> subset);

/// Graph on the same vertex set keeping only `keep` (must be a subset of E).
OrderedGraph with_edges(const OrderedGraph& g, std::span<const Edge> keep);

// Text format (.og): "n m" then m lines "u v"; '#' starts a comment line.

struct ParseResult {
    OrderedGraph graph;
    std::vector<std::string> warnings;
};

ParseResult parse_graph(std::istream& in);
ParseResult parse_graph_string(const std::string& text);
void write_graph(std::ostream& out, const OrderedGraph& g);
std::string serialize_graph(const OrderedGraph& g);

}  // namespace ordvis
