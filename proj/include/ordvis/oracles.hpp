#pragma once

#include <optional>
#include <vector>

#include "ordvis/ordered_graph.hpp"

// Definition-literal reference implementations. They only read the vertex
// count and edge list of their input and share no code with the fast paths.
namespace ordvis::oracle {

struct Guards {
    int clique_max_vertices = 64;
    int chromatic_max_vertices = 16;
    int xseq_max_edges = 14;
    int holes_max_vertices = 12;
    int capped_max_vertices = 200;
};

/// Exact clique number by Bron-Kerbosch with pivoting.
int bf_clique(const OrderedGraph& g, const Guards& guards = {});

/// Exact chromatic number by backtracking from the clique lower bound up.
int bf_chromatic(const OrderedGraph& g, const Guards& guards = {});

/// Enumerates sequences of distinct edges straight from the definition.
bool bf_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v, const Guards& guards = {});

/// (a, b, c, d) lexicographically least with a<b<c<d, ac, bd in E, ad not.
std::optional<std::vector<Vertex>> bf_capped(const OrderedGraph& g, const Guards& guards = {});

/// First vertex subset (in increasing bitmask order) that induces an
/// ordered hole.
std::optional<std::vector<Vertex>> bf_holes(const OrderedGraph& g, const Guards& guards = {});

/// Checks every non-adjacent pair for crossing sequences both ways with
/// bf_crossing_sequence.
bool bf_h_free(const OrderedGraph& g, const Guards& guards = {});

struct ColouringCheck {
    bool proper = false;
    int num_colours = 0;
};

/// No monochromatic edge; counts distinct colours. Negative colours or a
/// size mismatch make the colouring improper.
ColouringCheck verify_colouring(const OrderedGraph& g, const std::vector<int>& colours);

}  // namespace ordvis::oracle
