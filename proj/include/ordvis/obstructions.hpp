#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordvis/error.hpp"
#include "ordvis/ordered_graph.hpp"

namespace ordvis {

/// Non-adjacent u < v with crossing sequences in both cyclic directions.
struct HWitness {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Edge> seq_uv;
    std::vector<Edge> seq_vu;
};

/// Vertices c1 < ... < ck (k >= 4) inducing exactly the cycle c1..ck c1.
struct HoleWitness {
    std::vector<Vertex> cycle;
};

/// a < b < c < d with ac, bd edges and ad missing.
struct CappedViolation {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    Vertex d = 0;

    auto operator<=>(const CappedViolation&) const = default;
};

/// Lexicographically first non-adjacent pair (u, v), u < v, that has
/// crossing sequences both ways; none iff the graph is H-free.
std::optional<HWitness> find_h_obstruction(const OrderedGraph& g);

/// For the lexicographically first edge uv that closes an ordered hole,
/// the hole through the lexicographically smallest shortest increasing
/// path from u to v. None iff the graph is ordered-hole-free.
std::optional<HoleWitness> find_ordered_hole(const OrderedGraph& g);

/// Lexicographically least violating quadruple; none iff capped.
std::optional<CappedViolation> find_capped_violation(const OrderedGraph& g);

/// Cheaper yes/no form of the capped test, O(n^2 log n).
bool is_capped(const OrderedGraph& g);

/// First crossing pair (e crosses f) in edge order; none iff outerplanar.
std::optional<std::pair<Edge, Edge>> find_crossing_pair(const OrderedGraph& g);

bool is_h_free(const OrderedGraph& g);
bool is_ordered_hole_free(const OrderedGraph& g);

// Re-verification of witnesses straight from the definitions.
bool is_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v, const std::vector<Edge>& seq);
bool verify_h_witness(const OrderedGraph& g, const HWitness& w);
bool verify_hole_witness(const OrderedGraph& g, const HoleWitness& w);
bool verify_capped_violation(const OrderedGraph& g, const CappedViolation& w);

class NotHFreeError : public PreconditionError {
public:
    explicit NotHFreeError(HWitness w);
    const HWitness& witness() const { return witness_; }

private:
    HWitness witness_;
};

class NotCappedError : public PreconditionError {
public:
    explicit NotCappedError(CappedViolation w);
    const CappedViolation& witness() const { return witness_; }

private:
    CappedViolation witness_;
};

/// Throws NotHFreeError carrying the witness if g is not H-free.
void require_h_free(const OrderedGraph& g);
/// Throws NotCappedError carrying the witness if g is not capped.
void require_capped(const OrderedGraph& g);

}  // namespace ordvis
