#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ordvis/crossing_reach.hpp"
#include "ordvis/ordered_graph.hpp"

namespace ordvis {

/// Per-vertex optional colour in {0, 1, 2}.
class PartialColouring {
public:
    static constexpr int kNone = -1;

    PartialColouring() = default;
    explicit PartialColouring(int n) : colour_(n, kNone) {}

    int size() const { return static_cast<int>(colour_.size()); }
    int operator[](Vertex v) const { return colour_[v]; }
    bool is_coloured(Vertex v) const { return colour_[v] != kNone; }
    void set(Vertex v, int c) { colour_[v] = c; }
    void clear(Vertex v) { colour_[v] = kNone; }
    const std::vector<int>& values() const { return colour_; }

    /// Vertices with colour c, ascending.
    std::vector<Vertex> colour_class(int c) const;

private:
    std::vector<int> colour_;
};

/// Which sub-segment's strongly reachable set must avoid the colour of y
/// when the no-strong-vertex case chooses between its two free colours.
enum class StrongFreePermutation {
    kPenultimate,  // V[v_{k-1}, v_k], the literal reading
    kFinal,        // V[v_k, v_{k+1}]
};

/// Every segment the recursion entered, in visiting order.
struct ExtensionTrace {
    std::vector<Segment> segments;
    int max_depth = 0;
};

struct PartitionOptions {
    StrongFreePermutation strong_free_permutation = StrongFreePermutation::kPenultimate;
    /// Re-check the precolouring conditions and segment validity at every
    /// recursive call.
    bool defensive_checks = true;
    ExtensionTrace* trace = nullptr;
};

/// The L and R segment families of a host segment with strongly reachable
/// vertices, each sorted by (a, b).
struct SegmentFamilies {
    std::vector<Segment> left_family;
    std::vector<Segment> right_family;
};

/// Builds the families for a valid host whose strong set is non-empty.
SegmentFamilies segment_families(const ReachSets& reach);

/// Empty when `phi` is a V[x,y]-precolouring; otherwise names the failed
/// condition.
std::optional<std::string> check_precolouring(const OrderedGraph& g, const ReachSets& reach,
                                              const PartialColouring& phi);

/// Colours every uncoloured interior vertex of a valid segment so that each
/// colour class restricted to V[x,y] induces a capped graph. Requires an
/// H-free graph and a V[x,y]-precolouring; throws PreconditionError when
/// the precolouring is rejected and InternalContradiction if an invariant
/// of the recursion breaks.
PartialColouring extend_precolouring(const OrderedGraph& g, const Segment& s, PartialColouring phi,
                                     const PartitionOptions& options = {});

struct CappedPartition {
    std::array<std::vector<Vertex>, 3> parts;
    std::vector<int> colour;  // part index per vertex
};

/// Splits the vertices of an H-free ordered graph into three sets, each
/// inducing a capped ordered graph. Throws NotHFreeError otherwise.
CappedPartition partition_three_capped(const OrderedGraph& g, const PartitionOptions& options = {});

}  // namespace ordvis
