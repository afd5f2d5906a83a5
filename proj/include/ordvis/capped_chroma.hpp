#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ordvis/error.hpp"
#include "ordvis/ordered_graph.hpp"

namespace ordvis {

/// Edge-disjoint triangle-free capped graphs on the input's vertex set,
/// covering every edge; `omega` is the clique number of the input.
struct Decomposition {
    std::vector<OrderedGraph> parts;
    int omega = 0;
};

enum class ColouringClass {
    kCappedHoleFree,
    kCapped,
    kHFreeHoleFree,
    kHFree,
};

std::string_view class_name(ColouringClass c);

struct ColouringResult {
    std::vector<int> colours;  // dense, 0-based
    int num_colours = 0;
    int omega = 0;
    std::uint64_t bound = 0;   // palette size guaranteed for this class
    ColouringClass class_tag = ColouringClass::kCapped;
};

/// Collected while colouring, for callers that want to audit the steps.
struct ChromaTrace {
    std::vector<Decomposition> decompositions;
    /// Per decomposition part: the uncrossed edges that were set aside.
    std::vector<std::vector<Edge>> uncrossed;
    /// Per decomposition part: every BFS level of the 4-colouring step.
    std::vector<std::vector<std::vector<Vertex>>> bfs_levels;
    /// Colours used on the union of the uncrossed edges (0 when unused).
    std::vector<int> residue_colours;
};

struct ChromaOptions {
    /// Verify class membership before running (capped, H-free, hole-free
    /// where required). Turning this off trades safety for speed.
    bool defensive_checks = true;
    ChromaTrace* trace = nullptr;
};

/// Saturating 4^e.
std::uint64_t pow4(int e);
/// Palette size guaranteed for an input of clique number omega.
std::uint64_t colour_bound(ColouringClass c, int omega);

bool is_triangle_free(const OrderedGraph& g);

/// Edges uv (u < v) for which no triangle {x, y, v} has x, y <= u.
std::vector<Edge> triangle_crossed_complement(const OrderedGraph& g);

/// Peels triangle-crossed complements off a capped graph until the rest is
/// triangle-free. Throws NotCappedError when the check is on and fails.
Decomposition decompose_capped(const OrderedGraph& g, const ChromaOptions& options = {});

/// Clique number of an H-free graph via the capped graphs spanned by each
/// edge and its common neighbours in between.
int clique_number_hfree(const OrderedGraph& g, const ChromaOptions& options = {});

/// Edges that take part in no crossing in either role.
std::vector<Edge> uncrossed_edges(const OrderedGraph& g);

/// Proper colouring with at most 4 colours of a triangle-free, capped,
/// ordered-hole-free graph. Each BFS level (rooted at the smallest vertex of
/// its component) is 2-coloured; alternate levels use {0,1} and {2,3}.
/// `levels` receives every level when non-null.
ColouringResult four_colour_tf_capped_holefree(const OrderedGraph& g,
                                               const ChromaOptions& options = {},
                                               std::vector<std::vector<Vertex>>* levels = nullptr);

/// Smallest-last greedy colouring; throws PreconditionError when more than
/// `cap` colours would be needed.
ColouringResult degeneracy_colour(const OrderedGraph& g, int cap);

ColouringResult colour_capped(const OrderedGraph& g, const ChromaOptions& options = {});

ColouringResult colour_hfree(const OrderedGraph& g, const ChromaOptions& options = {});

/// A BFS level that is not bipartite; `cycle` is an odd cycle inside it.
class OddLevelError : public InternalContradiction {
public:
    explicit OddLevelError(std::vector<Vertex> cycle);
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

}  // namespace ordvis
