#include "ordvis/capped_partition.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ordvis/error.hpp"
#include "ordvis/obstructions.hpp"

namespace ordvis {

namespace {

std::string seg_text(const Segment& s) {
    return "V[" + std::to_string(s.x) + "," + std::to_string(s.y) + "]";
}

// The two colours other than `c`, smaller first.
std::array<int, 2> other_colours(int c) {
    switch (c) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

bool classes_capped(const OrderedGraph& g, const PartialColouring& phi, int* bad = nullptr) {
    for (int c = 0; c < 3; ++c) {
        auto cls = phi.colour_class(c);
        if (!is_capped(induced(g, cls).graph)) {
            if (bad != nullptr) {
                *bad = c;
            }
            return false;
        }
    }
    return true;
}

class Extender {
public:
    Extender(const OrderedGraph& g, const PartitionOptions& options) : g_(g), opt_(options) {}

    void extend(const ReachSets& reach, PartialColouring& phi, int depth) {
        const Segment s = reach.segment;
        if (opt_.trace != nullptr) {
            opt_.trace->segments.push_back(s);
            opt_.trace->max_depth = std::max(opt_.trace->max_depth, depth);
        }
        if (depth > g_.num_vertices()) {
            throw InternalContradiction("extension recursion deeper than the vertex count");
        }
        if (opt_.defensive_checks) {
            if (auto why = check_precolouring(g_, reach, phi)) {
                throw InternalContradiction("recursion reached " + seg_text(s) +
                                            " without a precolouring: " + *why);
            }
            std::vector<Vertex> core{s.x};
            core.insert(core.end(), reach.strong.begin(), reach.strong.end());
            core.push_back(s.y);
            if (!is_capped(induced(g_, core).graph)) {
                throw InternalContradiction("strong set of " + seg_text(s) +
                                            " with its ends is not capped");
            }
        }

        bool all_coloured = true;
        for (Vertex v = s.x + 1; v < s.y; ++v) {
            all_coloured = all_coloured && phi.is_coloured(v);
        }
        if (all_coloured) {
            return;
        }
        if (reach.strong.empty()) {
            extend_without_strong(reach, phi, depth);
        } else {
            extend_with_strong(reach, phi, depth);
        }
    }

private:
    ReachSets checked_reach(const Segment& s) const {
        if (!is_valid_segment(g_, s)) {
            throw InternalContradiction("recursion produced invalid segment " + seg_text(s));
        }
        return reach_sets(g_, s);
    }

    // Largest neighbour of w inside [lo, hi] once every pair of consecutive
    // non-adjacent vertices of the host is joined by a temporary edge.
    Vertex largest_augmented_neighbour(Vertex w, Vertex lo, Vertex hi, const Segment& host) const {
        Vertex best = -1;
        auto nb = g_.neighbours(w);
        auto it = std::upper_bound(nb.begin(), nb.end(), hi);
        if (it != nb.begin() && *(it - 1) >= lo) {
            best = *(it - 1);
        }
        for (Vertex t : {w - 1, w + 1}) {
            if (host.contains(t) && t >= lo && t <= hi) {
                best = std::max(best, t);
            }
        }
        return best;
    }

    void extend_without_strong(const ReachSets& reach, PartialColouring& phi, int depth) {
        const Segment s = reach.segment;
        std::vector<Vertex> chain{s.x};
        chain.push_back(largest_augmented_neighbour(s.x, s.x, s.y - 1, s));
        while (chain.back() != s.y) {
            const Vertex prev = chain[chain.size() - 2];
            const Vertex cur = chain.back();
            Vertex next = -1;
            for (Vertex w = prev + 1; w <= cur; ++w) {
                next = std::max(next, largest_augmented_neighbour(w, cur + 1, s.y, s));
            }
            if (next <= cur) {
                throw InternalContradiction("chain construction stalled in " + seg_text(s));
            }
            chain.push_back(next);
        }
        // chain = v_0 .. v_{k+1}
        const int k = static_cast<int>(chain.size()) - 2;
        const int cx = phi[s.x];
        for (int i = 1; i <= k; ++i) {
            phi.set(chain[i], cx);
        }

        auto [blue, green] = other_colours(cx);
        std::vector<std::optional<ReachSets>> sub(k + 1);
        for (int i = 0; i <= k; ++i) {
            if (chain[i + 1] - chain[i] > 1) {
                sub[i] = checked_reach({chain[i], chain[i + 1]});
            }
        }
        const int probe = opt_.strong_free_permutation == StrongFreePermutation::kPenultimate ? k - 1 : k;
        if (probe >= 0 && sub[probe] && !sub[probe]->strong.empty()) {
            const int assigned = (probe % 2 == 1) ? blue : green;
            if (phi.is_coloured(s.y) && assigned == phi[s.y]) {
                std::swap(blue, green);
            }
        }
        for (int i = 0; i <= k; ++i) {
            if (!sub[i]) {
                continue;
            }
            for (Vertex v : sub[i]->strong) {
                phi.set(v, (i % 2 == 1) ? blue : green);
            }
        }
        for (int i = 0; i <= k; ++i) {
            if (sub[i]) {
                extend(*sub[i], phi, depth + 1);
            }
        }
    }

    void extend_with_strong(const ReachSets& reach, PartialColouring& phi, int depth) {
        const SegmentFamilies fam = segment_families(reach);
        struct Item {
            Segment seg;
            bool in_right;
            auto operator<=>(const Item&) const = default;
        };
        std::vector<Item> order;
        for (const Segment& sg : fam.left_family) {
            order.push_back({sg, false});
        }
        for (const Segment& sg : fam.right_family) {
            order.push_back({sg, true});
        }
        std::sort(order.begin(), order.end());

        const int cs = phi[reach.strong.front()];
        const auto [col_left, col_right] = other_colours(cs);

        for (std::size_t t = 0; t < order.size(); ++t) {
            const Segment seg = order[t].seg;
            for (Vertex end : {seg.x, seg.y}) {
                if (phi.is_coloured(end)) {
                    continue;
                }
                const bool l = reach.is_left(end);
                const bool r = reach.is_right(end);
                if (l == r) {
                    throw InternalContradiction("segment end " + std::to_string(end) +
                                                " is uncoloured but not exactly one of left-/"
                                                "right-reachable");
                }
                phi.set(end, l ? col_left : col_right);
            }
            const ReachSets inner = checked_reach(seg);
            for (Vertex v : inner.strong) {
                phi.set(v, order[t].in_right ? col_right : col_left);
            }
            extend(inner, phi, depth + 1);
            for (std::size_t u = t + 1; u < order.size(); ++u) {
                for (Vertex v = order[u].seg.x + 1; v < order[u].seg.y; ++v) {
                    phi.clear(v);
                }
            }
        }
    }

    const OrderedGraph& g_;
    const PartitionOptions& opt_;
};

}  // namespace

std::vector<Vertex> PartialColouring::colour_class(int c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v) {
        if (colour_[v] == c) {
            out.push_back(v);
        }
    }
    return out;
}

SegmentFamilies segment_families(const ReachSets& reach) {
    if (reach.strong.empty()) {
        throw PreconditionError("segment families need a strongly reachable vertex");
    }
    const Segment host = reach.segment;
    std::vector<Vertex> pivots{host.x};
    pivots.insert(pivots.end(), reach.strong.begin(), reach.strong.end());
    pivots.push_back(host.y);

    std::set<Segment> left_set;
    std::set<Segment> right_set;

    // `covering` holds segments around each interior vertex reachable on the
    // `own` side, flanked by the nearest vertices reachable on the `flank`
    // side; gaps between them go to `gaps`, extended to a vertex of
    // `own` side reachability. `forward` selects which way gaps extend.
    auto fill_block = [&](Vertex p, Vertex q, auto own, auto flank, std::set<Segment>& covering,
                          std::set<Segment>& gaps, bool forward) {
        std::vector<Segment> block;
        for (Vertex r = p + 1; r < q; ++r) {
            if (!own(r)) {
                continue;
            }
            Vertex lo = r - 1;
            while (!flank(lo)) {
                --lo;
            }
            Vertex hi = r + 1;
            while (!flank(hi)) {
                ++hi;
            }
            block.push_back({lo, hi});
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        covering.insert(block.begin(), block.end());

        std::vector<Segment> holes;
        Vertex cursor = p;
        for (const Segment& sg : block) {
            if (sg.x > cursor) {
                holes.push_back({cursor, sg.x});
            }
            cursor = std::max(cursor, sg.y);
        }
        if (q > cursor) {
            holes.push_back({cursor, q});
        }
        for (const Segment& h : holes) {
            if (forward) {
                Vertex end = h.y;
                while (!own(end)) {
                    ++end;
                }
                gaps.insert({h.x, end});
            } else {
                Vertex start = h.x;
                while (!own(start)) {
                    --start;
                }
                gaps.insert({start, h.y});
            }
        }
    };

    auto is_left = [&](Vertex v) { return reach.is_left(v); };
    auto is_right = [&](Vertex v) { return reach.is_right(v); };

    const std::size_t k = reach.strong.size();
    for (std::size_t i = 0; i < k; ++i) {
        fill_block(pivots[i], pivots[i + 1], is_right, is_left, right_set, left_set, true);
    }
    fill_block(pivots[k], pivots[k + 1], is_left, is_right, left_set, right_set, false);

    SegmentFamilies fam;
    fam.left_family.assign(left_set.begin(), left_set.end());
    fam.right_family.assign(right_set.begin(), right_set.end());
    return fam;
}

std::optional<std::string> check_precolouring(const OrderedGraph& g, const ReachSets& reach,
                                              const PartialColouring& phi) {
    const Segment s = reach.segment;
    if (phi.size() != g.num_vertices()) {
        return "colouring size does not match the graph";
    }
    for (Vertex v = 0; v < phi.size(); ++v) {
        if (phi.is_coloured(v) && (phi[v] < 0 || phi[v] > 2)) {
            return "vertex " + std::to_string(v) + " has a colour outside {0,1,2}";
        }
    }
    if (!phi.is_coloured(s.x) || !phi.is_coloured(s.y)) {
        return "segment ends must be coloured";
    }
    for (Vertex v = s.x + 1; v < s.y; ++v) {
        if (phi.is_coloured(v) != reach.is_strong(v)) {
            return "interior vertex " + std::to_string(v) +
                   (reach.is_strong(v) ? " is strongly reachable but uncoloured"
                                       : " is coloured but not strongly reachable");
        }
    }
    if (!reach.strong.empty()) {
        const int cs = phi[reach.strong.front()];
        for (Vertex v : reach.strong) {
            if (phi[v] != cs) {
                return "strongly reachable vertices use more than one colour";
            }
        }
        for (Vertex v = s.x + 1; v < s.y; ++v) {
            for (Vertex u : g.neighbours(v)) {
                if (!s.contains(u) && phi.is_coloured(u) && phi[u] == cs) {
                    return "exterior vertex " + std::to_string(u) + " next to interior vertex " +
                           std::to_string(v) + " shares the strong colour";
                }
            }
        }
    }
    int bad = -1;
    if (!classes_capped(g, phi, &bad)) {
        return "colour class " + std::to_string(bad) + " does not induce a capped graph";
    }
    return std::nullopt;
}

PartialColouring extend_precolouring(const OrderedGraph& g, const Segment& s, PartialColouring phi,
                                     const PartitionOptions& options) {
    if (phi.size() != g.num_vertices()) {
        throw InputError("colouring size does not match the graph");
    }
    if (!is_valid_segment(g, s)) {
        throw PreconditionError(seg_text(s) + " is not a valid segment");
    }
    const ReachSets reach = reach_sets(g, s);
    if (auto why = check_precolouring(g, reach, phi)) {
        throw PreconditionError("not a " + seg_text(s) + "-precolouring: " + *why);
    }
    Extender(g, options).extend(reach, phi, 0);
    for (Vertex v = s.x + 1; v < s.y; ++v) {
        if (!phi.is_coloured(v)) {
            throw InternalContradiction("extension left vertex " + std::to_string(v) +
                                        " uncoloured");
        }
    }
    return phi;
}

CappedPartition partition_three_capped(const OrderedGraph& g, const PartitionOptions& options) {
    require_h_free(g);
    const int n = g.num_vertices();
    CappedPartition out;
    out.colour.assign(n, 0);
    if (n == 0) {
        return out;
    }

    // Fresh smallest and largest vertices joined by an edge make V[x,y] a
    // valid segment covering everything.
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() + 1);
    for (const Edge& e : g.edges()) {
        edges.push_back({e.lo + 1, e.hi + 1});
    }
    edges.push_back({0, n + 1});
    const OrderedGraph augmented = OrderedGraph::build(n + 2, edges);

    PartialColouring phi(n + 2);
    phi.set(0, 0);
    phi.set(n + 1, 1);
    phi = extend_precolouring(augmented, {0, n + 1}, std::move(phi), options);

    for (Vertex v = 0; v < n; ++v) {
        out.colour[v] = phi[v + 1];
        out.parts[out.colour[v]].push_back(v);
    }
    for (const auto& part : out.parts) {
        if (auto w = find_capped_violation(induced(g, part).graph)) {
            throw InternalContradiction("partition produced a part that is not capped");
        }
    }
    return out;
}

}  // namespace ordvis
