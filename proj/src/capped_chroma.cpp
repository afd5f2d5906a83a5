#include "ordvis/capped_chroma.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>

#include "ordvis/capped_partition.hpp"
#include "ordvis/obstructions.hpp"

namespace ordvis {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) {
        return kSaturated;
    }
    return a * b;
}

std::vector<Edge> edge_difference(const std::vector<Edge>& all, const std::vector<Edge>& drop) {
    std::vector<Edge> out;
    std::set_difference(all.begin(), all.end(), drop.begin(), drop.end(), std::back_inserter(out));
    return out;
}

bool is_proper(const OrderedGraph& g, const std::vector<int>& colours) {
    for (const Edge& e : g.edges()) {
        if (colours[e.lo] == colours[e.hi]) {
            return false;
        }
    }
    return true;
}

// Renumbers colour keys densely in first-seen vertex order.
template <class Key>
int densify(const std::vector<Key>& keys, std::vector<int>& out) {
    std::map<Key, int> ids;
    out.resize(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
        auto [it, fresh] = ids.emplace(keys[v], static_cast<int>(ids.size()));
        out[v] = it->second;
    }
    return static_cast<int>(ids.size());
}

// Odd cycle through a monochromatic edge (a, b) of a BFS 2-colouring.
std::vector<Vertex> odd_cycle(const std::vector<Vertex>& parent, const std::vector<int>& depth,
                              Vertex a, Vertex b) {
    std::vector<Vertex> left{a};
    std::vector<Vertex> right{b};
    while (left.back() != right.back()) {
        if (depth[left.back()] >= depth[right.back()]) {
            left.push_back(parent[left.back()]);
        } else {
            right.push_back(parent[right.back()]);
        }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

}  // namespace

OddLevelError::OddLevelError(std::vector<Vertex> cycle)
    : InternalContradiction("BFS level is not bipartite; an upstream precondition failed"),
      cycle_(std::move(cycle)) {}

std::string_view class_name(ColouringClass c) {
    switch (c) {
        case ColouringClass::kCappedHoleFree: return "capped_hole_free";
        case ColouringClass::kCapped: return "capped";
        case ColouringClass::kHFreeHoleFree: return "hfree_hole_free";
        case ColouringClass::kHFree: return "hfree";
    }
    return "unknown";
}

std::uint64_t pow4(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r = sat_mul(r, 4);
    }
    return r;
}

std::uint64_t colour_bound(ColouringClass c, int omega) {
    if (omega < 2) {
        return 1;
    }
    const auto w = static_cast<std::uint64_t>(omega);
    switch (c) {
        case ColouringClass::kCappedHoleFree: return pow4(omega - 1);
        case ColouringClass::kCapped: return sat_mul(pow4(omega), w - 1);
        case ColouringClass::kHFreeHoleFree: return sat_mul(3, pow4(omega - 1));
        case ColouringClass::kHFree: return sat_mul(3, sat_mul(pow4(omega), w - 1));
    }
    return kSaturated;
}

bool is_triangle_free(const OrderedGraph& g) {
    for (const Edge& e : g.edges()) {
        auto a = g.neighbours(e.lo);
        auto b = g.neighbours(e.hi);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j) {
                return false;
            }
            *i < *j ? ++i : ++j;
        }
    }
    return true;
}

std::vector<Edge> triangle_crossed_complement(const OrderedGraph& g) {
    const int n = g.num_vertices();
    // threshold[v]: smallest y such that v is in a triangle {x, y, v} with
    // x < y < v. Edge uv is triangle-crossed iff threshold[v] <= u.
    std::vector<Vertex> threshold(n, n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbours(v);
        for (auto y = nb.begin(); y != nb.end() && *y < v && threshold[v] == n; ++y) {
            for (auto x = nb.begin(); x != y; ++x) {
                if (g.has_edge(*x, *y)) {
                    threshold[v] = *y;
                    break;
                }
            }
        }
    }
    std::vector<Edge> keep;
    for (const Edge& e : g.edges()) {
        if (e.lo < threshold[e.hi]) {
            keep.push_back(e);
        }
    }
    return keep;
}

Decomposition decompose_capped(const OrderedGraph& g, const ChromaOptions& options) {
    if (options.defensive_checks) {
        require_capped(g);
    }
    Decomposition d;
    if (g.num_edges() == 0) {
        d.omega = g.num_vertices() > 0 ? 1 : 0;
        return d;
    }
    OrderedGraph rest = g;
    while (!is_triangle_free(rest)) {
        std::vector<Edge> f = triangle_crossed_complement(rest);
        d.parts.push_back(OrderedGraph::build(g.num_vertices(), f));
        rest = OrderedGraph::build(g.num_vertices(), edge_difference(rest.edges(), f));
    }
    d.parts.push_back(std::move(rest));
    d.omega = static_cast<int>(d.parts.size()) + 1;
    if (options.trace != nullptr) {
        options.trace->decompositions.push_back(d);
    }
    return d;
}

int clique_number_hfree(const OrderedGraph& g, const ChromaOptions& options) {
    if (options.defensive_checks) {
        require_h_free(g);
    }
    if (g.num_vertices() == 0) {
        return 0;
    }
    int best = 1;
    ChromaOptions inner;
    inner.defensive_checks = false;
    for (const Edge& uv : g.edges()) {
        std::vector<Vertex> span{uv.lo};
        for (Vertex x = uv.lo + 1; x < uv.hi; ++x) {
            if (g.has_edge(uv.lo, x) && g.has_edge(x, uv.hi)) {
                span.push_back(x);
            }
        }
        span.push_back(uv.hi);
        if (static_cast<int>(span.size()) <= best) {
            continue;
        }
        const OrderedGraph sub = induced(g, span).graph;
        if (options.defensive_checks && !is_capped(sub)) {
            throw InternalContradiction("edge span of an H-free graph is not capped");
        }
        best = std::max(best, decompose_capped(sub, inner).omega);
    }
    return best;
}

std::vector<Edge> uncrossed_edges(const OrderedGraph& g) {
    const int n = g.num_vertices();
    std::vector<Vertex> lowest(n);
    std::vector<Vertex> highest(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbours(v);
        lowest[v] = nb.empty() ? v : nb.front();
        highest[v] = nb.empty() ? v : nb.back();
    }
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        bool crossed = false;
        for (Vertex b = e.lo + 1; b < e.hi && !crossed; ++b) {
            crossed = lowest[b] < e.lo || highest[b] > e.hi;
        }
        if (!crossed) {
            out.push_back(e);
        }
    }
    return out;
}

ColouringResult four_colour_tf_capped_holefree(const OrderedGraph& g, const ChromaOptions& options,
                                               std::vector<std::vector<Vertex>>* levels) {
    if (options.defensive_checks) {
        if (!is_triangle_free(g)) {
            throw PreconditionError("four-colouring needs a triangle-free graph");
        }
        require_capped(g);
        if (!is_ordered_hole_free(g)) {
            throw PreconditionError("four-colouring needs an ordered-hole-free graph");
        }
    }
    const int n = g.num_vertices();
    std::vector<int> depth(n, -1);
    std::vector<int> colour(n, -1);

    for (Vertex root = 0; root < n; ++root) {
        if (depth[root] >= 0) {
            continue;
        }
        // BFS layers of this component; root is its smallest vertex.
        std::vector<std::vector<Vertex>> layers{{root}};
        depth[root] = 0;
        while (true) {
            std::vector<Vertex> next;
            for (Vertex v : layers.back()) {
                for (Vertex w : g.neighbours(v)) {
                    if (depth[w] < 0) {
                        depth[w] = depth[v] + 1;
                        next.push_back(w);
                    }
                }
            }
            if (next.empty()) {
                break;
            }
            std::sort(next.begin(), next.end());
            layers.push_back(std::move(next));
        }

        for (std::size_t li = 0; li < layers.size(); ++li) {
            const auto& layer = layers[li];
            const int base = (li % 2 == 0) ? 0 : 2;
            // 2-colour the subgraph induced by the layer.
            std::vector<Vertex> parent(n, -1);
            std::vector<int> side_depth(n, 0);
            for (Vertex s : layer) {
                if (colour[s] >= 0) {
                    continue;
                }
                colour[s] = base;
                std::deque<Vertex> queue{s};
                while (!queue.empty()) {
                    Vertex v = queue.front();
                    queue.pop_front();
                    for (Vertex w : g.neighbours(v)) {
                        if (depth[w] != depth[v]) {
                            continue;
                        }
                        if (colour[w] < 0) {
                            colour[w] = base + 1 - (colour[v] - base);
                            parent[w] = v;
                            side_depth[w] = side_depth[v] + 1;
                            queue.push_back(w);
                        } else if (colour[w] == colour[v]) {
                            throw OddLevelError(odd_cycle(parent, side_depth, v, w));
                        }
                    }
                }
            }
            if (levels != nullptr) {
                levels->push_back(layer);
            }
        }
    }

    ColouringResult r;
    r.num_colours = densify(colour, r.colours);
    r.omega = g.num_edges() > 0 ? 2 : (n > 0 ? 1 : 0);
    r.bound = 4;
    r.class_tag = ColouringClass::kCappedHoleFree;
    if (!is_proper(g, r.colours)) {
        throw InternalContradiction("level colouring is not proper");
    }
    return r;
}

ColouringResult degeneracy_colour(const OrderedGraph& g, int cap) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    int max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    // Bucket queue keyed by current degree; ties go to the smallest vertex.
    std::vector<std::vector<Vertex>> bucket(max_deg + 1);
    for (Vertex v = n - 1; v >= 0; --v) {
        bucket[deg[v]].push_back(v);
    }
    std::vector<bool> removed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    int low = 0;
    while (static_cast<int>(order.size()) < n) {
        low = std::max(0, low - 1);
        while (bucket[low].empty()) {
            ++low;
        }
        Vertex v = bucket[low].back();
        bucket[low].pop_back();
        if (removed[v] || deg[v] != low) {
            continue;
        }
        removed[v] = true;
        order.push_back(v);
        for (Vertex w : g.neighbours(v)) {
            if (!removed[w]) {
                --deg[w];
                bucket[deg[w]].push_back(w);
            }
        }
    }

    std::vector<int> colour(n, -1);
    int used = 0;
    std::vector<bool> taken;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        taken.assign(used + 1, false);
        for (Vertex w : g.neighbours(*it)) {
            if (colour[w] >= 0) {
                taken[colour[w]] = true;
            }
        }
        int c = 0;
        while (taken[c]) {
            ++c;
        }
        colour[*it] = c;
        used = std::max(used, c + 1);
    }
    if (used > cap) {
        throw PreconditionError("greedy colouring needs " + std::to_string(used) +
                                " colours, budget is " + std::to_string(cap));
    }
    ColouringResult r;
    r.colours = std::move(colour);
    r.num_colours = used;
    r.bound = static_cast<std::uint64_t>(std::max(cap, 0));
    r.class_tag = ColouringClass::kCapped;
    return r;
}

ColouringResult colour_capped(const OrderedGraph& g, const ChromaOptions& options) {
    if (options.defensive_checks) {
        require_capped(g);
    }
    const int n = g.num_vertices();
    ChromaOptions inner = options;
    inner.defensive_checks = false;
    const Decomposition d = decompose_capped(g, inner);
    const bool hole_free = is_ordered_hole_free(g);

    ColouringResult r;
    r.omega = d.omega;
    r.class_tag = hole_free ? ColouringClass::kCappedHoleFree : ColouringClass::kCapped;
    r.bound = colour_bound(r.class_tag, d.omega);
    if (d.omega < 2) {
        r.colours.assign(n, 0);
        r.num_colours = n > 0 ? 1 : 0;
        return r;
    }

    std::vector<std::vector<int>> tuple(n);
    std::vector<Edge> residue;
    for (const OrderedGraph& part : d.parts) {
        std::vector<Edge> fi;
        if (!hole_free) {
            fi = uncrossed_edges(part);
        }
        const OrderedGraph rest = OrderedGraph::build(n, edge_difference(part.edges(), fi));
        std::vector<std::vector<Vertex>> levels;
        ColouringResult phi = four_colour_tf_capped_holefree(rest, inner, &levels);
        for (Vertex v = 0; v < n; ++v) {
            tuple[v].push_back(phi.colours[v]);
        }
        if (options.trace != nullptr) {
            options.trace->uncrossed.push_back(fi);
            options.trace->bfs_levels.push_back(std::move(levels));
        }
        residue.insert(residue.end(), fi.begin(), fi.end());
    }
    if (!hole_free) {
        const OrderedGraph residue_graph = OrderedGraph::build(n, residue);
        ColouringResult psi = degeneracy_colour(residue_graph, 4 * (d.omega - 1));
        for (Vertex v = 0; v < n; ++v) {
            tuple[v].push_back(psi.colours[v]);
        }
        if (options.trace != nullptr) {
            options.trace->residue_colours.push_back(psi.num_colours);
        }
    } else if (options.trace != nullptr) {
        options.trace->residue_colours.push_back(0);
    }

    r.num_colours = densify(tuple, r.colours);
    if (!is_proper(g, r.colours)) {
        throw InternalContradiction("capped colouring is not proper");
    }
    if (static_cast<std::uint64_t>(r.num_colours) > r.bound) {
        throw InternalContradiction("capped colouring exceeds its bound");
    }
    return r;
}

ColouringResult colour_hfree(const OrderedGraph& g, const ChromaOptions& options) {
    require_h_free(g);
    const int n = g.num_vertices();
    PartitionOptions popts;
    popts.defensive_checks = options.defensive_checks;
    const CappedPartition partition = partition_three_capped(g, popts);

    ChromaOptions no_recheck;
    no_recheck.defensive_checks = false;
    const int omega = clique_number_hfree(g, no_recheck);
    const bool hole_free = is_ordered_hole_free(g);

    ColouringResult r;
    r.omega = omega;
    r.class_tag = hole_free ? ColouringClass::kHFreeHoleFree : ColouringClass::kHFree;
    r.bound = colour_bound(r.class_tag, omega);
    r.colours.assign(n, 0);
    if (omega < 2) {
        r.num_colours = n > 0 ? 1 : 0;
        return r;
    }

    int offset = 0;
    for (const auto& part : partition.parts) {
        if (part.empty()) {
            continue;
        }
        const OrderedGraph sub = induced(g, part).graph;
        const ColouringResult pc = colour_capped(sub, options);
        for (std::size_t i = 0; i < part.size(); ++i) {
            r.colours[part[i]] = offset + pc.colours[i];
        }
        offset += pc.num_colours;
    }
    r.num_colours = offset;
    if (!is_proper(g, r.colours)) {
        throw InternalContradiction("H-free colouring is not proper");
    }
    if (static_cast<std::uint64_t>(r.num_colours) > r.bound) {
        throw InternalContradiction("H-free colouring exceeds its bound");
    }
    return r;
}

}  // namespace ordvis
