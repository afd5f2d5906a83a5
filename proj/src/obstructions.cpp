#include "ordvis/obstructions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ordvis/crossing_reach.hpp"

namespace ordvis {

namespace {

std::string describe(const HWitness& w) {
    std::ostringstream s;
    s << "graph contains an H obstruction at non-adjacent pair (" << w.u << "," << w.v << ")";
    return s.str();
}

std::string describe(const CappedViolation& w) {
    std::ostringstream s;
    s << "graph is not capped: edges " << w.a << "-" << w.c << " and " << w.b << "-" << w.d
      << " cross but " << w.a << "-" << w.d << " is missing";
    return s.str();
}

// Largest neighbour of a strictly between a and d, or -1.
Vertex largest_neighbour_below(const OrderedGraph& g, Vertex a, Vertex d) {
    auto nb = g.neighbours(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), d);
    if (it == nb.begin()) {
        return -1;
    }
    Vertex c = *(it - 1);
    return c > a ? c : -1;
}

// Smallest neighbour of d strictly between a and d, or -1.
Vertex smallest_neighbour_above(const OrderedGraph& g, Vertex d, Vertex a) {
    auto nb = g.neighbours(d);
    auto it = std::upper_bound(nb.begin(), nb.end(), a);
    if (it == nb.end() || *it >= d) {
        return -1;
    }
    return *it;
}

bool has_violation_at(const OrderedGraph& g, Vertex a) {
    for (Vertex d = a + 3; d < g.num_vertices(); ++d) {
        if (g.has_edge(a, d)) {
            continue;
        }
        Vertex c = largest_neighbour_below(g, a, d);
        Vertex b = smallest_neighbour_above(g, d, a);
        if (c >= 0 && b >= 0 && b < c) {
            return true;
        }
    }
    return false;
}

}  // namespace

NotHFreeError::NotHFreeError(HWitness w) : PreconditionError(describe(w)), witness_(std::move(w)) {}

NotCappedError::NotCappedError(CappedViolation w)
    : PreconditionError(describe(w)), witness_(w) {}

std::optional<HWitness> find_h_obstruction(const OrderedGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<bool>> reach(n);
    for (Vertex u = 0; u < n; ++u) {
        reach[u] = crossing_targets(g, u);
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v) || !reach[u][v] || !reach[v][u]) {
                continue;
            }
            HWitness w;
            w.u = u;
            w.v = v;
            w.seq_uv = *crossing_sequence(g, u, v);
            w.seq_vu = *crossing_sequence(g, v, u);
            return w;
        }
    }
    return std::nullopt;
}

bool is_h_free(const OrderedGraph& g) { return !find_h_obstruction(g).has_value(); }

std::optional<HoleWitness> find_ordered_hole(const OrderedGraph& g) {
    constexpr int kInf = std::numeric_limits<int>::max();
    const int n = g.num_vertices();
    std::vector<int> dist(n, kInf);
    std::vector<bool> blocked(n, false);

    for (const Edge& uv : g.edges()) {
        const Vertex u = uv.lo;
        const Vertex v = uv.hi;
        if (v - u < 3) {
            continue;
        }
        for (Vertex w = u + 1; w < v; ++w) {
            blocked[w] = g.has_edge(u, w) && g.has_edge(w, v);
        }
        // Distances to v along increasing paths; vertices are a topological
        // order of the natural digraph, so one backward sweep suffices.
        dist[v] = 0;
        for (Vertex w = v - 1; w >= u; --w) {
            dist[w] = kInf;
            if (w != u && blocked[w]) {
                continue;
            }
            for (Vertex b : g.neighbours(w)) {
                if (b <= w || b > v || (b < v && blocked[b]) || (w == u && b == v)) {
                    continue;
                }
                if (dist[b] != kInf) {
                    dist[w] = std::min(dist[w], dist[b] + 1);
                }
            }
        }
        if (dist[u] == kInf) {
            continue;
        }
        HoleWitness hole;
        Vertex cur = u;
        hole.cycle.push_back(u);
        while (cur != v) {
            for (Vertex b : g.neighbours(cur)) {
                if (b <= cur || b > v || (b < v && blocked[b]) || (cur == u && b == v)) {
                    continue;
                }
                if (dist[b] != kInf && dist[b] + 1 == dist[cur]) {
                    cur = b;
                    break;
                }
            }
            hole.cycle.push_back(cur);
        }
        if (hole.cycle.size() < 4) {
            throw InternalContradiction("hole search produced a path through a common neighbour");
        }
        return hole;
    }
    return std::nullopt;
}

bool is_ordered_hole_free(const OrderedGraph& g) { return !find_ordered_hole(g).has_value(); }

bool is_capped(const OrderedGraph& g) {
    for (Vertex a = 0; a < g.num_vertices(); ++a) {
        if (has_violation_at(g, a)) {
            return false;
        }
    }
    return true;
}

std::optional<CappedViolation> find_capped_violation(const OrderedGraph& g) {
    const int n = g.num_vertices();
    for (Vertex a = 0; a < n; ++a) {
        if (!has_violation_at(g, a)) {
            continue;
        }
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c : g.neighbours(a)) {
                if (c <= b) {
                    continue;
                }
                for (Vertex d : g.neighbours(b)) {
                    if (d > c && !g.has_edge(a, d)) {
                        return CappedViolation{a, b, c, d};
                    }
                }
            }
        }
        throw InternalContradiction("capped scan found a violation it could not locate");
    }
    return std::nullopt;
}

std::optional<std::pair<Edge, Edge>> find_crossing_pair(const OrderedGraph& g) {
    for (const Edge& e : g.edges()) {
        for (Vertex b = e.lo + 1; b < e.hi; ++b) {
            for (const Edge& f : g.edges_from(b)) {
                if (f.hi > e.hi) {
                    return std::make_pair(e, f);
                }
            }
        }
    }
    return std::nullopt;
}

bool is_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v,
                          const std::vector<Edge>& seq) {
    const int n = g.num_vertices();
    if (seq.empty() || u == v || !g.valid_vertex(u) || !g.valid_vertex(v)) {
        return false;
    }
    auto pos = [&](Vertex w) { return (w - u + n) % n; };
    std::vector<Edge> rotated;
    for (const Edge& e : seq) {
        if (!g.has_edge(e)) {
            return false;
        }
        rotated.push_back(make_edge(pos(e.lo), pos(e.hi)));
    }
    std::vector<Edge> sorted = rotated;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    if (rotated.front().lo != 0 || rotated.back().hi != pos(v)) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < rotated.size(); ++i) {
        if (!edges_cross(rotated[i], rotated[i + 1])) {
            return false;
        }
    }
    return true;
}

bool verify_h_witness(const OrderedGraph& g, const HWitness& w) {
    return w.u != w.v && g.valid_vertex(w.u) && g.valid_vertex(w.v) && !g.has_edge(w.u, w.v) &&
           is_crossing_sequence(g, w.u, w.v, w.seq_uv) &&
           is_crossing_sequence(g, w.v, w.u, w.seq_vu);
}

bool verify_hole_witness(const OrderedGraph& g, const HoleWitness& w) {
    const auto& c = w.cycle;
    const std::size_t k = c.size();
    if (k < 4) {
        return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.valid_vertex(c[i]) || (i > 0 && c[i - 1] >= c[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool should = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(c[i], c[j]) != should) {
                return false;
            }
        }
    }
    return true;
}

bool verify_capped_violation(const OrderedGraph& g, const CappedViolation& w) {
    return w.a < w.b && w.b < w.c && w.c < w.d && g.has_edge(w.a, w.c) && g.has_edge(w.b, w.d) &&
           !g.has_edge(w.a, w.d);
}

void require_h_free(const OrderedGraph& g) {
    if (auto w = find_h_obstruction(g)) {
        throw NotHFreeError(std::move(*w));
    }
}

void require_capped(const OrderedGraph& g) {
    if (auto w = find_capped_violation(g)) {
        throw NotCappedError(*w);
    }
}

}  // namespace ordvis
