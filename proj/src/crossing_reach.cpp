#include "ordvis/crossing_reach.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ordvis/error.hpp"

namespace ordvis {

namespace {

// Traversals run in a rotated frame without materializing the rotated graph:
// a vertex w sits at position (w - start) mod n.
class Frame {
public:
    Frame(const OrderedGraph& g, Vertex start) : g_(g), n_(g.num_vertices()), start_(start) {}

    int pos(Vertex w) const { return (w - start_ + n_) % n_; }
    Vertex at(int p) const { return (p + start_) % n_; }
    Edge to_frame(const Edge& e) const { return make_edge(pos(e.lo), pos(e.hi)); }
    Edge to_original(const Edge& fe) const { return make_edge(at(fe.lo), at(fe.hi)); }
    int id(const Edge& fe) const { return g_.edge_index(to_original(fe)); }

    // Frame edges f with e crosses f.
    template <class Fn>
    void for_each_successor(const Edge& fe, Fn&& fn) const {
        for (int b = fe.lo + 1; b < fe.hi; ++b) {
            for (Vertex w : g_.neighbours(at(b))) {
                int d = pos(w);
                if (d > fe.hi) {
                    fn(Edge{b, d});
                }
            }
        }
    }

    // Frame edges e with e crosses f.
    template <class Fn>
    void for_each_predecessor(const Edge& ff, Fn&& fn) const {
        for (int c = ff.lo + 1; c < ff.hi; ++c) {
            for (Vertex w : g_.neighbours(at(c))) {
                int a = pos(w);
                if (a < ff.lo) {
                    fn(Edge{a, c});
                }
            }
        }
    }

    // Edges at the frame origin, as frame edges sorted by larger end.
    std::vector<Edge> edges_at_origin() const {
        std::vector<Edge> out;
        for (Vertex w : g_.neighbours(start_)) {
            out.push_back({0, pos(w)});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const OrderedGraph& graph() const { return g_; }

private:
    const OrderedGraph& g_;
    int n_;
    Vertex start_;
};

void check_pair(const OrderedGraph& g, Vertex u, Vertex v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) {
        throw InputError("crossing sequence endpoint out of range");
    }
    if (u == v) {
        throw InputError("crossing sequence needs distinct endpoints, got " + std::to_string(u) +
                         " twice");
    }
}

}  // namespace

std::size_t CrossingDigraph::num_arcs() const {
    std::size_t total = 0;
    for (const auto& a : arcs) {
        total += a.size();
    }
    return total;
}

CrossingDigraph crossing_digraph(const OrderedGraph& g) {
    CrossingDigraph d;
    d.nodes = g.edges();
    d.arcs.resize(d.nodes.size());
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Edge e = d.nodes[i];
        for (Vertex b = e.lo + 1; b < e.hi; ++b) {
            for (const Edge& f : g.edges_from(b)) {
                if (f.hi > e.hi) {
                    d.arcs[i].push_back(g.edge_index(f));
                }
            }
        }
        std::sort(d.arcs[i].begin(), d.arcs[i].end());
    }
    return d;
}

std::optional<std::vector<Edge>> crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v) {
    check_pair(g, u, v);
    const Frame frame(g, u);
    const int target = frame.pos(v);

    std::vector<int> parent(g.num_edges(), -2);  // -2 unseen, -1 root
    std::vector<Edge> level = frame.edges_at_origin();
    for (const Edge& fe : level) {
        parent[frame.id(fe)] = -1;
    }

    while (!level.empty()) {
        // Levels are kept sorted, so the first hit is the smallest end edge.
        for (const Edge& fe : level) {
            if (fe.hi != target) {
                continue;
            }
            std::vector<Edge> witness;
            for (int id = frame.id(fe); id >= 0; id = parent[id]) {
                witness.push_back(g.edges()[id]);
            }
            std::reverse(witness.begin(), witness.end());
            return witness;
        }
        std::vector<Edge> next;
        for (const Edge& fe : level) {
            const int pid = frame.id(fe);
            frame.for_each_successor(fe, [&](const Edge& succ) {
                // Successors must end beyond fe.hi; anything ending past the
                // target can never come back to it.
                if (succ.hi > target) {
                    return;
                }
                int sid = frame.id(succ);
                if (parent[sid] == -2) {
                    parent[sid] = pid;
                    next.push_back(succ);
                }
            });
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return std::nullopt;
}

bool has_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v) {
    return crossing_sequence(g, u, v).has_value();
}

std::vector<bool> crossing_targets(const OrderedGraph& g, Vertex u) {
    if (!g.valid_vertex(u)) {
        throw InputError("crossing_targets: vertex out of range");
    }
    const Frame frame(g, u);
    std::vector<bool> seen(g.num_edges(), false);
    std::vector<bool> out(g.num_vertices(), false);
    std::deque<Edge> queue;
    for (const Edge& fe : frame.edges_at_origin()) {
        seen[frame.id(fe)] = true;
        queue.push_back(fe);
    }
    while (!queue.empty()) {
        Edge fe = queue.front();
        queue.pop_front();
        out[frame.at(fe.hi)] = true;
        frame.for_each_successor(fe, [&](const Edge& succ) {
            int sid = frame.id(succ);
            if (!seen[sid]) {
                seen[sid] = true;
                queue.push_back(succ);
            }
        });
    }
    return out;
}

std::vector<bool> crossing_sources(const OrderedGraph& g, Vertex v) {
    if (!g.valid_vertex(v)) {
        throw InputError("crossing_sources: vertex out of range");
    }
    const int n = g.num_vertices();
    // Start just after v so that v is the last vertex of the frame and every
    // other vertex precedes it.
    const Frame frame(g, (v + 1) % n);
    std::vector<bool> seen(g.num_edges(), false);
    std::vector<bool> out(n, false);
    std::deque<Edge> queue;
    for (Vertex w : g.neighbours(v)) {
        Edge fe{frame.pos(w), n - 1};
        seen[frame.id(fe)] = true;
        queue.push_back(fe);
    }
    while (!queue.empty()) {
        Edge fe = queue.front();
        queue.pop_front();
        out[frame.at(fe.lo)] = true;
        frame.for_each_predecessor(fe, [&](const Edge& pred) {
            int pid = frame.id(pred);
            if (!seen[pid]) {
                seen[pid] = true;
                queue.push_back(pred);
            }
        });
    }
    return out;
}

bool is_valid_segment(const OrderedGraph& g, const Segment& s) {
    if (!g.valid_vertex(s.x) || !g.valid_vertex(s.y) || s.x >= s.y) {
        throw InputError("segment (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                         ") is not a pair x < y inside the graph");
    }
    return has_crossing_sequence(g, s.y, s.x);
}

bool ReachSets::is_left(Vertex v) const {
    return std::binary_search(left.begin(), left.end(), v);
}

bool ReachSets::is_right(Vertex v) const {
    return std::binary_search(right.begin(), right.end(), v);
}

bool ReachSets::is_strong(Vertex v) const {
    return std::binary_search(strong.begin(), strong.end(), v);
}

ReachSets reach_sets(const OrderedGraph& g, const Segment& s) {
    if (!is_valid_segment(g, s)) {
        throw PreconditionError("segment (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                                ") is not valid");
    }
    ReachSets r;
    r.segment = s;
    const auto from_y = crossing_targets(g, s.y);
    const auto to_x = crossing_sources(g, s.x);
    for (Vertex v = s.x; v < s.y; ++v) {
        if (from_y[v]) {
            r.left.push_back(v);
        }
    }
    for (Vertex v = s.x + 1; v <= s.y; ++v) {
        if (to_x[v]) {
            r.right.push_back(v);
        }
    }
    std::set_intersection(r.left.begin(), r.left.end(), r.right.begin(), r.right.end(),
                          std::back_inserter(r.strong));
    return r;
}

}  // namespace ordvis
