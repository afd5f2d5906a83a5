#include "ordvis/ordered_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ordvis/error.hpp"

namespace ordvis {

namespace {

// Above this size has_edge falls back to binary search.
constexpr int kMatrixLimit = 8192;

std::string pair_text(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw InputError("self-loop " + pair_text(a, b));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

OrderedGraph OrderedGraph::build(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                                 std::vector<Edge>* duplicates) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw InputError("edge " + pair_text(a, b) + " has an endpoint outside [0," +
                             std::to_string(n) + ")");
        }
        edges.push_back(make_edge(a, b));
    }
    return build(n, edges, duplicates);
}

OrderedGraph OrderedGraph::build(int n, std::span<const Edge> input,
                                 std::vector<Edge>* duplicates) {
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    OrderedGraph g;
    g.n_ = n;
    g.edges_.reserve(input.size());
    for (Edge e : input) {
        if (e.lo < 0 || e.hi < 0 || e.lo >= n || e.hi >= n) {
            throw InputError("edge " + pair_text(e.lo, e.hi) + " has an endpoint outside [0," +
                             std::to_string(n) + ")");
        }
        g.edges_.push_back(make_edge(e.lo, e.hi));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (duplicates != nullptr) {
        for (std::size_t i = 1; i < g.edges_.size(); ++i) {
            if (g.edges_[i] == g.edges_[i - 1]) {
                duplicates->push_back(g.edges_[i]);
            }
        }
    }
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.first_edge_.assign(n + 1, 0);
    std::vector<int> deg(n, 0);
    for (Edge e : g.edges_) {
        ++g.first_edge_[e.lo + 1];
        ++deg[e.lo];
        ++deg[e.hi];
    }
    for (int v = 0; v < n; ++v) {
        g.first_edge_[v + 1] += g.first_edge_[v];
    }

    g.adj_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        g.adj_offset_[v + 1] = g.adj_offset_[v] + deg[v];
    }
    g.adj_.assign(g.adj_offset_[n], 0);
    std::vector<int> fill(g.adj_offset_.begin(), g.adj_offset_.begin() + n);
    // Edges are sorted by (lo, hi): appending in this order keeps every
    // list sorted because lower neighbours arrive before upper ones.
    for (Edge e : g.edges_) {
        g.adj_[fill[e.hi]++] = e.lo;
    }
    for (Edge e : g.edges_) {
        g.adj_[fill[e.lo]++] = e.hi;
    }

    if (n <= kMatrixLimit) {
        g.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
        for (Edge e : g.edges_) {
            g.matrix_[static_cast<std::size_t>(e.lo) * n + e.hi] = true;
            g.matrix_[static_cast<std::size_t>(e.hi) * n + e.lo] = true;
        }
    }
    return g;
}

std::span<const Vertex> OrderedGraph::neighbours(Vertex v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
}

bool OrderedGraph::has_edge(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v) || u == v) {
        return false;
    }
    if (!matrix_.empty()) {
        return matrix_[static_cast<std::size_t>(u) * n_ + v];
    }
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const Edge> OrderedGraph::edges_from(Vertex v) const {
    return {edges_.data() + first_edge_[v], edges_.data() + first_edge_[v + 1]};
}

int OrderedGraph::edge_index(const Edge& e) const {
    if (!valid_vertex(e.lo) || !valid_vertex(e.hi) || e.lo >= e.hi) {
        return -1;
    }
    auto block = edges_from(e.lo);
    auto it = std::lower_bound(block.begin(), block.end(), e);
    if (it == block.end() || *it != e) {
        return -1;
    }
    return first_edge_[e.lo] + static_cast<int>(it - block.begin());
}

bool crosses(const OrderedGraph& g, const Edge& e, const Edge& f) {
    if (!g.has_edge(e) || !g.has_edge(f)) {
        throw InputError("crosses: edge not in graph");
    }
    return edges_cross(e, f);
}

Relabelled rotate(const OrderedGraph& g, Vertex r) {
    const int n = g.num_vertices();
    if (n < 1 || r < 0 || r >= n) {
        throw InputError("rotate: vertex " + std::to_string(r) + " out of range");
    }
    Relabelled out;
    out.to_new.resize(n);
    out.to_old.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex nv = (v - r + n) % n;
        out.to_new[v] = nv;
        out.to_old[nv] = v;
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (Edge e : g.edges()) {
        edges.push_back(make_edge(out.to_new[e.lo], out.to_new[e.hi]));
    }
    out.graph = OrderedGraph::build(n, edges);
    return out;
}

Relabelled induced(const OrderedGraph& g, std::span<const Vertex> subset) {
    const int n = g.num_vertices();
    Relabelled out;
    out.to_new.assign(n, -1);
    out.to_old.assign(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        Vertex v = subset[i];
        if (!g.valid_vertex(v)) {
            throw InputError("induced: vertex " + std::to_string(v) + " out of range");
        }
        if (i > 0 && subset[i - 1] >= v) {
            throw InputError("induced: subset is not strictly increasing");
        }
        out.to_new[v] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        if (out.to_new[e.lo] >= 0 && out.to_new[e.hi] >= 0) {
            edges.push_back({out.to_new[e.lo], out.to_new[e.hi]});
        }
    }
    out.graph = OrderedGraph::build(static_cast<int>(subset.size()), edges);
    return out;
}

OrderedGraph with_edges(const OrderedGraph& g, std::span<const Edge> keep) {
    for (Edge e : keep) {
        if (!g.has_edge(e)) {
            throw InputError("with_edges: edge " + pair_text(e.lo, e.hi) + " not in graph");
        }
    }
    return OrderedGraph::build(g.num_vertices(), keep);
}

ParseResult parse_graph(std::istream& in) {
    ParseResult result;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;

    auto fail = [&](const std::string& what) {
        throw InputError("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        long long a = 0;
        long long b = 0;
        if (!(ls >> a >> b)) {
            fail("expected two integers");
        }
        std::string rest;
        if (ls >> rest) {
            fail("trailing data '" + rest + "'");
        }
        if (!have_header) {
            if (a < 0 || b < 0 || a > 1'000'000'000) {
                fail("bad header");
            }
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            fail("endpoint out of range");
        }
        if (a == b) {
            fail("self-loop");
        }
        edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    }
    if (!have_header) {
        throw InputError("missing header line 'n m'");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw InputError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    }
    std::vector<Edge> dups;
    result.graph = OrderedGraph::build(static_cast<int>(n), edges, &dups);
    for (Edge e : dups) {
        result.warnings.push_back("duplicate edge " + pair_text(e.lo, e.hi) + " collapsed");
    }
    return result;
}

ParseResult parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const OrderedGraph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (Edge e : g.edges()) {
        out << e.lo << ' ' << e.hi << '\n';
    }
}

std::string serialize_graph(const OrderedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace ordvis
