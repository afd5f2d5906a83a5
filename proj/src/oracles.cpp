#include "ordvis/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "ordvis/error.hpp"

namespace ordvis::oracle {

namespace {

void guard(bool ok, const std::string& what) {
    if (!ok) {
        throw GuardExceeded(what);
    }
}

std::vector<std::vector<bool>> adjacency(const OrderedGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) {
        adj[e.lo][e.hi] = true;
        adj[e.hi][e.lo] = true;
    }
    return adj;
}

using Mask = std::uint64_t;

void bron_kerbosch(const std::vector<Mask>& nbr, int r_size, Mask p, Mask x, int& best) {
    if (p == 0 && x == 0) {
        best = std::max(best, r_size);
        return;
    }
    if (r_size + std::popcount(p) <= best) {
        return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    const Mask px = p | x;
    int pivot = std::countr_zero(px);
    int most = -1;
    for (Mask s = px; s != 0; s &= s - 1) {
        int u = std::countr_zero(s);
        int c = std::popcount(p & nbr[u]);
        if (c > most) {
            most = c;
            pivot = u;
        }
    }
    for (Mask s = p & ~nbr[pivot]; s != 0; s &= s - 1) {
        const int v = std::countr_zero(s);
        const Mask bit = Mask{1} << v;
        bron_kerbosch(nbr, r_size + 1, p & nbr[v], x & nbr[v], best);
        p &= ~bit;
        x |= bit;
    }
}

bool colour_with(const std::vector<std::vector<bool>>& adj, std::vector<int>& colour, int v,
                 int k, int used) {
    const int n = static_cast<int>(adj.size());
    if (v == n) {
        return true;
    }
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int w = 0; w < v && ok; ++w) {
            ok = !(adj[v][w] && colour[w] == c);
        }
        if (ok) {
            colour[v] = c;
            if (colour_with(adj, colour, v + 1, k, std::max(used, c + 1))) {
                return true;
            }
        }
    }
    colour[v] = -1;
    return false;
}

}  // namespace

int bf_clique(const OrderedGraph& g, const Guards& guards) {
    const int n = g.num_vertices();
    guard(n <= guards.clique_max_vertices && n <= 64, "bf_clique: too many vertices");
    if (n == 0) {
        return 0;
    }
    std::vector<Mask> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.lo] |= Mask{1} << e.hi;
        nbr[e.hi] |= Mask{1} << e.lo;
    }
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    int best = 0;
    bron_kerbosch(nbr, 0, all, 0, best);
    return best;
}

int bf_chromatic(const OrderedGraph& g, const Guards& guards) {
    const int n = g.num_vertices();
    guard(n <= guards.chromatic_max_vertices, "bf_chromatic: too many vertices");
    if (n == 0) {
        return 0;
    }
    const auto adj = adjacency(g);
    for (int k = std::max(1, bf_clique(g, guards));; ++k) {
        std::vector<int> colour(n, -1);
        if (colour_with(adj, colour, 0, k, 0)) {
            return k;
        }
    }
}

bool bf_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v, const Guards& guards) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    guard(m <= guards.xseq_max_edges, "bf_crossing_sequence: too many edges");
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("bf_crossing_sequence: bad endpoints");
    }
    // Position of each vertex in the order used: the given one when u < v,
    // otherwise the rotation that starts at u.
    auto pos = [&](Vertex w) { return u < v ? w : (w - u + n) % n; };
    struct Ends {
        int small;
        int large;
    };
    std::vector<Ends> ends;
    for (const Edge& e : g.edges()) {
        int a = pos(e.lo);
        int b = pos(e.hi);
        ends.push_back({std::min(a, b), std::max(a, b)});
    }
    const int pu = pos(u);
    const int pv = pos(v);
    auto crosses = [&](int i, int j) {
        return ends[i].small < ends[j].small && ends[j].small < ends[i].large &&
               ends[i].large < ends[j].large;
    };
    std::vector<bool> used(m, false);
    auto dfs = [&](auto&& self, int cur) -> bool {
        if (ends[cur].large == pv) {
            return true;
        }
        for (int nxt = 0; nxt < m; ++nxt) {
            if (!used[nxt] && crosses(cur, nxt)) {
                used[nxt] = true;
                if (self(self, nxt)) {
                    return true;
                }
                used[nxt] = false;
            }
        }
        return false;
    };
    for (int first = 0; first < m; ++first) {
        if (ends[first].small != pu) {
            continue;
        }
        std::fill(used.begin(), used.end(), false);
        used[first] = true;
        if (dfs(dfs, first)) {
            return true;
        }
    }
    return false;
}

std::optional<std::vector<Vertex>> bf_capped(const OrderedGraph& g, const Guards& guards) {
    const int n = g.num_vertices();
    guard(n <= guards.capped_max_vertices, "bf_capped: too many vertices");
    const auto adj = adjacency(g);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (!adj[a][c]) {
                    continue;
                }
                for (int d = c + 1; d < n; ++d) {
                    if (adj[b][d] && !adj[a][d]) {
                        return std::vector<Vertex>{a, b, c, d};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> bf_holes(const OrderedGraph& g, const Guards& guards) {
    const int n = g.num_vertices();
    guard(n <= guards.holes_max_vertices && n < 31, "bf_holes: too many vertices");
    const auto adj = adjacency(g);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) < 4) {
            continue;
        }
        std::vector<Vertex> c;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) {
                c.push_back(v);
            }
        }
        const std::size_t k = c.size();
        bool hole = true;
        for (std::size_t i = 0; i < k && hole; ++i) {
            for (std::size_t j = i + 1; j < k && hole; ++j) {
                const bool expected = (j == i + 1) || (i == 0 && j == k - 1);
                hole = adj[c[i]][c[j]] == expected;
            }
        }
        if (hole) {
            return c;
        }
    }
    return std::nullopt;
}

bool bf_h_free(const OrderedGraph& g, const Guards& guards) {
    const int n = g.num_vertices();
    const auto adj = adjacency(g);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!adj[u][v] && bf_crossing_sequence(g, u, v, guards) &&
                bf_crossing_sequence(g, v, u, guards)) {
                return false;
            }
        }
    }
    return true;
}

ColouringCheck verify_colouring(const OrderedGraph& g, const std::vector<int>& colours) {
    ColouringCheck out;
    if (static_cast<int>(colours.size()) != g.num_vertices()) {
        return out;
    }
    std::set<int> distinct;
    for (int c : colours) {
        if (c < 0) {
            return out;
        }
        distinct.insert(c);
    }
    out.num_colours = static_cast<int>(distinct.size());
    out.proper = true;
    for (const Edge& e : g.edges()) {
        if (colours[e.lo] == colours[e.hi]) {
            out.proper = false;
        }
    }
    return out;
}

}  // namespace ordvis::oracle
