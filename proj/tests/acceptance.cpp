// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every instance is seeded, so reruns are identical.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordvis/capped_chroma.hpp"
#include "ordvis/capped_partition.hpp"
#include "ordvis/crossing_reach.hpp"
#include "ordvis/geometry.hpp"
#include "ordvis/obstructions.hpp"
#include "ordvis/oracles.hpp"
#include "support.hpp"

using namespace ordvis;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
    int failures = 0;

    void fail(const std::string& what) {
        pass = false;
        if (failures++ < 5) {
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Instance {
    std::string name;
    OrderedGraph graph;
};

std::vector<Instance> polygon_instances() {
    std::vector<Instance> out;
    for (int i = 0; i < 500; ++i) {
        const int n = 4 + (i * 37) % 57;
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        auto poly = geom::random_simple_polygon(n, seed, 4 * n + 40);
        out.push_back({"polygon n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                       geom::visibility_graph(poly)});
    }
    return out;
}

std::vector<Instance> curve_instances(const std::vector<Instance>& polygons, std::mt19937_64& rng) {
    std::vector<Instance> out;
    for (int i = 0; i < 200; ++i) {
        const Instance& base = polygons[(i * 7) % polygons.size()];
        auto subset = testing::random_subset(rng, base.graph.num_vertices());
        out.push_back({"curve subgraph of " + base.name, induced(base.graph, subset).graph});
    }
    return out;
}

bool is_bipartite(const OrderedGraph& g) {
    std::vector<int> side(g.num_vertices(), -1);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_triangle(const OrderedGraph& g) {
    for (const Edge& e : g.edges()) {
        for (Vertex w = e.hi + 1; w < g.num_vertices(); ++w) {
            if (g.has_edge(e.lo, w) && g.has_edge(e.hi, w)) {
                return true;
            }
        }
    }
    return false;
}

bool capped_certified(const OrderedGraph& g) {
    if (g.num_vertices() <= 12) {
        return !oracle::bf_capped(g);
    }
    return !find_capped_violation(g);
}

std::vector<Edge> minus(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Criteria 5 to 7 on one capped graph.
void audit_capped(const std::string& name, const OrderedGraph& g, Verdict& decomposition,
                  Verdict& levels, Verdict& residue) {
    const int n = g.num_vertices();
    const Decomposition d = decompose_capped(g);
    std::multiset<Edge> seen;
    const bool hole_free = is_ordered_hole_free(g);
    for (const auto& part : d.parts) {
        seen.insert(part.edges().begin(), part.edges().end());
        if (has_triangle(part)) {
            decomposition.fail(name + ": part with a triangle");
        }
        if (!capped_certified(part)) {
            decomposition.fail(name + ": part not capped");
        }
        if (hole_free && !is_ordered_hole_free(part)) {
            decomposition.fail(name + ": part of a hole-free graph has a hole");
        }
    }
    if (std::vector<Edge>(seen.begin(), seen.end()) != g.edges() || seen.size() != g.edges().size()) {
        decomposition.fail(name + ": parts do not partition the edges");
    }

    std::vector<Edge> residue_edges;
    for (const auto& part : d.parts) {
        const std::vector<Edge> fi = hole_free ? std::vector<Edge>{} : uncrossed_edges(part);
        if (find_crossing_pair(OrderedGraph::build(n, fi))) {
            residue.fail(name + ": uncrossed set has a crossing pair");
        }
        residue_edges.insert(residue_edges.end(), fi.begin(), fi.end());
        const OrderedGraph rest = OrderedGraph::build(n, minus(part.edges(), fi));
        std::vector<std::vector<Vertex>> lv;
        const ColouringResult c = four_colour_tf_capped_holefree(rest, {}, &lv);
        const auto check = oracle::verify_colouring(rest, c.colours);
        if (!check.proper || check.num_colours > 4) {
            levels.fail(name + ": level colouring improper or above 4 colours");
        }
        for (const auto& level : lv) {
            if (!is_bipartite(induced(rest, level).graph)) {
                levels.fail(name + ": BFS level not bipartite");
            }
        }
    }
    if (d.omega >= 2) {
        const OrderedGraph union_graph = OrderedGraph::build(n, residue_edges);
        const ColouringResult psi = degeneracy_colour(union_graph, 4 * (d.omega - 1));
        if (!oracle::verify_colouring(union_graph, psi.colours).proper ||
            psi.num_colours > 4 * (d.omega - 1)) {
            residue.fail(name + ": residue colouring over budget");
        }
    }
}

void report(int id, const char* title, const Verdict& v, double seconds) {
    std::printf("criterion %2d %s  %s (%.1fs)%s%s\n", id, v.pass ? "PASS" : "FAIL", title, seconds,
                v.detail.empty() ? "" : ": ", v.detail.c_str());
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(20240601);
    bool all = true;
    auto done = [&](int id, const char* title, const Verdict& v, clock::time_point t0) {
        report(id, title, v, since(t0));
        all = all && v.pass;
    };

    auto t0 = clock::now();
    const auto polygons = polygon_instances();
    Verdict c1;
    for (const auto& inst : polygons) {
        if (auto w = find_h_obstruction(inst.graph)) {
            c1.fail(inst.name + ": H witness");
        }
        if (auto w = find_ordered_hole(inst.graph)) {
            c1.fail(inst.name + ": hole witness");
        }
    }
    c1.detail = c1.pass ? "500 polygon visibility graphs, no witness" : c1.detail;
    done(1, "obstruction soundness", c1, t0);

    t0 = clock::now();
    const auto curves = curve_instances(polygons, rng);
    Verdict c2;
    std::uint64_t worst_ratio_num = 0;
    std::uint64_t worst_ratio_den = 1;
    for (const auto* set : {&polygons, &curves}) {
        for (const auto& inst : *set) {
            const ColouringResult r = colour_hfree(inst.graph);
            const int omega = clique_number_hfree(inst.graph);
            const auto check = oracle::verify_colouring(inst.graph, r.colours);
            const std::uint64_t bound = omega < 2 ? 1 : 3 * pow4(omega - 1);
            if (!check.proper) {
                c2.fail(inst.name + ": improper colouring");
            }
            if (static_cast<std::uint64_t>(r.num_colours) > bound) {
                c2.fail(inst.name + ": " + std::to_string(r.num_colours) + " colours above bound");
            }
            if (omega >= 2 &&
                static_cast<std::uint64_t>(r.num_colours) * worst_ratio_den > worst_ratio_num * bound) {
                worst_ratio_num = r.num_colours;
                worst_ratio_den = bound;
            }
        }
    }
    if (c2.pass) {
        c2.detail = "700 instances proper; tightest colours/bound with omega >= 2 is " + std::to_string(worst_ratio_num) +
                    "/" + std::to_string(worst_ratio_den);
    }
    done(2, "main colouring bound", c2, t0);

    t0 = clock::now();
    Verdict c3;
    int compared = 0;
    std::vector<Instance> small;
    for (const auto* set : {&polygons, &curves}) {
        for (const auto& inst : *set) {
            if (inst.graph.num_vertices() <= 25) {
                small.push_back(inst);
            }
        }
    }
    for (int k = 3; k <= 5; ++k) {
        small.push_back({"K" + std::to_string(k), testing::complete(k)});
    }
    small.push_back({"reference polygon", geom::visibility_graph(testing::twelve_gon())});
    for (const auto& inst : small) {
        const int truth = oracle::bf_clique(inst.graph);
        if (clique_number_hfree(inst.graph) != truth) {
            c3.fail(inst.name + ": clique_number_hfree differs");
        }
        const CappedPartition p = partition_three_capped(inst.graph);
        for (const auto& part : p.parts) {
            const OrderedGraph sub = induced(inst.graph, part).graph;
            if (decompose_capped(sub).omega != oracle::bf_clique(sub)) {
                c3.fail(inst.name + ": decomposition omega differs on a capped part");
            }
        }
        if (is_capped(inst.graph) && decompose_capped(inst.graph).omega != truth) {
            c3.fail(inst.name + ": decomposition omega differs");
        }
        ++compared;
    }
    if (c3.pass) {
        c3.detail = std::to_string(compared) + " instances with n <= 25 match the clique oracle";
    }
    done(3, "clique exactness", c3, t0);

    t0 = clock::now();
    std::vector<Instance> hfree;
    for (int i = 0; i < 150; ++i) {
        const int n = 6 + i % 40;
        auto poly = geom::random_simple_polygon(n, 50000 + static_cast<std::uint64_t>(i), 4 * n + 40);
        auto subset = testing::random_subset(rng, n);
        hfree.push_back({"curve instance " + std::to_string(i),
                         curve_visibility_graph(poly, subset)});
    }
    int drawn = 0;
    while (hfree.size() < 300) {
        const int n = 5 + static_cast<int>(rng() % 20);
        auto g = testing::random_graph(rng, n, n + static_cast<int>(rng() % (n + 1)));
        ++drawn;
        if (!find_h_obstruction(g)) {
            hfree.push_back({"random H-free graph " + std::to_string(drawn), g});
        }
    }
    Verdict c4;
    for (const auto& inst : hfree) {
        const CappedPartition p = partition_three_capped(inst.graph);
        std::size_t covered = 0;
        for (const auto& part : p.parts) {
            covered += part.size();
            if (!capped_certified(induced(inst.graph, part).graph)) {
                c4.fail(inst.name + ": part not capped");
            }
        }
        if (covered != static_cast<std::size_t>(inst.graph.num_vertices())) {
            c4.fail(inst.name + ": parts do not cover the vertices");
        }
    }
    if (c4.pass) {
        c4.detail = "300 H-free instances (150 geometric, 150 random of " + std::to_string(drawn) +
                    " drawn), every part capped";
    }
    done(4, "three-way capped partition", c4, t0);

    // Criteria 5 to 7 audit every capped part produced above, plus the
    // capped fixtures, in one pass.
    t0 = clock::now();
    Verdict c5;
    Verdict c6;
    Verdict c7;
    int audited = 0;
    std::vector<const Instance*> sources;
    for (const std::vector<Instance>* set : {&polygons, &curves, static_cast<const std::vector<Instance>*>(&hfree)}) {
        for (const auto& inst : *set) {
            sources.push_back(&inst);
        }
    }
    for (const Instance* inst : sources) {
        const CappedPartition p = partition_three_capped(inst->graph);
        for (std::size_t k = 0; k < p.parts.size(); ++k) {
            if (p.parts[k].empty()) {
                continue;
            }
            const OrderedGraph sub = induced(inst->graph, p.parts[k]).graph;
            audit_capped(inst->name + " part " + std::to_string(k), sub, c5, c6, c7);
            ++audited;
        }
    }
    for (int k = 2; k <= 6; ++k) {
        audit_capped("K" + std::to_string(k), testing::complete(k), c5, c6, c7);
        ++audited;
    }
    audit_capped("5-hole", testing::hole5(), c5, c6, c7);
    ++audited;
    const double shared = since(t0);
    if (c5.pass) {
        c5.detail = std::to_string(audited) + " capped graphs decomposed and checked";
    }
    if (c6.pass) {
        c6.detail = "every BFS level bipartite, at most 4 colours";
    }
    if (c7.pass) {
        c7.detail = "uncrossed sets outerplanar, union within 4(omega-1)";
    }
    report(5, "decomposition structure", c5, shared);
    report(6, "BFS-level bipartiteness", c6, shared);
    report(7, "outerplanar residue", c7, shared);
    all = all && c5.pass && c6.pass && c7.pass;

    t0 = clock::now();
    Verdict c8;
    int graphs = 0;
    long pairs = 0;
    while (graphs < 1000) {
        const int n = 2 + static_cast<int>(rng() % 11);
        auto g = testing::random_graph(rng, n, static_cast<int>(rng() % 15));
        if (g.num_edges() > 14) {
            continue;
        }
        ++graphs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) {
                    continue;
                }
                ++pairs;
                if (has_crossing_sequence(g, u, v) != oracle::bf_crossing_sequence(g, u, v)) {
                    c8.fail("graph " + std::to_string(graphs) + " pair " + std::to_string(u) + "->" +
                            std::to_string(v));
                }
            }
        }
    }
    if (c8.pass) {
        c8.detail = "1000 graphs, " + std::to_string(pairs) + " ordered pairs agree";
    }
    done(8, "crossing-sequence oracle equivalence", c8, t0);

    t0 = clock::now();
    Verdict c9;
    const auto fig = testing::twelve_gon();
    if (!geom::is_simple_ccw(fig)) {
        c9.fail("polygon not simple and counterclockwise");
    } else {
        const OrderedGraph g = geom::visibility_graph(fig);
        for (int i = 0; i < 12; ++i) {
            if (!g.has_edge(i, (i + 1) % 12)) {
                c9.fail("missing boundary edge");
            }
        }
        if (!g.has_edge(0, 3)) {
            c9.fail("chord {1,4} missing");
        }
        if (g.has_edge(1, 11)) {
            c9.fail("non-edge {2,12} present");
        }
        std::vector<Edge> frozen;
        for (auto [a, b] : testing::twelve_gon_edges_1based()) {
            frozen.push_back({a - 1, b - 1});
        }
        if (g.edges() != frozen) {
            c9.fail("edge set differs from the frozen constant");
        }
        if (oracle::bf_clique(g) != testing::kTwelveGonOmega ||
            clique_number_hfree(g) != testing::kTwelveGonOmega) {
            c9.fail("omega differs from the frozen constant");
        }
        if (c9.pass) {
            c9.detail = std::to_string(g.num_edges()) + " edges, omega " +
                        std::to_string(testing::kTwelveGonOmega) + ", chord {1,4} present, {2,12} absent";
        }
    }
    done(9, "reference polygon fixture", c9, t0);

    t0 = clock::now();
    Verdict c10;
    std::vector<Instance> rot;
    for (int i = 0; i < 60; ++i) {
        rot.push_back(polygons[(i * 11) % polygons.size()]);
    }
    for (int i = 0; i < 60; ++i) {
        const int n = 4 + i % 12;
        rot.push_back({"random graph " + std::to_string(i), testing::random_graph(rng, n, n + i % 6)});
    }
    for (const auto& inst : rot) {
        const OrderedGraph& g = inst.graph;
        const int n = g.num_vertices();
        const bool hf = is_h_free(g);
        const bool holefree = is_ordered_hole_free(g);
        for (Vertex r = 0; r < n; ++r) {
            const OrderedGraph rg = rotate(g, r).graph;
            if (is_h_free(rg) != hf || is_ordered_hole_free(rg) != holefree) {
                c10.fail(inst.name + ": rotation by " + std::to_string(r) + " changes the answer");
            }
        }
        for (int k = 0; k < 100; ++k) {
            const OrderedGraph sub = induced(g, testing::random_subset(rng, n)).graph;
            if ((hf && !is_h_free(sub)) || (holefree && !is_ordered_hole_free(sub))) {
                c10.fail(inst.name + ": induced subgraph loses a property");
            }
        }
    }
    if (c10.pass) {
        c10.detail = "120 instances, all rotations and 100 induced subgraphs each";
    }
    done(10, "hereditary and rotation invariance", c10, t0);

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
