#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "ordvis/capped_chroma.hpp"
#include "ordvis/capped_partition.hpp"
#include "ordvis/crossing_reach.hpp"
#include "ordvis/error.hpp"
#include "ordvis/geometry.hpp"
#include "ordvis/obstructions.hpp"
#include "ordvis/oracles.hpp"

namespace py = pybind11;
using namespace ordvis;

namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

PairList edge_pairs(const std::vector<Edge>& edges) {
    PairList out;
    for (const Edge& e : edges) {
        out.emplace_back(e.lo, e.hi);
    }
    return out;
}

py::dict h_witness(const HWitness& w) {
    py::dict d;
    d["u"] = w.u;
    d["v"] = w.v;
    d["seq_uv"] = edge_pairs(w.seq_uv);
    d["seq_vu"] = edge_pairs(w.seq_vu);
    return d;
}

py::dict colouring(const ColouringResult& r) {
    py::dict d;
    d["colours"] = r.colours;
    d["num_colours"] = r.num_colours;
    d["omega"] = r.omega;
    d["bound"] = r.bound;
    d["class"] = std::string(class_name(r.class_tag));
    return d;
}

geom::Polygon polygon(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    geom::Polygon p;
    for (auto [x, y] : pts) {
        p.points.push_back({x, y});
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ordered graphs: obstructions, capped partitions, colourings, visibility graphs";

    static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_RuntimeError);
    static py::exception<InternalContradiction> internal(m, "InternalContradiction", PyExc_AssertionError);
    static py::exception<GuardExceeded> guard(m, "GuardExceeded", PyExc_OverflowError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const NotHFreeError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(precondition)(e.what());
            exc.attr("witness") = h_witness(e.witness());
            PyErr_SetObject(precondition.ptr(), exc.ptr());
        } catch (const NotCappedError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(precondition)(e.what());
            const auto& w = e.witness();
            exc.attr("witness") = py::make_tuple(w.a, w.b, w.c, w.d);
            PyErr_SetObject(precondition.ptr(), exc.ptr());
        } catch (const PreconditionError& e) {
            PyErr_SetString(precondition.ptr(), e.what());
        } catch (const GuardExceeded& e) {
            PyErr_SetString(guard.ptr(), e.what());
        } catch (const InternalContradiction& e) {
            PyErr_SetString(internal.ptr(), e.what());
        }
    });

    py::class_<OrderedGraph>(m, "Graph")
        .def(py::init([](int n, const PairList& edges) { return OrderedGraph::build(n, edges); }),
             py::arg("n"), py::arg("edges") = PairList{})
        .def_static("parse", [](const std::string& text) { return parse_graph_string(text).graph; })
        .def("serialize", &serialize_graph)
        .def_property_readonly("n", &OrderedGraph::num_vertices)
        .def_property_readonly("edges", [](const OrderedGraph& g) { return edge_pairs(g.edges()); })
        .def("has_edge", py::overload_cast<Vertex, Vertex>(&OrderedGraph::has_edge, py::const_))
        .def("neighbours", [](const OrderedGraph& g, Vertex v) {
            if (!g.valid_vertex(v)) {
                throw InputError("vertex out of range");
            }
            auto nb = g.neighbours(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("rotate", [](const OrderedGraph& g, Vertex r) { return rotate(g, r).graph; })
        .def("induced", [](const OrderedGraph& g, const std::vector<Vertex>& subset) {
            return induced(g, subset).graph;
        })
        .def(py::self == py::self)
        .def("__repr__", [](const OrderedGraph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" +
                   std::to_string(g.num_edges()) + ")";
        });

    m.def("crossing_sequence", [](const OrderedGraph& g, Vertex u, Vertex v) -> std::optional<PairList> {
        auto w = crossing_sequence(g, u, v);
        if (!w) {
            return std::nullopt;
        }
        return edge_pairs(*w);
    });
    m.def("has_crossing_sequence", &has_crossing_sequence);
    m.def("is_valid_segment", [](const OrderedGraph& g, Vertex x, Vertex y) {
        return is_valid_segment(g, {x, y});
    });
    m.def("reach_sets", [](const OrderedGraph& g, Vertex x, Vertex y) {
        ReachSets r = reach_sets(g, {x, y});
        py::dict d;
        d["left"] = r.left;
        d["right"] = r.right;
        d["strong"] = r.strong;
        return d;
    });

    m.def("find_h_obstruction", [](const OrderedGraph& g) -> py::object {
        auto w = find_h_obstruction(g);
        return w ? py::object(h_witness(*w)) : py::object(py::none());
    });
    m.def("find_ordered_hole", [](const OrderedGraph& g) -> std::optional<std::vector<Vertex>> {
        auto w = find_ordered_hole(g);
        if (!w) {
            return std::nullopt;
        }
        return w->cycle;
    });
    m.def("find_capped_violation", [](const OrderedGraph& g) -> py::object {
        auto w = find_capped_violation(g);
        return w ? py::object(py::make_tuple(w->a, w->b, w->c, w->d)) : py::object(py::none());
    });
    m.def("is_h_free", &is_h_free);
    m.def("is_ordered_hole_free", &is_ordered_hole_free);
    m.def("is_capped", &is_capped);

    m.def("partition_three_capped", [](const OrderedGraph& g) {
        auto p = partition_three_capped(g);
        return std::vector<std::vector<Vertex>>(p.parts.begin(), p.parts.end());
    });
    m.def("clique_number_hfree", [](const OrderedGraph& g) { return clique_number_hfree(g); });
    m.def("decompose_capped", [](const OrderedGraph& g) {
        auto d = decompose_capped(g);
        std::vector<PairList> parts;
        for (const auto& part : d.parts) {
            parts.push_back(edge_pairs(part.edges()));
        }
        return py::make_tuple(d.omega, parts);
    });
    m.def("colour_capped", [](const OrderedGraph& g) { return colouring(colour_capped(g)); });
    m.def("colour_hfree", [](const OrderedGraph& g) { return colouring(colour_hfree(g)); });

    m.def("random_simple_polygon", [](int n, std::uint64_t seed, std::int64_t span) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& p : geom::random_simple_polygon(n, seed, span).points) {
            out.emplace_back(p.x, p.y);
        }
        return out;
    }, py::arg("n"), py::arg("seed"), py::arg("span") = 1000);
    m.def("visibility_graph", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
        return geom::visibility_graph(polygon(pts));
    });
    m.def("is_simple_ccw", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
        return geom::is_simple_ccw(polygon(pts));
    });

    auto o = m.def_submodule("oracle", "Brute-force references");
    o.def("clique", [](const OrderedGraph& g) { return oracle::bf_clique(g); });
    o.def("chromatic", [](const OrderedGraph& g) { return oracle::bf_chromatic(g); });
    o.def("crossing_sequence", [](const OrderedGraph& g, Vertex u, Vertex v) {
        return oracle::bf_crossing_sequence(g, u, v);
    });
    o.def("capped", [](const OrderedGraph& g) { return oracle::bf_capped(g); });
    o.def("holes", [](const OrderedGraph& g) { return oracle::bf_holes(g); });
    o.def("verify_colouring", [](const OrderedGraph& g, const std::vector<int>& colours) {
        auto c = oracle::verify_colouring(g, colours);
        return py::make_tuple(c.proper, c.num_colours);
    });
}
