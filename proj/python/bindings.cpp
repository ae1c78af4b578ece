#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphlines/canonical.hpp"
#include "graphlines/catalog.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"
#include "graphlines/report.hpp"
#include "graphlines/search.hpp"
#include "graphlines/structure.hpp"
#include "graphlines/verify.hpp"

namespace py = pybind11;
using namespace graphlines;

namespace {

auto vertex_list(VertexSet s) -> std::vector<int>
{
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

auto vertex_set(const std::vector<int> &vs) -> VertexSet
{
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw std::domain_error("vertex out of range");
        s |= bit(v);
    }
    return s;
}

auto edge_pairs(const std::vector<Edge> &edges) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (auto e : edges)
        out.emplace_back(e.u, e.v);
    return out;
}

/// JSON values cross into Python as plain dicts via the json module.
auto to_python(const Json &j) -> py::object
{
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Lines in graph metrics: line counts, structure predicates and verification suites";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", [](const Graph &g, int v) { return vertex_list(g.neighbours(v)); })
        .def("edges", [](const Graph &g) { return edge_pairs(g.edges()); })
        .def("add_edge", &Graph::add_edge)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__repr__", [](const Graph &g) { return "<Graph " + to_graph6(g) + ">"; });

    m.def("from_edge_list", [](int n, const std::vector<std::pair<int, int>> &edges) { return from_edge_list(n, edges); },
          py::arg("n"), py::arg("edges"));
    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("to_graph6", &to_graph6, py::arg("g"));
    m.def("canonical_form", [](const Graph &g) { return py::bytes(canonical_form(g)); }, py::arg("g"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("g"), py::arg("h"));
    m.def("induced_subgraph", [](const Graph &g, const std::vector<int> &s) { return induced_subgraph(g, vertex_set(s)).graph; });
    m.def("contract_edge", [](const Graph &g, int u, int v) { return contract_edge(g, Edge(u, v)); });
    m.def("is_connected", &is_connected);

    m.def("catalog", [] {
        py::dict out;
        for (const auto &e : catalog())
            out[py::str(e.name)] = e.graph;
        return out;
    });
    m.def("catalog_graph", [](const std::string &name) { return catalog_entry(name).graph; });

    m.def("distances", [](const Graph &g) {
        const auto d = apsp(g);
        std::vector<std::vector<int>> out(static_cast<std::size_t>(g.order()));
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                out[u].push_back(d(u, v) == kUnreachable ? -1 : d(u, v));
        return out;
    }, "Hop distances, -1 for unreachable pairs");
    m.def("diameter", [](const Graph &g) -> py::object {
        const int d = diameter(apsp(g));
        if (d == kUnreachable)
            return py::none();
        return py::int_(d);
    });

    m.def("line", [](const Graph &g, int x, int y) { return vertex_list(line_of_pair(g, x, y).members); });
    m.def("lines", [](const Graph &g) {
        std::vector<std::vector<int>> out;
        for (const auto &l : line_partition(g).classes)
            out.push_back(vertex_list(l.members));
        return out;
    }, "Distinct lines in first-occurrence order");
    m.def("ell", &ell);
    m.def("ul", py::overload_cast<const Graph &>(&ul));

    m.def("bridges", [](const Graph &g) { return edge_pairs(bridges(g)); });
    m.def("cut_vertices", [](const Graph &g) { return vertex_list(cut_vertices(g)); });
    m.def("is_chordal", &is_chordal);
    m.def("is_prime", &is_prime);
    m.def("is_module", [](const Graph &g, const std::vector<int> &s) { return is_module(g, vertex_set(s)); });
    m.def("in_class_C", &in_class_C);
    m.def("classify_family", &classify_family);

    m.def("analyze", [](const Graph &g) { return to_python(analysis_json(g)); });
    m.def("verify_main_theorem", [](const Graph &g) { return to_python(to_json(verify_main_theorem(g))); });
    m.def("verify_conjecture_pendant", [](const Graph &g) { return to_python(to_json(verify_conjecture_pendant(g))); });
    m.def("verify_conjecture_ul", [](const Graph &g) { return to_python(to_json(verify_conjecture_ul(g))); });
    m.def("lemma31", [] {
        py::list out;
        for (const auto &v : lemma31_suite().verdicts)
            out.append(to_python(to_json(v)));
        return out;
    });

    m.def("enumerate_connected", [](int n) { return enumerate_connected(n); }, py::arg("n"));
    m.def("find_counterexamples", [](int n_max, const std::string &which) {
        auto ineq = parse_inequality(which);
        if (!ineq)
            throw std::invalid_argument("inequality must be main, conj2 or conj3");
        py::list out;
        for (const auto &r : find_counterexamples(n_max, *ineq))
            out.append(to_python(to_json(r)));
        return out;
    }, py::arg("n_max"), py::arg("inequality"));
    m.def("render_dot", [](const Graph &g) { return render_dot(g); });
}
