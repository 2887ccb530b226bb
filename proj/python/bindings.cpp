#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "obstructa/canonical.hpp"
#include "obstructa/decomposition.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/enumeration.hpp"
#include "obstructa/error.hpp"
#include "obstructa/families.hpp"
#include "obstructa/hamiltonicity.hpp"
#include "obstructa/io.hpp"
#include "obstructa/serialize.hpp"

namespace py = pybind11;
using namespace obstructa;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::optional<std::vector<int>> sequence_or_none(const HamResult& r) {
    if (!r.found) return std::nullopt;
    return r.sequence;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "HC-obstruction toolkit: graphs, detectors, families and exhaustive verification";

    py::register_exception<Error>(m, "ObstructaError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edges", &edge_pairs)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) { return "Graph('" + encode_graph6(g) + "')"; });

    py::class_<ClassificationRecord>(m, "ClassificationRecord")
        .def_readonly("two_connected", &ClassificationRecord::two_connected)
        .def_readonly("wheel_free", &ClassificationRecord::wheel_free)
        .def_readonly("contains_3pc", &ClassificationRecord::contains_3pc)
        .def_readonly("hamiltonian", &ClassificationRecord::hamiltonian)
        .def_readonly("hc_obstruction", &ClassificationRecord::hc_obstruction)
        .def_property_readonly("recognized_3pc",
                               [](const ClassificationRecord& r) -> std::optional<std::string> {
                                   if (!r.recognized_3pc) return std::nullopt;
                                   return format_spec(*r.recognized_3pc);
                               })
        .def("to_json", [](const ClassificationRecord& r) { return to_json(r).dump(); });

    m.def("from_graph6", [](const std::string& s) { return decode_graph6(s); }, py::arg("text"));
    m.def("to_graph6", &encode_graph6, py::arg("g"));
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); }, py::arg("text"));
    m.def("build", [](const std::string& spec) { return build_family(parse_family_spec(spec)); }, py::arg("spec"),
          "Graph of a family spec such as 'theta:2,2,2' or 'wheel:6@0,2,4'.");
    m.def(
        "recognize_3pc",
        [](const Graph& g) -> std::optional<std::string> {
            const auto s = recognize_3pc(g);
            if (!s) return std::nullopt;
            return format_spec(*s);
        },
        py::arg("g"));

    m.def("is_two_connected", &is_two_connected, py::arg("g"));
    m.def("is_wheel_free", &is_wheel_free, py::arg("g"));
    m.def(
        "find_induced_3pc",
        [](const Graph& g) -> std::optional<std::pair<std::string, std::vector<int>>> {
            const auto w = find_induced_3pc(g);
            if (!w) return std::nullopt;
            return std::make_pair(format_spec(w->spec), std::vector<int>(w->embedding.begin(), w->embedding.end()));
        },
        py::arg("g"));
    m.def("classify", &classify, py::arg("g"));
    m.def(
        "is_hc_obstruction",
        [](const Graph& g) { return to_json(is_hc_obstruction(g)).dump(); }, py::arg("g"),
        "Verdict as a JSON string.");
    m.def(
        "hamiltonian_cycle", [](const Graph& g) { return sequence_or_none(find_hamiltonian_cycle(g)); },
        py::arg("g"));
    m.def(
        "hamiltonian_path", [](const Graph& g) { return sequence_or_none(find_hamiltonian_path(g)); },
        py::arg("g"));

    m.def("canonical_form", &canonical_form, py::arg("g"));
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
    m.def("has_k4_minor", &has_k4_minor, py::arg("g"));
    m.def(
        "line_graph", [](const Graph& g) { return line_graph(g).graph; }, py::arg("g"));
    m.def(
        "decompose", [](const Graph& g) { return to_json(decompose_pipeline(g)).dump(); }, py::arg("g"),
        "Pipeline trace as a JSON string.");

    m.def(
        "census",
        [](int max_n, int jobs) {
            py::gil_scoped_release release;
            return census_to_json(census(max_n, jobs));
        },
        py::arg("max_n"), py::arg("jobs") = 1);
    m.def(
        "verify",
        [](int max_n, int jobs) {
            py::gil_scoped_release release;
            return census_to_json(verify_main_theorem(max_n, jobs));
        },
        py::arg("max_n"), py::arg("jobs") = 1);
}
