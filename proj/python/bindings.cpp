#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subtyper/decls.hpp"
#include "subtyper/emit.hpp"

namespace py = pybind11;
using namespace subtyper;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generic subtyping graphs with interval type arguments";

    // Translators run newest-first, so the base class goes in first.
    py::register_exception<Error>(m, "SubtyperError", PyExc_RuntimeError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError",
                                                PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init<>())
        .def("add_vertex", &DirectedGraph::add_vertex)
        .def("add_edge", &DirectedGraph::add_edge)
        .def("has_vertex", &DirectedGraph::has_vertex)
        .def("has_edge", &DirectedGraph::has_edge)
        .def("vertex_count", &DirectedGraph::vertex_count)
        .def("edge_count", &DirectedGraph::edge_count)
        .def("vertices", &DirectedGraph::vertices)
        .def("edges", &DirectedGraph::edges)
        .def(py::self == py::self)
        .def("__repr__", [](const DirectedGraph& g) {
            return "<DirectedGraph |V|=" + std::to_string(g.vertex_count()) +
                   " |E|=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<Interval>(m, "Interval")
        .def(py::init<Label, Label>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Interval& i) {
            return "Interval(lo='" + i.lo + "', hi='" + i.hi + "')";
        });

    py::class_<NamingConfig>(m, "NamingConfig")
        .def(py::init<>())
        .def_readwrite("wildcard", &NamingConfig::wildcard)
        .def_readwrite("lower_bounded_prefix", &NamingConfig::lower_bounded_prefix)
        .def_readwrite("upper_bounded_suffix", &NamingConfig::upper_bounded_suffix)
        .def_readwrite("interval_separator", &NamingConfig::interval_separator)
        .def_readwrite("open_bracket", &NamingConfig::open_bracket)
        .def_readwrite("close_bracket", &NamingConfig::close_bracket)
        .def_readwrite("top", &NamingConfig::top)
        .def_readwrite("bottom", &NamingConfig::bottom);

    py::enum_<ArgMode>(m, "ArgMode")
        .value("INTERVAL", ArgMode::interval)
        .value("WILDCARD", ArgMode::wildcard);

    py::enum_<SubtypeAnswer>(m, "SubtypeAnswer")
        .value("YES", SubtypeAnswer::yes)
        .value("NO", SubtypeAnswer::no)
        .value("UNKNOWN", SubtypeAnswer::unknown);

    py::enum_<EmitFormat>(m, "EmitFormat")
        .value("DOT", EmitFormat::dot)
        .value("GRAPHML", EmitFormat::graphml)
        .value("JSON", EmitFormat::json);

    py::class_<ContainmentGraph>(m, "ContainmentGraph")
        .def_readonly("graph", &ContainmentGraph::graph)
        .def_readonly("index", &ContainmentGraph::index);

    py::class_<SubclassingGraph>(m, "SubclassingGraph")
        .def_readonly("graph", &SubclassingGraph::graph)
        .def_readonly("generics", &SubclassingGraph::generics);

    py::class_<ClassDecl>(m, "ClassDecl")
        .def_readonly("name", &ClassDecl::name)
        .def_readonly("type_param", &ClassDecl::type_param)
        .def_readonly("super_name", &ClassDecl::super_name)
        .def_readonly("super_arg", &ClassDecl::super_arg);

    py::class_<ClassTable>(m, "ClassTable")
        .def_readonly("decls", &ClassTable::decls)
        .def_readonly("names", &ClassTable::names);

    py::class_<IterationRow>(m, "IterationRow")
        .def_readonly("iteration", &IterationRow::iteration)
        .def_readonly("mode", &IterationRow::mode)
        .def_readonly("vertex_count", &IterationRow::vertex_count)
        .def_readonly("edge_count", &IterationRow::edge_count)
        .def_readonly("interval_count", &IterationRow::interval_count)
        .def_readonly("wildcard_expressible_count",
                      &IterationRow::wildcard_expressible_count);

    py::class_<IterationReport>(m, "IterationReport")
        .def_readonly("rows", &IterationReport::rows);

    py::class_<IterationOutcome>(m, "IterationOutcome")
        .def_readonly("graph", &IterationOutcome::graph)
        .def_readonly("report", &IterationOutcome::report)
        .def_readonly("stages", &IterationOutcome::stages);

    py::class_<ConstructionConfig>(m, "ConstructionConfig")
        .def(py::init<>())
        .def_readwrite("iterations", &ConstructionConfig::iterations)
        .def_readwrite("mode", &ConstructionConfig::mode)
        .def_readwrite("naming", &ConstructionConfig::naming)
        .def_readwrite("vertex_budget", &ConstructionConfig::vertex_budget)
        .def_readwrite("path_budget", &ConstructionConfig::path_budget);

    m.def("reaches", &reaches, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("is_dag", &is_dag);
    m.def("transitive_closure", &transitive_closure);
    m.def("transitive_reduction", &transitive_reduction);
    m.def("all_simple_paths", &all_simple_paths, py::arg("g"),
          py::arg("include_trivial"), py::arg("max_paths") = default_path_budget);

    m.def("intervals_of", [](const DirectedGraph& g) {
        auto found = intervals_of(g);
        return std::vector<Interval>(found.begin(), found.end());
    });
    m.def("witnesses", &witnesses, py::arg("g"), py::arg("interval"),
          py::arg("max_paths") = default_path_budget);
    m.def("is_subpath", &is_subpath);
    m.def("contains", &contains, py::arg("g"), py::arg("inner"), py::arg("outer"));
    m.def("precedes", &precedes, py::arg("g"), py::arg("first"), py::arg("second"));
    m.def("render_interval", &render_interval);
    m.def("parse_interval_arg", &parse_interval_arg);
    m.def("containment_graph", &containment_graph, py::arg("g"), py::arg("naming"),
          py::arg("mode"), py::arg("max_vertices") = default_vertex_budget);

    m.def("partial_product", &partial_product);
    m.def("parse_decls", &parse_decls);
    m.def("to_source", &to_source);
    m.def("build_subclassing", &build_subclassing);
    m.def("seed", &seed);
    m.def("iterate", &iterate);
    m.def("parse_type_expr", &parse_type_expr);
    m.def("parse_subtype_query", &parse_subtype_query);
    m.def("query_subtype", &query_subtype);
    m.def("emit", &emit, py::arg("g"), py::arg("report"), py::arg("mode"),
          py::arg("iteration"), py::arg("format"));
}
