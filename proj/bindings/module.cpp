#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hajos/digraph.hpp"
#include "hajos/errors.hpp"
#include "hajos/fitness.hpp"
#include "hajos/hajos_ops.hpp"
#include "hajos/lineage.hpp"
#include "hajos/oracle.hpp"
#include "hajos/rank_ga.hpp"

namespace py = pybind11;
using namespace hajos;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hajos construction search and verification toolkit";

  py::register_exception<NotIndependentError>(m, "NotIndependentError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ScriptParseError", PyExc_ValueError);
  py::register_exception<ReplayError>(m, "ReplayError", PyExc_ValueError);

  py::class_<ArcRef>(m, "ArcRef")
      .def(py::init<int, int>(), py::arg("tail"), py::arg("head"))
      .def_readwrite("tail", &ArcRef::tail)
      .def_readwrite("head", &ArcRef::head)
      .def(py::self == py::self)
      .def("__repr__", [](const ArcRef& a) {
        return "ArcRef(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("order"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("arc", &Digraph::arc, py::arg("tail"), py::arg("head"))
      .def("add_arc", &Digraph::add_arc, py::arg("tail"), py::arg("head"))
      .def("remove_arc", &Digraph::remove_arc, py::arg("tail"), py::arg("head"))
      .def("arcs", &Digraph::arcs)
      .def("out_neighbors", &Digraph::out_neighbors, py::arg("vertex"))
      .def("in_neighbors", &Digraph::in_neighbors, py::arg("vertex"))
      .def(py::self == py::self)
      .def("__repr__", [](const Digraph& d) {
        return "Digraph(order=" + std::to_string(d.order()) +
               ", arcs=" + std::to_string(d.arc_count()) + ")";
      });

  py::class_<PairCounts>(m, "PairCounts")
      .def_readonly("asymmetric_arcs", &PairCounts::asymmetric_arcs)
      .def_readonly("digons", &PairCounts::digons)
      .def_readonly("non_adjacent_pairs", &PairCounts::non_adjacent_pairs);

  m.def("complete_symmetric", &complete_symmetric, py::arg("k"));
  m.def("symmetric_cycle", &symmetric_cycle, py::arg("k"));
  m.def("directed_cycle", &directed_cycle, py::arg("k"));
  m.def("pair_counts", &pair_counts, py::arg("digraph"));
  m.def("symmetric_triangle_count", &symmetric_triangle_count, py::arg("digraph"));
  m.def("mixed_triangle_count", &mixed_triangle_count, py::arg("digraph"));
  m.def("are_independent", &are_independent, py::arg("digraph"), py::arg("u"), py::arg("v"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("d1"), py::arg("d2"));
  m.def("delete_vertex", &delete_vertex, py::arg("digraph"), py::arg("vertex"));
  m.def("parse_digraph", [](const std::string& text) { return parse_digraph(text); },
        py::arg("text"));
  m.def("serialize_digraph", &serialize_digraph, py::arg("digraph"));
  m.def("to_dot", &to_dot, py::arg("digraph"));

  m.def("identify", &identify, py::arg("digraph"), py::arg("keep"), py::arg("remove"));
  m.def(
      "hajos_join",
      [](const Digraph& left, const ArcRef& left_arc, const Digraph& right,
         const ArcRef& right_arc) {
        return hajos_join({left, left_arc, right, right_arc});
      },
      py::arg("left"), py::arg("left_arc"), py::arg("right"), py::arg("right_arc"));

  py::class_<FitnessBreakdown>(m, "FitnessBreakdown")
      .def_readonly("order", &FitnessBreakdown::order)
      .def_readonly("asymmetric_arcs", &FitnessBreakdown::asymmetric_arcs)
      .def_readonly("digons", &FitnessBreakdown::digons)
      .def_readonly("symmetric_triangles", &FitnessBreakdown::symmetric_triangles)
      .def_readonly("mixed_triangles", &FitnessBreakdown::mixed_triangles)
      .def_property_readonly("order_term", &FitnessBreakdown::order_term)
      .def_property_readonly("asym_density_term", &FitnessBreakdown::asym_density_term)
      .def_property_readonly("sym_balance_term", &FitnessBreakdown::sym_balance_term)
      .def_property_readonly("sym_triangle_term", &FitnessBreakdown::sym_triangle_term)
      .def_property_readonly("mixed_triangle_term", &FitnessBreakdown::mixed_triangle_term)
      .def_property_readonly("total", &FitnessBreakdown::total)
      .def("is_zero", &FitnessBreakdown::is_zero);
  m.def("fitness", &fitness, py::arg("digraph"));

  m.def("color_class_acyclic", &color_class_acyclic, py::arg("digraph"), py::arg("coloring"),
        py::arg("color"));
  m.def("dichromatic_number", &dichromatic_number, py::arg("digraph"));
  m.def("is_r_critical", &is_r_critical, py::arg("digraph"), py::arg("r"));

  py::class_<OpCount>(m, "OpCount")
      .def_readonly("joins", &OpCount::joins)
      .def_readonly("identifications", &OpCount::identifications)
      .def_property_readonly("total", &OpCount::total);

  py::class_<ConstructionScript>(m, "ConstructionScript")
      .def("__len__",
           [](const ConstructionScript& s) { return s.statements.size(); })
      .def(py::self == py::self);

  m.def("paper_script", &paper_script);
  m.def("op_count", &op_count, py::arg("script"));
  m.def("parse_script", [](const std::string& text) { return parse_script(text); },
        py::arg("text"));
  m.def("serialize_script", &serialize_script, py::arg("script"));
  m.def(
      "replay_script", [](const ConstructionScript& s) { return replay_script(s); },
      py::arg("script"));

  py::class_<GaConfig>(m, "GaConfig")
      .def(py::init<>())
      .def_readwrite("pop_size", &GaConfig::pop_size)
      .def_readwrite("pressure", &GaConfig::pressure)
      .def_readwrite("seed", &GaConfig::seed)
      .def_readwrite("max_generations", &GaConfig::max_generations)
      .def_readwrite("stats_interval", &GaConfig::stats_interval)
      .def_readwrite("max_order", &GaConfig::max_order);

  py::class_<StatsRecord>(m, "StatsRecord")
      .def_readonly("generation", &StatsRecord::generation)
      .def_readonly("best_fitness", &StatsRecord::best_fitness)
      .def_readonly("mean_fitness", &StatsRecord::mean_fitness)
      .def_readonly("best_order", &StatsRecord::best_order)
      .def_readonly("best_arc_count", &StatsRecord::best_arc_count)
      .def_readonly("population_mean_order", &StatsRecord::population_mean_order);

  py::class_<RunResult>(m, "RunResult")
      .def_property_readonly("solved",
                             [](const RunResult& r) { return r.solution.has_value(); })
      .def_readonly("generations_used", &RunResult::generations_used)
      .def_readonly("stats", &RunResult::stats)
      .def_property_readonly("solution_digraph",
                             [](const RunResult& r) -> std::optional<Digraph> {
                               if (!r.solution) return std::nullopt;
                               return r.solution->genome;
                             })
      .def("script", [](const RunResult& r) -> std::optional<ConstructionScript> {
        if (!r.solution) return std::nullopt;
        return extract_script(r.lineage, r.solution->lineage_id);
      });

  m.def("run_ga", [](const GaConfig& cfg) { return run_ga(cfg); }, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("stats_csv_header", &stats_csv_header);
  m.def("stats_csv_row", &stats_csv_row, py::arg("record"));
}
