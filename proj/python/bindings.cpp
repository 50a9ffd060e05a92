#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "quasipart/decomposition.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/graph_io.hpp"
#include "quasipart/instances.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/relation.hpp"
#include "quasipart/shock.hpp"
#include "quasipart/verify.hpp"
#include "quasipart/wave.hpp"

namespace py = pybind11;
using namespace quasipart;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Cutset make_cutset(const PlanarDigraph& g, const std::vector<ArcId>& arcs) {
  Cutset cut(g.arc_count());
  for (ArcId a : arcs) {
    if (a >= g.arc_count()) throw InputError("arc id " + std::to_string(a) + " out of range");
    cut.insert(a);
  }
  return cut;
}

PlanarDigraph generate_instance(const std::string& family, int rows, int cols, int size,
                                int max_length, double constant, const std::string& orientation,
                                std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = parse_family(family);
  spec.rows = rows;
  spec.cols = cols;
  spec.size = size;
  spec.lengths = constant >= 0.0 ? LengthDistribution::fixed(constant)
                                 : LengthDistribution::uniform(max_length);
  spec.orientation = parse_orientation(orientation);
  spec.seed = seed;
  return generate(spec);
}

py::dict partition_dict(const PartitionSample& s) {
  py::dict d;
  d["cutset"] = s.cutset.ids();
  py::dict labels;
  for (ArcId a : s.cutset.ids()) labels[py::int_(a)] = s.provenance[a].label();
  d["provenance"] = labels;
  d["layer_count"] = s.layer_count;
  d["max_depth"] = s.max_depth;
  std::ostringstream waves;
  write_wave_dump(waves, s.waves);
  d["waves"] = py::module_::import("json").attr("loads")(waves.str());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Random quasipartitions of planar digraphs";
  m.attr("__version__") = QUASIPART_VERSION;

  // Later registrations are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);

  py::class_<PlanarDigraph>(m, "PlanarDigraph")
      .def_property_readonly("vertex_count", &PlanarDigraph::vertex_count)
      .def_property_readonly("edge_count", &PlanarDigraph::edge_count)
      .def_property_readonly("arc_count", &PlanarDigraph::arc_count)
      .def("arcs",
           [](const PlanarDigraph& g) {
             std::vector<std::tuple<VertexId, VertexId, double>> out;
             for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head, a.length);
             return out;
           },
           "Arcs as (tail, head, length) in id order.")
      .def("to_text",
           [](const PlanarDigraph& g) {
             std::ostringstream s;
             write_graph(s, g);
             return s.str();
           })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream s(text);
                    return read_graph(s);
                  })
      .def_static("from_file", &read_graph_file, py::arg("path"))
      .def("__eq__", [](const PlanarDigraph& a, const PlanarDigraph& b) { return a == b; })
      .def("__repr__", [](const PlanarDigraph& g) {
        return "<PlanarDigraph vertices=" + std::to_string(g.vertex_count()) +
               " arcs=" + std::to_string(g.arc_count()) + ">";
      });

  m.def("generate", &generate_instance, py::arg("family") = "grid", py::arg("rows") = 4,
        py::arg("cols") = 4, py::arg("size") = 10, py::arg("max_length") = 10,
        py::arg("constant") = -1.0, py::arg("orientation") = "both", py::arg("seed") = 0,
        "Seeded instance; a non-negative constant replaces the uniform lengths.");

  m.def("distance", &shortest_path_dist, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("all_pairs_distances", &all_pairs_distances, py::arg("g"));

  m.def(
      "sample_shock",
      [](const PlanarDigraph& g, double delta, std::uint64_t seed, bool reverse) {
        Rng rng(seed);
        const auto r = sample_shock(g, delta, id_order_strategy(g.vertex_count()), rng,
                                    reverse ? Orientation::kReverse : Orientation::kForward);
        py::dict d;
        d["clusters"] = r.clusters;
        d["centers"] = r.centers;
        d["radii"] = r.radii;
        d["cutset"] = r.cutset.ids();
        return d;
      },
      py::arg("g"), py::arg("delta"), py::arg("seed") = 0, py::arg("reverse") = false);

  m.def(
      "sample_wave",
      [](const PlanarDigraph& g, VertexId source, double delta, std::uint64_t seed) {
        Rng rng(seed);
        const auto w = sample_wave(g, source, delta, rng);
        py::dict d;
        d["layers"] = w.layers;
        d["offsets"] = w.offsets;
        d["cut"] = w.cut.ids();
        return d;
      },
      py::arg("g"), py::arg("source"), py::arg("delta"), py::arg("seed") = 0);

  m.def(
      "partition",
      [](const PlanarDigraph& g, double delta, std::uint64_t seed, std::size_t k, double c1,
         std::size_t base_size) {
        PartitionConfig pc;
        pc.c1 = c1;
        pc.base_size = base_size;
        return partition_dict(sample_at(g, delta, seed, k, pc));
      },
      py::arg("g"), py::arg("delta"), py::arg("seed") = 0, py::arg("k") = 0, py::arg("c1") = 8.0,
      py::arg("base_size") = 3, "Sample k of the quasipartition run seeded with seed.");

  m.def(
      "related",
      [](const PlanarDigraph& g, const std::vector<ArcId>& cut, VertexId u, VertexId v) {
        return relation_contains(Quasipartition(g, make_cutset(g, cut), 0.0), u, v);
      },
      py::arg("g"), py::arg("cutset"), py::arg("u"), py::arg("v"));

  m.def(
      "check_bounded",
      [](const PlanarDigraph& g, const std::vector<ArcId>& cut, double bound) {
        return to_python(to_json(check_bounded(g, make_cutset(g, cut), bound)));
      },
      py::arg("g"), py::arg("cutset"), py::arg("bound"));

  m.def(
      "check_axioms",
      [](const PlanarDigraph& g, const std::vector<ArcId>& cut) {
        return to_python(to_json(check_quasipartition_axioms(g, make_cutset(g, cut))));
      },
      py::arg("g"), py::arg("cutset"));

  m.def(
      "estimate_lipschitz",
      [](const PlanarDigraph& g, double delta, std::size_t samples, std::uint64_t seed,
         const std::string& sampler, const std::string& scope, unsigned jobs) {
        const PairScope s = scope == "all-pairs" ? PairScope::kAllPairs : PairScope::kArcs;
        LipschitzReport r;
        {
          py::gil_scoped_release release;
          r = estimate_lipschitz(g, delta, named_sampler(sampler, g, delta, seed), samples, s,
                                 kInfinity, jobs);
        }
        return to_python(to_json(r));
      },
      py::arg("g"), py::arg("delta"), py::arg("samples") = 200, py::arg("seed") = 0,
      py::arg("sampler") = "planar", py::arg("scope") = "arcs", py::arg("jobs") = 1);
}
