#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whitdaha/suite.hpp"

namespace py = pybind11;
using namespace whitdaha;

namespace {

RunConfig make_config(char family, int rank, char lattice) {
  RunConfig cfg;
  cfg.family = family;
  cfg.rank = rank;
  cfg.lattice = lattice;
  return cfg;
}

py::dict result_dict(const CheckResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["anchor"] = r.anchor;
  d["status"] = r.status;
  d["detail"] = r.detail;
  d["wall_ms"] = r.wall_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_whitdaha, m) {
  m.doc() = "Macdonald polynomials, q-Whittaker series and their identity checks";

  py::class_<RootDatum>(m, "RootDatum")
      .def(py::init([](char family, int rank, char lattice) {
             return RootDatum::build(family_from_char(family), rank,
                                     lattice == 'Q' ? LatticeChoice::Q : LatticeChoice::P);
           }),
           py::arg("family"), py::arg("rank"), py::arg("lattice") = 'P')
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("m_tilde", &RootDatum::m_tilde)
      .def_property_readonly("positive_root_count",
                             [](const RootDatum& d) { return d.positive_roots().size(); })
      .def_property_readonly("minuscule_indices", &RootDatum::minuscule_indices)
      .def("json", &RootDatum::json_dump)
      .def("coxeter_number", &RootDatum::coxeter_number);

  m.def(
      "polynomial",
      [](char family, int rank, const std::string& kind, const std::vector<int>& weight,
         char lattice, int box) {
        RunConfig cfg = make_config(family, rank, lattice);
        cfg.sweep_box = box;
        return emit_polynomial(cfg, kind, weight);
      },
      py::arg("family"), py::arg("rank"), py::arg("kind"), py::arg("weight"),
      py::arg("lattice") = 'P', py::arg("box") = 8,
      "Canonical text of E / P / barE / barP at the given weight");

  m.def(
      "run_checks",
      [](char family, int rank, const std::string& task, int box, int cutoff, char lattice,
         int parallel) {
        RunConfig cfg = make_config(family, rank, lattice);
        cfg.task = task;
        cfg.sweep_box = box;
        cfg.cutoff = cutoff;
        cfg.parallel = parallel;
        py::list out;
        for (auto& r : run_task(cfg)) out.append(result_dict(r));
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("task") = "verify_all", py::arg("box") = 2,
      py::arg("cutoff") = 12, py::arg("lattice") = 'P', py::arg("parallel") = 1,
      "Run a verification task and return one dict per check");

  m.def(
      "relation_suite",
      [](char family, int rank, int degree, char lattice) {
        RootDatum d = RootDatum::build(family_from_char(family), rank,
                                       lattice == 'Q' ? LatticeChoice::Q : LatticeChoice::P);
        py::list out;
        for (auto& r : verify_daha_relations(d, degree)) {
          py::dict e;
          e["relation_id"] = r.relation_id;
          e["pass"] = r.pass;
          e["witness"] = r.witness;
          e["mismatch"] = r.mismatch;
          out.append(e);
        }
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("degree") = 2, py::arg("lattice") = 'P');

  m.attr("__version__") = "0.1.0";
}
