#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sicsep/criteria.hpp"
#include "sicsep/matcore.hpp"
#include "sicsep/oracles.hpp"
#include "sicsep/scan.hpp"
#include "sicsep/sicpovm.hpp"
#include "sicsep/states.hpp"

namespace py = pybind11;
using namespace sicsep;

PYBIND11_MODULE(_sicsep, m) {
  m.doc() = "general SIC-POVM construction and separability criteria";

  py::register_exception<Error>(m, "SicsepError");

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&DensityMatrix::validated), py::arg("dims"),
           py::arg("matrix"), py::arg("tol") = 1e-8)
      .def_readonly("dims", &DensityMatrix::dims)
      .def_readonly("matrix", &DensityMatrix::mat);

  py::class_<GeneralSicPovm>(m, "GeneralSicPovm")
      .def_readonly("dim", &GeneralSicPovm::dim)
      .def_readonly("t", &GeneralSicPovm::t)
      .def_readonly("a", &GeneralSicPovm::a)
      .def_readonly("operators", &GeneralSicPovm::operators);

  py::class_<PovmResiduals>(m, "PovmResiduals")
      .def_readonly("identity_sum", &PovmResiduals::identity_sum)
      .def_readonly("self_overlap", &PovmResiduals::self_overlap)
      .def_readonly("cross_overlap", &PovmResiduals::cross_overlap)
      .def_readonly("min_eigenvalue", &PovmResiduals::min_eigenvalue)
      .def("ok", &PovmResiduals::ok);

  m.def("build_from_t", &build_from_t, py::arg("dim"), py::arg("t"));
  m.def("build_from_a", &build_from_a, py::arg("dim"), py::arg("a"));
  m.def("max_t", &max_t, py::arg("dim"));
  m.def("conjugate", &conjugate, py::arg("povm"));
  m.def("compute_residuals", &compute_residuals, py::arg("povm"));
  m.def("probabilities", &probabilities, py::arg("povm"), py::arg("rho"));
  m.def("index_of_coincidence", &index_of_coincidence, py::arg("povm"),
        py::arg("rho"));
  m.def("purity_from_ic", &purity_from_ic, py::arg("povm"), py::arg("c"));
  m.def("save_povm", &save_povm, py::arg("povm"), py::arg("path"));
  m.def("load_povm", &load_povm, py::arg("path"));

  m.def("maximally_entangled", &maximally_entangled, py::arg("dim"));
  m.def("isotropic", &isotropic, py::arg("dim"), py::arg("p"));
  m.def("ghz_with_noise", &ghz_with_noise, py::arg("parties"), py::arg("dim"),
        py::arg("p"));
  m.def("random_separable", &random_separable, py::arg("dims"),
        py::arg("terms"), py::arg("seed"));
  m.def("random_density", &random_density, py::arg("dims"), py::arg("rank"),
        py::arg("seed"));
  m.def("save_state", &save_state, py::arg("rho"), py::arg("path"),
        py::arg("label") = std::nullopt);
  m.def("load_state", &load_state, py::arg("path"));

  py::enum_<Theorem>(m, "Theorem")
      .value("T1", Theorem::T1)
      .value("T2", Theorem::T2)
      .value("T3", Theorem::T3)
      .value("T4", Theorem::T4);
  py::enum_<JMode>(m, "JMode")
      .value("Exact", JMode::Exact)
      .value("Heuristic", JMode::Heuristic);

  py::class_<Assignment>(m, "Assignment")
      .def_readonly("rows", &Assignment::rows)
      .def_readonly("value", &Assignment::value);

  py::class_<CriterionVerdict>(m, "CriterionVerdict")
      .def_readonly("theorem", &CriterionVerdict::theorem)
      .def_readonly("j_value", &CriterionVerdict::j_value)
      .def_readonly("j_mode", &CriterionVerdict::j_mode)
      .def_readonly("bound", &CriterionVerdict::bound)
      .def_readonly("detected", &CriterionVerdict::detected)
      .def_readonly("inconclusive", &CriterionVerdict::inconclusive)
      .def_readonly("assignment", &CriterionVerdict::assignment);

  py::class_<PartitionSpec>(m, "PartitionSpec")
      .def_static("parse", &PartitionSpec::parse, py::arg("text"),
                  py::arg("n"))
      .def_readonly("blocks", &PartitionSpec::blocks);

  m.def("bound_thm1", &bound_thm1);
  m.def("bound_thm2", &bound_thm2);
  m.def("bound_thm3", &bound_thm3);
  m.def("bound_thm4", &bound_thm4);
  m.def("j_bipartite", &j_bipartite, py::arg("rho"), py::arg("povm_a"),
        py::arg("povm_b"));
  m.def("j_multipartite", &j_multipartite, py::arg("rho"), py::arg("povms"),
        py::arg("mode"), py::arg("seed") = 0, py::arg("restarts") = 32);
  m.def("detect_bipartite", &detect_bipartite, py::arg("rho"),
        py::arg("povm_a"), py::arg("povm_b"), py::arg("theorem"));
  m.def("detect_multipartite", &detect_multipartite, py::arg("rho"),
        py::arg("povms"), py::arg("theorem"), py::arg("mode"),
        py::arg("seed") = 0);
  m.def("detect_k_nonseparable", &detect_k_nonseparable, py::arg("rho"),
        py::arg("partition"), py::arg("povms"), py::arg("theorem"),
        py::arg("mode"), py::arg("seed") = 0);

  py::class_<PptReport>(m, "PptReport")
      .def_readonly("cut", &PptReport::cut)
      .def_readonly("min_eigenvalue", &PptReport::min_eigenvalue)
      .def_readonly("npt", &PptReport::npt);
  m.def("ppt_check", &ppt_check, py::arg("rho"), py::arg("cut"));
  m.def("brute_force_j", &brute_force_j, py::arg("rho"), py::arg("povms"),
        py::arg("limit") = 1000000LL);

  py::class_<ScanRow>(m, "ScanRow")
      .def_readonly("p", &ScanRow::p)
      .def_readonly("j", &ScanRow::j)
      .def_readonly("bound_t1", &ScanRow::bound_t1)
      .def_readonly("bound_t2", &ScanRow::bound_t2)
      .def_readonly("detected_t1", &ScanRow::detected_t1)
      .def_readonly("detected_t2", &ScanRow::detected_t2);
  m.def("scan_isotropic", &scan_isotropic, py::arg("dim"), py::arg("p_start"),
        py::arg("p_end"), py::arg("steps"), py::arg("a") = std::nullopt);
}
