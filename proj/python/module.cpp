// Copyright 2026 The noonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noonlab/blocks.hpp"
#include "noonlab/cli.hpp"
#include "noonlab/factorize.hpp"
#include "noonlab/fock.hpp"
#include "noonlab/litho.hpp"
#include "noonlab/yield.hpp"

namespace py = pybind11;
using namespace noonlab;

namespace {

py::list ket_list(const TwoModeState &s) {
  py::list out;
  for (const auto &k : s.basis().kets()) out.append(py::make_tuple(k[0], k[1]));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conditional generation of two-mode path-entangled photon states.";

  py::register_exception<CutoffOverflow>(m, "CutoffOverflow", PyExc_OverflowError);

  py::class_<TwoModeState>(m, "TwoModeState")
      .def(py::init<int>(), py::arg("cutoff"))
      .def_property_readonly("cutoff", &TwoModeState::cutoff)
      .def_property_readonly("amplitudes", [](const TwoModeState &s) { return Eigen::VectorXcd(s.amplitudes()); },
                             "Amplitudes in basis order; see kets().")
      .def("kets", &ket_list)
      .def("amp", [](const TwoModeState &s, int na, int nb) { return s.amp({na, nb}); }, py::arg("n_a"), py::arg("n_b"))
      .def("set", [](TwoModeState &s, int na, int nb, Complex v) { s.at({na, nb}) = v; }, py::arg("n_a"),
           py::arg("n_b"), py::arg("value"))
      .def("norm2", &TwoModeState::norm2)
      .def("to_dict",
           [](const TwoModeState &s) {
             py::dict d;
             const auto &kets = s.basis().kets();
             for (std::size_t i = 0; i < kets.size(); ++i) {
               const Complex a = s.amplitudes()[static_cast<Eigen::Index>(i)];
               if (a != Complex{}) d[py::make_tuple(kets[i][0], kets[i][1])] = a;
             }
             return d;
           })
      .def("__repr__", [](const TwoModeState &s) { return "<TwoModeState cutoff=" + std::to_string(s.cutoff()) + ">"; });

  py::class_<TwoModeDensity>(m, "TwoModeDensity")
      .def_property_readonly("cutoff", &TwoModeDensity::cutoff)
      .def_property_readonly("matrix", [](const TwoModeDensity &r) { return Eigen::MatrixXcd(r.matrix()); })
      .def("entry", &TwoModeDensity::entry)
      .def("trace", &TwoModeDensity::trace)
      .def("sector", &TwoModeDensity::sector, py::arg("total"))
      .def("max_populated_total", &TwoModeDensity::max_populated_total, py::arg("tol") = 0.0)
      .def("min_eigenvalue", &TwoModeDensity::min_eigenvalue);

  m.def("vacuum", &vacuum, py::arg("cutoff") = 0);
  m.def("fock_ket", &fock_ket, py::arg("cutoff"), py::arg("n_a"), py::arg("n_b"));
  m.def("fidelity", &fidelity);
  m.def("inner_product", &inner_product<2>);
  m.def("apply_linear_factor", &apply_linear_factor, py::arg("state"), py::arg("theta"), py::arg("phi"));
  m.def("photon_number_eigenvalue", &photon_number_eigenvalue, py::arg("state"), py::arg("rel_tol") = 1e-24);

  py::class_<TargetSpec>(m, "TargetSpec")
      .def(py::init<int, std::vector<Complex>>(), py::arg("photons"), py::arg("coeffs"))
      .def_property_readonly("photons", &TargetSpec::photons)
      .def_property_readonly("coeffs", &TargetSpec::coeffs)
      .def("to_state", &TargetSpec::to_state, py::arg("cutoff") = -1);

  py::class_<FactorAngles>(m, "FactorAngles")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &FactorAngles::theta)
      .def_readwrite("phi", &FactorAngles::phi)
      .def("__repr__", [](const FactorAngles &f) {
        return "FactorAngles(theta=" + std::to_string(f.theta) + ", phi=" + std::to_string(f.phi) + ")";
      });

  py::class_<FactorSet>(m, "FactorSet")
      .def_readonly("factors", &FactorSet::factors)
      .def_readonly("normalization", &FactorSet::normalization)
      .def_readonly("global_phase", &FactorSet::global_phase);

  m.def("noon_target", &noon_target, py::arg("photons"));
  m.def("monomial_coeffs", &monomial_coeffs);
  m.def("factorize", &factorize);
  m.def("reconstruct", &reconstruct);
  m.def("noon_factor_angles", &noon_factor_angles, py::arg("photons"));
  m.def("pair_factor_phases", &pair_factor_phases, py::arg("target"), py::arg("tol") = 1e-6);
  m.def("factor_product", [](const std::vector<FactorAngles> &f) { return factor_product(f); });
  m.def("normalization", [](const std::vector<FactorAngles> &f) { return normalization(f); });

  py::class_<BlockParams>(m, "BlockParams")
      .def(py::init([](double theta, double phi, double t) { return BlockParams{theta, phi, t}; }), py::arg("theta"),
           py::arg("phi"), py::arg("transmittance"))
      .def_readwrite("theta", &BlockParams::theta)
      .def_readwrite("phi", &BlockParams::phi)
      .def_readwrite("transmittance", &BlockParams::transmittance)
      .def_property_readonly("kappa", &BlockParams::kappa);

  py::class_<BlockOutcome>(m, "BlockOutcome")
      .def_readonly("state", &BlockOutcome::state)
      .def_readonly("probability", &BlockOutcome::probability);

  py::class_<SchemeResult>(m, "SchemeResult")
      .def_readonly("final_state", &SchemeResult::final_state)
      .def_readonly("block_probs", &SchemeResult::block_probs)
      .def_readonly("total_yield", &SchemeResult::total_yield)
      .def_readonly("impossible", &SchemeResult::impossible);

  m.def("ancilla_single", &ancilla_single, py::arg("theta"), py::arg("phi"));
  m.def("ancilla_double", &ancilla_double, py::arg("phi"));
  m.def("run_block_single", &run_block_single, py::arg("state"), py::arg("params"));
  m.def("run_block_double", &run_block_double, py::arg("state"), py::arg("phi"), py::arg("transmittance"));
  m.def("optimal_schedule", &optimal_schedule, py::arg("blocks"));
  m.def("noon_pair_phases", &noon_pair_phases, py::arg("photons"));
  m.def(
      "run_scheme",
      [](const std::vector<FactorAngles> &f, const std::vector<double> &t) { return run_scheme(f, t); },
      py::arg("factors"), py::arg("transmittances"));
  m.def(
      "run_scheme_double",
      [](int n, const std::vector<double> &p, const std::vector<double> &t) { return run_scheme_double(n, p, t); },
      py::arg("photons"), py::arg("phases"), py::arg("transmittances"));
  m.def(
      "run_scheme_unconditional",
      [](const std::vector<FactorAngles> &f, const std::vector<double> &t) { return run_scheme_unconditional(f, t); },
      py::arg("factors"), py::arg("transmittances"));

  m.def("qk_squared", &qk_squared, py::arg("transmittance"), py::arg("k"));
  m.def("optimal_transmittance", &optimal_transmittance, py::arg("k"));
  m.def("yield_generic", &yield_generic, py::arg("normalization"), py::arg("photons"));
  m.def("yield_noon_single", &yield_noon_single, py::arg("photons"));
  m.def("yield_noon_double", &yield_noon_double, py::arg("photons"));
  m.def("yield_stirling", &yield_stirling, py::arg("photons"));

  py::class_<FringeSweep>(m, "FringeSweep")
      .def_readonly("photons", &FringeSweep::photons)
      .def_readonly("phases", &FringeSweep::phases)
      .def_readonly("rates", &FringeSweep::rates);

  m.def("absorption_rate_pure", &absorption_rate_pure, py::arg("state"), py::arg("photons"));
  m.def("absorption_rate_mixed", &absorption_rate_mixed, py::arg("rho"), py::arg("photons"));
  m.def("fringe_sweep", &fringe_sweep, py::arg("state"), py::arg("photons"), py::arg("n_points"));
  m.def("fringe_spectrum", &fringe_spectrum);
  m.def("dominant_frequency", &dominant_frequency);

  m.def(
      "oracle_check_json",
      [](std::uint64_t seed, int trials, bool perturb) {
        const auto rep = cli::oracle_check({seed, trials, 8, perturb});
        return rep.report.dump();
      },
      py::arg("seed") = 1, py::arg("trials") = 10, py::arg("perturb") = false);
}
