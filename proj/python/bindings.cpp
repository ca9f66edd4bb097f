// Copyright 2026 The ndpo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the closed-form engine, the normal-mode Fock engine and
// the validation suites.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndpo/cross_validation.hpp"
#include "ndpo/fock_lindblad.hpp"

namespace py = pybind11;
using namespace ndpo;

namespace {

// Time argument: a float, or None for the steady state.
VarianceReport two_mode(const ModelParams& p, std::optional<double> t) {
  return t ? variance_two_mode(p, *t) : variance_two_mode(p, kSteadyState);
}

VarianceReport single_mode(const ModelParams& p, std::optional<double> t) {
  return t ? variance_single_mode(p, *t) : variance_single_mode(p, kSteadyState);
}

GaussianWidths widths(const ModelParams& p, std::optional<double> t) {
  return t ? gaussian_widths(p, *t) : gaussian_widths(p, kSteadyState);
}

// Divergent variances map to None.
py::object variance_value(const Variance& v) {
  if (v.is_divergent()) return py::none();
  return py::float_(v.value());
}

py::dict state_summary(const fock::NormalModeState& s, const Regime& regime) {
  const auto v = fock::quadrature_variance(s, fock::QuadratureKind::TwoModeC, regime);
  const auto n = fock::mean_photon(s);
  py::dict d;
  d["t"] = s.t;
  d["v1"] = variance_value(v.v1);
  d["v2"] = variance_value(v.v2);
  d["n_a"] = n.n_a;
  d["n_b"] = n.n_b;
  d["tail"] = s.tail;
  d["n_cut_c"] = s.frame_c.n_cut;
  d["n_cut_d"] = s.frame_d.n_cut;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = NDPO_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration",
                                                   PyExc_ValueError);
  py::register_exception<fock::PhysicalityError>(m, "PhysicalityError", PyExc_RuntimeError);

  py::enum_<RegimeTag>(m, "RegimeTag")
      .value("BELOW_THRESHOLD", RegimeTag::BelowThreshold)
      .value("AT_THRESHOLD", RegimeTag::AtThreshold)
      .value("ABOVE_THRESHOLD", RegimeTag::AboveThreshold);

  py::class_<Regime>(m, "Regime")
      .def_readonly("tag", &Regime::tag)
      .def_readonly("margin", &Regime::margin)
      .def("__repr__", [](const Regime& r) { return "Regime(" + to_string(r.tag) + ")"; });

  py::class_<ReservoirStats>(m, "ReservoirStats")
      .def_readonly("n", &ReservoirStats::n)
      .def_readonly("m", &ReservoirStats::m);
  m.def("reservoir_stats", &reservoir_stats, py::arg("r"));

  py::class_<LambdaCoeffs>(m, "LambdaCoeffs")
      .def_readonly("l1", &LambdaCoeffs::l1)
      .def_readonly("l2", &LambdaCoeffs::l2)
      .def_readonly("l3", &LambdaCoeffs::l3)
      .def_readonly("l4", &LambdaCoeffs::l4)
      .def_readonly("l5", &LambdaCoeffs::l5)
      .def_readonly("l6", &LambdaCoeffs::l6);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&ModelParams::symmetric), py::arg("gamma"), py::arg("kappa_gamma0"),
           py::arg("r"))
      .def_static("asymmetric", &ModelParams::asymmetric, py::arg("gamma_a"), py::arg("gamma_b"),
                  py::arg("kappa_gamma0"), py::arg("r"))
      .def_property_readonly("gamma_a", &ModelParams::gamma_a)
      .def_property_readonly("gamma_b", &ModelParams::gamma_b)
      .def_property_readonly("kappa_gamma0", &ModelParams::kappa_gamma0)
      .def_property_readonly("r", &ModelParams::r)
      .def_property_readonly("reservoir", &ModelParams::reservoir)
      .def("lambdas", &lambda_coeffs)
      .def("regime", [](const ModelParams& p) { return classify_regime(p); })
      .def("to_json", [](const ModelParams& p) { return to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return params_from_json(nlohmann::json::parse(s)); })
      .def("__eq__", [](const ModelParams& a, const ModelParams& b) { return a == b; })
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(" + to_json(p).dump() + ")";
      });

  py::class_<VarianceReport>(m, "VarianceReport")
      .def_property_readonly("v1", [](const VarianceReport& v) { return variance_value(v.v1); })
      .def_property_readonly("v2", [](const VarianceReport& v) { return variance_value(v.v2); })
      .def_readonly("regime", &VarianceReport::regime)
      .def_readonly("warnings", &VarianceReport::warnings);

  m.def("variance_two_mode", &two_mode, py::arg("params"), py::arg("t") = py::none(),
        "Two-mode quadrature variances at time t, or in the steady state when t is None.");
  m.def("variance_single_mode", &single_mode, py::arg("params"), py::arg("t") = py::none(),
        "Single-mode quadrature variances at time t, or in the steady state when t is None.");
  m.def("squeezing_percent", &squeezing_percent, py::arg("variance"));
  m.def("squeezing_onset_r", &squeezing_onset_r, py::arg("params"));

  py::class_<GaussianWidths>(m, "GaussianWidths")
      .def_readonly("a1", &GaussianWidths::a1)
      .def_readonly("a2", &GaussianWidths::a2)
      .def_readonly("a3", &GaussianWidths::a3)
      .def_readonly("a4", &GaussianWidths::a4);
  m.def("gaussian_widths", &widths, py::arg("params"), py::arg("t") = py::none());

  m.def(
      "husimi_q",
      [](const ModelParams& p, std::optional<double> t, std::complex<double> alpha,
         std::complex<double> beta) { return q_two_mode(q_coefficients(widths(p, t)), alpha, beta); },
      py::arg("params"), py::arg("t"), py::arg("alpha"), py::arg("beta"),
      "Closed-form two-mode Husimi Q function at amplitudes (alpha, beta).");
  m.def(
      "husimi_q_single_mode",
      [](const ModelParams& p, std::optional<double> t, std::complex<double> alpha) {
        return q_single_mode_density(q_single_mode(q_coefficients(widths(p, t))), alpha);
      },
      py::arg("params"), py::arg("t"), py::arg("alpha"));

  m.def(
      "numeric_evolve",
      [](const ModelParams& p, const std::vector<double>& times, int n_cut, double tail_tolerance) {
        fock::NormalModeOptions opts;
        opts.fock.n_cut = n_cut;
        opts.fock.tail_tolerance = tail_tolerance;
        const auto run = fock::NormalModeEngine(p, opts).evolve(times);
        if (run.failure) throw fock::PhysicalityError(run.failure->reason);
        const Regime regime = classify_regime(p);
        py::list rows;
        for (const auto& s : run.states) rows.append(state_summary(s, regime));
        return rows;
      },
      py::arg("params"), py::arg("times"), py::arg("n_cut") = 30,
      py::arg("tail_tolerance") = 1e-6,
      "Numerical Lindblad evolution from the vacuum; one dict of observables per time.");
  m.def(
      "numeric_steady_state",
      [](const ModelParams& p, int n_cut, double tail_tolerance) {
        fock::NormalModeOptions opts;
        opts.fock.n_cut = n_cut;
        opts.fock.tail_tolerance = tail_tolerance;
        return state_summary(fock::NormalModeEngine(p, opts).steady_state(), classify_regime(p));
      },
      py::arg("params"), py::arg("n_cut") = 30, py::arg("tail_tolerance") = 1e-6);

  m.def("limit_tags", &validation::limit_tags);
  m.def(
      "limit_suite",
      [](std::optional<std::string> only) {
        validation::LimitFamily f;
        f.only = std::move(only);
        return validation::to_json(validation::limit_suite(f));
      },
      py::arg("only") = py::none(), "Runs the special-case suite and returns the JSON report.");
  m.def(
      "validate",
      [](const std::vector<ModelParams>& points, unsigned threads) {
        std::vector<validation::ValidationCase> cases;
        for (const auto& p : points) cases.push_back(validation::make_case(p));
        py::gil_scoped_release release;
        return validation::to_json(validation::run_cases(cases, threads));
      },
      py::arg("points"), py::arg("threads") = 0,
      "Cross-checks both engines at each parameter point and returns the JSON report.");
}
