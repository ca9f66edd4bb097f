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

#include "ndpo/cross_validation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ndpo/fock/normal_modes.hpp"

namespace ndpo::validation {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string describe_params(const ModelParams& p) {
  std::ostringstream os;
  os.precision(12);
  os << "gamma=" << p.gamma_a();
  if (!p.is_symmetric()) os << "/" << p.gamma_b();
  os << " kappa_gamma0=" << p.kappa_gamma0() << " r=" << p.r();
  return os.str();
}

// Running maximum of |deviation| that remembers where it happened.
class MaxTracker {
 public:
  void add(double deviation, double tolerance, const std::string& where) {
    const double excess = deviation - tolerance;
    if (!seen_ || excess > worst_excess_) {
      worst_excess_ = excess;
      deviation_ = deviation;
      tolerance_ = tolerance;
      where_ = where;
      seen_ = true;
    }
  }
  bool empty() const { return !seen_; }

  Check to_check(std::string tag, std::string description) const {
    Check c;
    c.tag = std::move(tag);
    c.description = std::move(description);
    c.deviation = deviation_;
    c.tolerance = tolerance_;
    c.passed = seen_ && worst_excess_ <= 0.0;
    c.worst_input = where_;
    return c;
  }

 private:
  bool seen_ = false;
  double worst_excess_ = 0.0;
  double deviation_ = 0.0;
  double tolerance_ = 0.0;
  std::string where_;
};

Check skipped(std::string tag, std::string description, std::string reason) {
  Check c;
  c.tag = std::move(tag);
  c.description = std::move(description);
  c.skipped = true;
  c.skip_reason = std::move(reason);
  return c;
}

// Bound on how much truncation can move a quadrature variance: the top-layer
// population times the largest quadrature moment available there, including
// the rescaling from the squeezed frame.
double tail_bound(const fock::NormalModeState& s) {
  const double bc = (4.0 * s.frame_c.n_cut + 2.0) * std::max(0.0, s.tail) *
                    std::exp(2.0 * std::abs(s.frame_c.squeeze));
  const double bd = (4.0 * s.frame_d.n_cut + 2.0) * std::max(0.0, s.tail) *
                    std::exp(2.0 * std::abs(s.frame_d.squeeze));
  return std::max(bc, bd);
}

fock::NormalModeOptions engine_options(const ValidationCase& c, bool adapt) {
  fock::NormalModeOptions o;
  o.fock = c.fock;
  o.adapt_frame = adapt;
  return o;
}

void add_tail(ValidationReport& rep, const ValidationCase& c,
              const fock::NormalModeRun& run) {
  TailDiagnostics t;
  t.case_name = c.name;
  t.max_tail = run.max_tail;
  if (!run.states.empty()) {
    t.n_cut_c = run.states.back().frame_c.n_cut;
    t.n_cut_d = run.states.back().frame_d.n_cut;
    t.frame_c = run.states.back().frame_c.squeeze;
    t.frame_d = run.states.back().frame_d.squeeze;
  }
  t.converged = run.converged;
  t.notes = run.notes;
  if (run.failure) {
    t.notes.push_back("integration stopped at t=" + fmt(run.failure->last_good_time) +
                      ": " + run.failure->reason);
  }
  rep.tails.push_back(std::move(t));
}

}  // namespace

std::vector<std::complex<double>> default_amplitude_grid() {
  const double axis[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<std::complex<double>> grid;
  for (double re : axis) {
    for (double im : axis) grid.emplace_back(re, im);
  }
  return grid;
}

ValidationCase make_case(const ModelParams& params) {
  ValidationCase c;
  c.name = describe_params(params);
  c.params = params;
  c.amplitude_grid = default_amplitude_grid();
  return c;
}

std::vector<ValidationCase> default_matrix() {
  std::vector<ValidationCase> cases;
  for (double k : {0.0, 0.1, 0.2, 0.4, 0.45}) {
    for (double r : {0.0, 0.25, 0.5, 1.0}) {
      cases.push_back(make_case(ModelParams::symmetric(1.0, k, r)));
    }
  }
  return cases;
}

ValidationReport compare_variances(const ValidationCase& c) {
  const auto t0 = Clock::now();
  if (!c.params.is_symmetric()) {
    throw UnsupportedConfiguration("compare_variances needs symmetric damping (" +
                                   c.name + ")");
  }
  if (c.times.empty() || c.times.front() != 0.0) {
    throw std::invalid_argument("case " + c.name + ": sample times must start at 0");
  }
  const Tolerances& tol = c.tolerances;
  const Regime regime = classify_regime(c.params);
  ValidationReport rep;

  fock::NormalModeRun run;
  try {
    run = fock::NormalModeEngine(c.params, engine_options(c, true)).evolve(c.times);
  } catch (const std::exception& e) {
    throw std::runtime_error("case " + c.name + ": Fock evolution failed: " + e.what());
  }
  add_tail(rep, c, run);

  MaxTracker dv, unc_a, unc_n, vac, trace, herm, pos;
  for (const auto& s : run.states) {
    const std::string at = c.name + " t=" + fmt(s.t);
    const double bound = tail_bound(s);
    const double vtol = std::max(tol.variance, bound);
    for (auto kind : {fock::QuadratureKind::TwoModeC, fock::QuadratureKind::SingleModeA}) {
      const bool two = kind == fock::QuadratureKind::TwoModeC;
      const VarianceReport num = fock::quadrature_variance(s, kind, regime);
      const VarianceReport ana = two ? variance_two_mode(c.params, s.t)
                                     : variance_single_mode(c.params, s.t);
      const char* label = two ? " two-mode" : " single-mode";
      dv.add(std::abs(num.v1.value() - ana.v1.value()), vtol, at + label + " v1");
      dv.add(std::abs(num.v2.value() - ana.v2.value()), vtol, at + label + " v2");
      const double pa = ana.v1.value() * ana.v2.value();
      const double pn = num.v1.value() * num.v2.value();
      unc_a.add(std::max(0.0, 1.0 - pa), tol.closed_form, at + label + " analytic");
      unc_n.add(std::max(0.0, 1.0 - pn), tol.numeric_identity + vtol,
                at + label + " numeric");
      if (s.t == 0.0) {
        for (double v : {ana.v1.value(), ana.v2.value()}) {
          vac.add(std::abs(v - 1.0), tol.closed_form, at + label + " analytic");
        }
        for (double v : {num.v1.value(), num.v2.value()}) {
          vac.add(std::abs(v - 1.0), tol.numeric_identity, at + label + " numeric");
        }
      }
    }
    for (const auto* rho : {&s.c, &s.d}) {
      const auto d = fock::diagnose(*rho);
      const std::string which = at + (rho == &s.c ? " mode c" : " mode d");
      trace.add(d.trace_error, tol.trace, which);
      herm.add(d.hermiticity_error, tol.hermiticity, which);
      pos.add(std::max(0.0, -d.min_eigenvalue), tol.positivity, which);
    }
  }

  if (run.failure || run.states.size() != c.times.size()) {
    Check cov;
    cov.tag = "numeric-coverage";
    cov.description = "Fock evolution reaches every sample time";
    cov.passed = false;
    cov.deviation = static_cast<double>(c.times.size() - run.states.size());
    cov.worst_input = c.name + (run.failure ? " stopped at t=" +
                                                  fmt(run.failure->last_good_time) +
                                                  ": " + run.failure->reason
                                            : std::string());
    rep.checks.push_back(cov);
  }
  rep.checks.push_back(dv.to_check(
      "variance-dynamics", "numeric vs closed-form variances at sample times"));
  rep.checks.push_back(unc_a.to_check("uncertainty-analytic",
                                      "closed-form v1 v2 >= 1 at sample times"));
  rep.checks.push_back(unc_n.to_check("uncertainty-numeric",
                                      "numeric v1 v2 >= 1 at sample times"));
  rep.checks.push_back(vac.to_check("initial-vacuum", "v1 = v2 = 1 at t = 0"));
  rep.checks.push_back(trace.to_check("state-trace", "|tr rho - 1| along the trajectory"));
  rep.checks.push_back(herm.to_check("state-hermiticity",
                                     "max |rho - rho^dag| along the trajectory"));
  rep.checks.push_back(pos.to_check("state-positivity",
                                    "negative part of the smallest eigenvalue"));

  const std::string steady_desc = "numeric vs closed-form steady-state variances";
  if (!c.include_steady) {
    rep.checks.push_back(skipped("variance-steady", steady_desc, "disabled for this case"));
  } else if (regime.tag != RegimeTag::BelowThreshold) {
    rep.checks.push_back(skipped("variance-steady", steady_desc,
                                 "no steady state " + to_string(regime.tag)));
  } else {
    std::optional<fock::NormalModeState> steady;
    try {
      steady = fock::NormalModeEngine(c.params, engine_options(c, true)).steady_state();
    } catch (const std::exception& e) {
      throw std::runtime_error("case " + c.name + ": Fock steady state failed: " +
                               e.what());
    }
    const fock::NormalModeState& s = *steady;
    MaxTracker ds, unc;
    const double vtol = std::max(tol.variance, tail_bound(s));
    const std::string at = c.name + " steady";
    for (auto kind : {fock::QuadratureKind::TwoModeC, fock::QuadratureKind::SingleModeA}) {
      const bool two = kind == fock::QuadratureKind::TwoModeC;
      const VarianceReport num = fock::quadrature_variance(s, kind, regime);
      const VarianceReport ana = two ? variance_two_mode(c.params, kSteadyState)
                                     : variance_single_mode(c.params, kSteadyState);
      const char* label = two ? " two-mode" : " single-mode";
      ds.add(std::abs(num.v1.value() - ana.v1.value()), vtol, at + label + " v1");
      ds.add(std::abs(num.v2.value() - ana.v2.value()), vtol, at + label + " v2");
      unc.add(std::max(0.0, 1.0 - ana.v1.value() * ana.v2.value()), tol.closed_form,
              at + label);
    }
    rep.checks.push_back(ds.to_check("variance-steady", steady_desc));
    rep.checks.push_back(unc.to_check("uncertainty-steady",
                                      "closed-form steady v1 v2 >= 1"));
    TailDiagnostics t;
    t.case_name = c.name + " steady";
    t.max_tail = s.tail;
    t.n_cut_c = s.frame_c.n_cut;
    t.n_cut_d = s.frame_d.n_cut;
    t.frame_c = s.frame_c.squeeze;
    t.frame_d = s.frame_d.squeeze;
    t.converged = s.tail <= c.fock.tail_tolerance;
    rep.tails.push_back(std::move(t));
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ValidationReport compare_q(const ValidationCase& c) {
  const auto t0 = Clock::now();
  if (c.amplitude_grid.empty()) {
    throw std::invalid_argument("case " + c.name + ": amplitude grid is empty");
  }
  const Tolerances& tol = c.tolerances;
  ValidationReport rep;
  MaxTracker norm;
  for (double t : c.q_times) {
    const auto coeffs = q_coefficients(gaussian_widths(c.params, t));
    norm.add(std::abs(q_normalization(coeffs) - 1.0), tol.q_normalization,
             c.name + " t=" + fmt(t));
  }

  std::vector<double> times{0.0};
  for (double t : c.q_times) {
    if (t > times.back()) times.push_back(t);
  }
  fock::NormalModeRun run;
  try {
    // Husimi samples are taken in the plain number basis.
    run = fock::NormalModeEngine(c.params, engine_options(c, false)).evolve(times);
  } catch (const std::exception& e) {
    throw std::runtime_error("case " + c.name + ": Fock evolution failed: " + e.what());
  }
  add_tail(rep, c, run);

  MaxTracker dq;
  for (const auto& s : run.states) {
    if (std::find(c.q_times.begin(), c.q_times.end(), s.t) == c.q_times.end()) continue;
    const auto coeffs = q_coefficients(gaussian_widths(c.params, s.t));
    for (const auto& alpha : c.amplitude_grid) {
      for (const auto& beta : c.amplitude_grid) {
        const double qa = q_two_mode(coeffs, alpha, beta);
        const double qn = fock::husimi(s, alpha, beta);
        std::ostringstream where;
        where << c.name << " t=" << s.t << " alpha=" << alpha << " beta=" << beta;
        dq.add(std::abs(qa - qn), tol.q_pointwise, where.str());
      }
    }
  }
  if (dq.empty()) {
    Check miss;
    miss.tag = "q-pointwise";
    miss.description = "closed-form Q vs Husimi samples";
    miss.passed = false;
    miss.worst_input = c.name + ": no numeric state reached the Q sample times";
    rep.checks.push_back(miss);
  } else {
    rep.checks.push_back(dq.to_check("q-pointwise", "closed-form Q vs Husimi samples"));
  }
  rep.checks.push_back(norm.to_check(
      "q-normalization", "integral of the closed-form Q from its determinant"));
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ValidationReport run_cases(const std::vector<ValidationCase>& cases,
                           unsigned threads) {
  const auto t0 = Clock::now();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, cases.size()));

  std::vector<ValidationReport> parts(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cases.size(); i = next++) {
      try {
        parts[i] = compare_variances(cases[i]);
        parts[i].merge(compare_q(cases[i]));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ValidationReport out;
  for (size_t i = 0; i < cases.size(); ++i) {
    if (!errors[i].empty()) {
      Check err;
      err.tag = "engine-error";
      err.description = "an engine raised an error";
      err.passed = false;
      err.worst_input = errors[i];
      out.checks.push_back(err);
    }
    const double wall = out.wall_seconds;
    out.merge(parts[i]);
    out.wall_seconds = wall;
  }
  out.wall_seconds = seconds_since(t0);
  return out;
}

}  // namespace ndpo::validation
