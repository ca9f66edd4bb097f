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

#include "ndpo/fock/normal_modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ndpo::fock {

ModeProblem::ModeProblem(const SingleModeChannel& channel, ModeFrame frame,
                         std::optional<Regime> regime)
    : channel_(channel),
      frame_(frame),
      liouvillian_(build_single_mode_liouvillian(channel, frame.n_cut, regime,
                                                 frame.squeeze)) {}

DensityMatrix ModeProblem::vacuum() const {
  const int n = frame_.n_cut;
  const ModeLayout layout({n});
  if (frame_.squeeze == 0.0) return DensityMatrix::vacuum(layout);
  // c|0_c> = 0 with c = cosh(s) f - sinh(s) f^dag gives
  // psi_{k+1} = tanh(s) sqrt(k/(k+1)) psi_{k-1} on even levels.
  const double th = std::tanh(frame_.squeeze);
  CVector psi = CVector::Zero(n);
  psi[0] = 1.0;
  for (int k = 1; k + 1 < n; k += 2) {
    psi[k + 1] = th * std::sqrt(double(k) / (k + 1)) * psi[k - 1];
  }
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint(), layout);
}

ModeMoments ModeProblem::moments(const DensityMatrix& rho) const {
  const SparseOp f = annihilation(rho.layout(), 0);
  const SparseOp fd = SparseOp(f.adjoint());
  const Complex i(0.0, 1.0);
  const SparseOp xf = f + fd;
  const SparseOp pf = i * SparseOp(fd - f);
  const double sx = std::exp(-frame_.squeeze);
  const double sp = std::exp(frame_.squeeze);

  const double mx = sx * expectation(rho, xf).real();
  const double mp = sp * expectation(rho, pf).real();
  ModeMoments m;
  m.var_x = sx * sx * expectation(rho, SparseOp(xf * xf)).real() - mx * mx;
  m.var_p = sp * sp * expectation(rho, SparseOp(pf * pf)).real() - mp * mp;
  m.mean = 0.5 * Complex(mx, mp);
  // c^dag c = (X^2 + P^2 - 2)/4.
  m.photons = 0.25 * (m.var_x + m.var_p + mx * mx + mp * mp - 2.0);
  return m;
}

namespace {

struct ModeRun {
  std::vector<DensityMatrix> states;
  std::vector<double> times;
  std::vector<ModeMoments> moments;
  std::vector<double> tails;
  ModeFrame frame;
  std::optional<IntegrationFailure> failure;
  double max_tail = 0.0;
  bool converged = false;
};

// Squeeze parameter that makes a state with these moments isotropic.
std::optional<double> isotropic_frame(const ModeMoments& m) {
  if (!(m.var_x > 0.0 && m.var_p > 0.0)) return std::nullopt;
  const double s = 0.25 * std::log(m.var_p / m.var_x);
  if (!std::isfinite(s)) return std::nullopt;
  return s;
}

ModeFrame grow(const ModeFrame& frame, const FockConfig& cfg) {
  ModeFrame next = frame;
  next.n_cut = std::min(cfg.max_n_cut,
                        static_cast<int>(std::ceil(frame.n_cut * 1.5)));
  return next;
}

std::string describe(const char* name, const ModeFrame& f, double tail) {
  std::ostringstream os;
  os << "mode " << name << ": n_cut=" << f.n_cut << " frame=" << f.squeeze
     << " tail=" << tail;
  return os.str();
}

ModeRun evolve_mode(const SingleModeChannel& channel, const Regime& regime,
                    const std::vector<double>& times,
                    const NormalModeOptions& opts, const char* name,
                    std::vector<std::string>& notes) {
  const FockConfig& cfg = opts.fock;
  ModeFrame frame{cfg.n_cut, 0.0};
  ModeRun run;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const ModeProblem problem(channel, frame, regime);
    run = ModeRun{};
    run.frame = frame;
    const EvolutionResult r =
        evolve(problem.liouvillian(), problem.vacuum(), times, opts.evolve,
               [&](double t, const DensityMatrix& rho) {
                 run.times.push_back(t);
                 run.states.push_back(rho);
                 run.moments.push_back(problem.moments(rho));
                 run.tails.push_back(tail_population(rho));
               });
    run.failure = r.failure;
    for (double t : run.tails) run.max_tail = std::max(run.max_tail, t);
    if (run.failure) run.max_tail = std::max(run.max_tail, opts.evolve.divergence_tail);
    run.converged = !run.failure && run.max_tail <= cfg.tail_tolerance;
    notes.push_back(describe(name, frame, run.max_tail));
    if (run.converged) break;

    ModeFrame next = grow(frame, cfg);
    if (opts.adapt_frame) {
      // Put the frame halfway between the vacuum and the most squeezed
      // state seen, so both ends of the trajectory stay compact.
      double widest = 0.0;
      for (const auto& m : run.moments) {
        if (auto s = isotropic_frame(m); s && std::abs(*s) > std::abs(widest)) {
          widest = *s;
        }
      }
      // A state that leaves the space early underestimates the squeezing.
      if (run.failure) widest *= 1.5;
      next.squeeze = 0.5 * widest;
    }
    if (next.n_cut == frame.n_cut && std::abs(next.squeeze - frame.squeeze) < 1e-3) {
      break;
    }
    frame = next;
  }
  return run;
}

struct ModeSteady {
  DensityMatrix rho{CMatrix::Identity(2, 2) / 2.0, ModeLayout({2})};
  ModeMoments moments;
  ModeFrame frame;
  double tail = 0.0;
};

ModeSteady steady_mode(const SingleModeChannel& channel, const Regime& regime,
                       const NormalModeOptions& opts) {
  const FockConfig& cfg = opts.fock;
  ModeFrame frame{cfg.n_cut, 0.0};
  ModeSteady out;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const ModeProblem problem(channel, frame, regime);
    out.rho = steady_state(problem.liouvillian(), opts.steady);
    out.moments = problem.moments(out.rho);
    out.frame = frame;
    out.tail = tail_population(out.rho);
    if (out.tail <= cfg.tail_tolerance) break;
    ModeFrame next = grow(frame, cfg);
    if (opts.adapt_frame) {
      if (auto s = isotropic_frame(out.moments)) next.squeeze = *s;
    }
    if (next.n_cut == frame.n_cut && std::abs(next.squeeze - frame.squeeze) < 1e-3) {
      break;
    }
    frame = next;
  }
  return out;
}

}  // namespace

NormalModeEngine::NormalModeEngine(const ModelParams& params,
                                   NormalModeOptions opts)
    : params_(params), opts_(std::move(opts)), regime_(classify_regime(params)) {
  if (!params.is_symmetric()) {
    throw UnsupportedConfiguration(
        "the normal-mode solver needs equal damping rates; use the product "
        "basis generator for asymmetric damping");
  }
  validate(opts_.fock);
}

SingleModeChannel NormalModeEngine::channel_c() const {
  const auto [n, m] = params_.reservoir();
  const double s = opts_.fock.pump == PumpConvention::Hamiltonian ? 1.0 : -1.0;
  return SingleModeChannel{params_.gamma_a(), n, m, s * params_.kappa_gamma0()};
}

SingleModeChannel NormalModeEngine::channel_d() const {
  SingleModeChannel ch = channel_c();
  ch.squeeze = -ch.squeeze;
  return ch;
}

NormalModeRun NormalModeEngine::evolve(const std::vector<double>& times) const {
  NormalModeRun out;
  const ModeRun c = evolve_mode(channel_c(), regime_, times, opts_, "c", out.notes);
  const ModeRun d = evolve_mode(channel_d(), regime_, times, opts_, "d", out.notes);

  const size_t count = std::min(c.states.size(), d.states.size());
  for (size_t k = 0; k < count; ++k) {
    NormalModeState s{c.times[k], c.states[k], d.states[k], c.moments[k],
                      d.moments[k], c.frame, d.frame,
                      std::max(c.tails[k], d.tails[k])};
    out.max_tail = std::max(out.max_tail, s.tail);
    out.states.push_back(std::move(s));
  }
  if (c.failure && d.failure) {
    out.failure = c.failure->last_good_time <= d.failure->last_good_time
                      ? c.failure
                      : d.failure;
  } else {
    out.failure = c.failure ? c.failure : d.failure;
  }
  out.max_tail = std::max({out.max_tail, c.max_tail, d.max_tail});
  out.converged = c.converged && d.converged;
  return out;
}

NormalModeState NormalModeEngine::steady_state() const {
  if (regime_.tag != RegimeTag::BelowThreshold) {
    std::ostringstream os;
    os << "no normalizable steady state: parameters are "
       << to_string(regime_.tag);
    throw PhysicalityError(os.str());
  }
  const ModeSteady c = steady_mode(channel_c(), regime_, opts_);
  const ModeSteady d = steady_mode(channel_d(), regime_, opts_);
  return NormalModeState{std::numeric_limits<double>::infinity(),
                         c.rho,
                         d.rho,
                         c.moments,
                         d.moments,
                         c.frame,
                         d.frame,
                         std::max(c.tail, d.tail)};
}

VarianceReport quadrature_variance(const NormalModeState& state,
                                   QuadratureKind kind, const Regime& regime,
                                   double tail_tolerance) {
  VarianceReport report;
  report.regime = regime;
  report.source = Source::Numeric;
  const ModeMoments& c = state.moments_c;
  const ModeMoments& d = state.moments_d;
  if (kind == QuadratureKind::TwoModeC) {
    report.mode_kind = ModeKind::TwoMode;
    report.v1 = Variance::finite(c.var_x);
    report.v2 = Variance::finite(c.var_p);
  } else {
    // a1 = (X_c + X_d)/sqrt2 and b1 = (X_c - X_d)/sqrt2 for a product state.
    report.mode_kind = ModeKind::SingleMode;
    report.v1 = Variance::finite(0.5 * (c.var_x + d.var_x));
    report.v2 = Variance::finite(0.5 * (c.var_p + d.var_p));
  }
  if (state.tail > tail_tolerance) {
    std::ostringstream os;
    os << "top Fock layer population " << state.tail << " exceeds "
       << tail_tolerance << "; increase max_n_cut";
    report.warnings.push_back(os.str());
  }
  return report;
}

double mean_photon(const NormalModeState& state, int mode) {
  if (mode != 0 && mode != 1) throw DomainError("mode index must be 0 or 1");
  const ModeMoments& c = state.moments_c;
  const ModeMoments& d = state.moments_d;
  const double cross = 2.0 * (std::conj(c.mean) * d.mean).real();
  return 0.5 * (c.photons + d.photons + (mode == 0 ? cross : -cross));
}

MeanPhotons mean_photon(const NormalModeState& state) {
  return MeanPhotons{mean_photon(state, 0), mean_photon(state, 1)};
}

double husimi(const NormalModeState& state, Complex alpha, Complex beta) {
  if (state.frame_c.squeeze != 0.0 || state.frame_d.squeeze != 0.0) {
    throw UnsupportedConfiguration(
        "Husimi samples need the plain Fock basis; disable adapt_frame");
  }
  const double r = (1.0 / std::numbers::sqrt2);
  return husimi(state.c, r * (alpha + beta)) * husimi(state.d, r * (alpha - beta));
}

}  // namespace ndpo::fock
