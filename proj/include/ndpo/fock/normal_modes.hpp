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

// Normal-mode solver for symmetric damping. With c = (a + b)/sqrt(2) and
// d = (a - b)/sqrt(2) the two-mode master equation splits exactly into two
// independent single-mode problems,
//
//   d rho_c/dt = (g/2)[c^2 - c^dag2, rho_c] + (squeezed reservoir on c),
//   d rho_d/dt = -(g/2)[d^2 - d^dag2, rho_d] + (squeezed reservoir on d),
//
// with g = s kappa gamma0, and the two-mode vacuum stays a product state.
// Each mode is stored in its own (possibly squeezed) Fock basis so that
// strongly squeezed states near threshold fit into a small cutoff.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ndpo/fock/evolve.hpp"
#include "ndpo/fock/observables.hpp"

namespace ndpo::fock {

/// Fock basis of one normal mode: n_cut levels of the frame operator f with
/// c = cosh(squeeze) f - sinh(squeeze) f^dag.
struct ModeFrame {
  int n_cut = 30;
  double squeeze = 0.0;
};

/// Moments of one normal mode, in the plain (unsqueezed) quadratures
/// X = c + c^dag and P = i(c^dag - c).
struct ModeMoments {
  double var_x = 1.0;
  double var_p = 1.0;
  Complex mean = 0.0;
  double photons = 0.0;
};

/// A single normal mode: generator, basis and observables.
class ModeProblem {
 public:
  ModeProblem(const SingleModeChannel& channel, ModeFrame frame,
              std::optional<Regime> regime);

  const Liouvillian& liouvillian() const { return liouvillian_; }
  const ModeFrame& frame() const { return frame_; }
  /// Vacuum of c written in the frame basis (a squeezed vacuum of f).
  DensityMatrix vacuum() const;
  ModeMoments moments(const DensityMatrix& rho) const;

 private:
  SingleModeChannel channel_;
  ModeFrame frame_;
  Liouvillian liouvillian_;
};

struct NormalModeOptions {
  FockConfig fock;
  /// Pick each mode's squeezed frame from its own computed moments.
  bool adapt_frame = true;
  /// Rounds of cutoff/frame refinement before giving up.
  int max_rounds = 10;
  EvolveOptions evolve;
  SteadyStateOptions steady;
};

/// State of both normal modes at one time.
struct NormalModeState {
  double t = 0.0;
  DensityMatrix c;
  DensityMatrix d;
  ModeMoments moments_c;
  ModeMoments moments_d;
  ModeFrame frame_c;
  ModeFrame frame_d;
  /// Largest top-layer population of the two modes.
  double tail = 0.0;
};

struct NormalModeRun {
  std::vector<NormalModeState> states;
  std::optional<IntegrationFailure> failure;
  /// Largest top-layer population over all stored states.
  double max_tail = 0.0;
  /// True when the refinement loop met the tail tolerance.
  bool converged = false;
  std::vector<std::string> notes;
};

class NormalModeEngine {
 public:
  /// Throws UnsupportedConfiguration for asymmetric damping rates.
  explicit NormalModeEngine(const ModelParams& params,
                            NormalModeOptions opts = {});

  const ModelParams& params() const { return params_; }
  const NormalModeOptions& options() const { return opts_; }
  SingleModeChannel channel_c() const;
  SingleModeChannel channel_d() const;

  /// Evolves the vacuum over `times` (starting at 0), refining each mode's
  /// cutoff and frame until its top-layer population stays below the tail
  /// tolerance or max_n_cut is reached.
  NormalModeRun evolve(const std::vector<double>& times) const;

  /// Stationary state with the same refinement. Throws PhysicalityError
  /// unless below threshold.
  NormalModeState steady_state() const;

 private:
  ModelParams params_;
  NormalModeOptions opts_;
  Regime regime_;
};

/// Quadrature variances of the original modes reconstructed from the
/// normal-mode state.
VarianceReport quadrature_variance(const NormalModeState& state,
                                   QuadratureKind kind, const Regime& regime = {},
                                   double tail_tolerance = 1e-6);

/// <a^dag a> (mode 0) or <b^dag b> (mode 1).
double mean_photon(const NormalModeState& state, int mode);
MeanPhotons mean_photon(const NormalModeState& state);

/// Two-mode Husimi Q(alpha, beta) = Q_c((alpha+beta)/sqrt2) Q_d((alpha-beta)/sqrt2).
/// Both frames must be plain.
double husimi(const NormalModeState& state, Complex alpha, Complex beta);

}  // namespace ndpo::fock
