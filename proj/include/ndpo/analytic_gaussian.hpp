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

// Closed-form Gaussian solution of the Q-function Fokker-Planck equation for
// the nondegenerate parametric oscillator with squeezed vacuum reservoirs.
//
// Phase-space conventions. With alpha = x1 + i y1 and beta = x2 + i y2 the
// rotated coordinates are
//
//   x = (x1 + x2)/2,  y = (y1 - y2)/2,  u = (x1 - x2)/2,  v = (y1 + y2)/2,
//
// and the Q-function in these coordinates is a product of four centred
// Gaussians with variances a_i/4. Quadrature variances use the convention in
// which the vacuum has variance 1, i.e. [c1, c2] = 2i.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ndpo/model_params.hpp"

namespace ndpo {

/// Tag type that requests the t -> infinity limit.
struct SteadyState {};
inline constexpr SteadyState kSteadyState{};

/// A variance that is either a finite value or explicitly divergent.
/// Divergence is never encoded as a floating-point infinity.
class Variance {
 public:
  static Variance finite(double value);
  static Variance divergent() { return Variance(); }

  bool is_divergent() const { return divergent_; }
  /// Throws std::logic_error when divergent.
  double value() const;

  friend bool operator==(const Variance&, const Variance&) = default;

 private:
  Variance() = default;
  explicit Variance(double v) : value_(v), divergent_(false) {}

  double value_ = 0.0;
  bool divergent_ = true;
};

enum class ModeKind { SingleMode, TwoMode };
enum class Source { Analytic, Numeric };

std::string to_string(ModeKind kind);
std::string to_string(Source source);

struct VarianceReport {
  Variance v1 = Variance::divergent();
  Variance v2 = Variance::divergent();
  ModeKind mode_kind = ModeKind::TwoMode;
  Regime regime;
  Source source = Source::Analytic;
  std::vector<std::string> warnings;
};

struct GaussianWidths {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;
  double a4 = 1.0;
};

/// Width coefficients a1..a4 at time t >= 0 for symmetric parameters.
/// Removable singularities at zero drift rate are evaluated by series.
/// Throws DomainError for t < 0 or when a growing exponential would overflow
/// (use the steady-state operations instead).
GaussianWidths gaussian_widths(const ModelParams& params, double t);

/// Steady-state widths lambda_{1,2}/lambda_5 and lambda_{3,4}/lambda_6.
/// Below threshold only; throws DomainError otherwise.
GaussianWidths gaussian_widths(const ModelParams& params, SteadyState);

/// Coefficients of the two-mode Q-function
///   Q = (d/pi^2) exp[-b1(|a|^2+|b|^2) + b2(ab + a*b*) + b3(ab* + a*b)
///                    + (b4/2)(a^2 + a*^2 + b^2 + b*^2)].
struct QCoefficients {
  double d = 1.0;
  double b1 = 1.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double b4 = 0.0;
};

QCoefficients q_coefficients(const GaussianWidths& w);

double q_two_mode(const QCoefficients& c, std::complex<double> alpha,
                  std::complex<double> beta);

/// Integral of q_two_mode over both complex planes, computed from the
/// determinant of the real quadratic form. Equals 1 for any valid widths.
double q_normalization(const QCoefficients& c);

/// Marginal Q-function of mode a:
///   Q(alpha) = d/(pi sqrt(y)) exp[-a |alpha|^2 + (A/2)(alpha^2 + alpha*^2)].
struct SingleModeQ {
  double y = 1.0;
  double a = 1.0;
  double a_cap = 0.0;
  double d = 1.0;
};

/// Integrates the two-mode Gaussian over beta. Throws DomainError when
/// b1^2 - b4^2 <= 0 (degenerate marginal).
SingleModeQ q_single_mode(const QCoefficients& c);

double q_single_mode_density(const SingleModeQ& q, std::complex<double> alpha);

/// Real phase-space point in the rotated (x, y, u, v) coordinates.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
  double v = 0.0;
};

PhasePoint to_phase_point(std::complex<double> alpha, std::complex<double> beta);
std::pair<std::complex<double>, std::complex<double>> to_amplitudes(
    const PhasePoint& p);

/// Q-function density over (x, y, u, v), including the Jacobian factor 4 of
/// the change of variables (so it integrates to 1 over R^4).
double q_rotated(const GaussianWidths& w, const PhasePoint& p);

/// Transition kernel of the Fokker-Planck equation from `from` at time 0 to
/// `to` at time t > 0, as a density over the target point. Factorizes into
/// four one-dimensional Ornstein-Uhlenbeck kernels. Throws DomainError for
/// t <= 0 or when a diffusion coefficient has the wrong sign (no normalizable
/// kernel, which happens only above threshold).
double q_propagator(const ModelParams& params, double t, const PhasePoint& from,
                    const PhasePoint& to);

/// Single-mode quadrature variances (a1 = a + a^dag, a2 = i(a^dag - a)).
VarianceReport variance_single_mode(const ModelParams& params, double t);
VarianceReport variance_single_mode(const ModelParams& params, SteadyState);

/// Onset squeezing parameter r* = -ln[1 - (2 kappa gamma0/gamma)^2]/2 above
/// which the steady single-mode variance v1 drops below 1. Below threshold
/// only; throws DomainError otherwise.
double squeezing_onset_r(const ModelParams& params);

/// Two-mode quadrature variances of c_{1,2} = (a_{1,2} + b_{1,2})/sqrt(2).
VarianceReport variance_two_mode(const ModelParams& params, double t);
VarianceReport variance_two_mode(const ModelParams& params, SteadyState);

/// Percent noise reduction below the vacuum level, 100 (1 - v).
double squeezing_percent(double variance);

namespace detail {
/// expm1(z)/z with the removable singularity at 0 filled in.
double expm1_over(double z);
/// Largest exponent accepted before an exponential would overflow.
inline constexpr double kMaxExponent = 700.0;
}  // namespace detail

}  // namespace ndpo
