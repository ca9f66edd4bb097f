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

#include "ndpo/analytic_gaussian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ndpo {

namespace detail {

double expm1_over(double z) {
  // Below 1e-8 the second-order series is exact to double precision.
  if (std::abs(z) < 1e-8) return 1.0 + z / 2.0 + z * z / 6.0;
  return std::expm1(z) / z;
}

}  // namespace detail

namespace {

using detail::expm1_over;
using detail::kMaxExponent;
constexpr double kPi = std::numbers::pi;

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    std::ostringstream os;
    os << "time must be finite and >= 0, got " << t;
    throw DomainError(os.str());
  }
}

void require_no_overflow(double exponent, double t) {
  if (exponent > kMaxExponent) {
    std::ostringstream os;
    os << "growing mode overflows at t = " << t
       << "; request the steady state instead of a large finite time";
    throw DomainError(os.str());
  }
}

double steady_gamma(const ModelParams& params, const char* what) {
  const double g = params.gamma(what);
  if (g <= 0.0) {
    throw DomainError(std::string(what) +
                      ": steady state is undefined without damping (gamma = 0)");
  }
  return g;
}

}  // namespace

Variance Variance::finite(double value) {
  if (!std::isfinite(value)) {
    throw std::logic_error("Variance::finite called with a non-finite value");
  }
  return Variance(value);
}

double Variance::value() const {
  if (divergent_) throw std::logic_error("variance is divergent");
  return value_;
}

std::string to_string(ModeKind kind) {
  return kind == ModeKind::SingleMode ? "single_mode" : "two_mode";
}

std::string to_string(Source source) {
  return source == Source::Analytic ? "analytic" : "numeric";
}

GaussianWidths gaussian_widths(const ModelParams& params, double t) {
  require_time(t);
  const LambdaCoeffs l = lambda_coeffs(params);
  // a_{1,2} relax with rate l5 >= 0; a_{3,4} with rate -l6, which turns
  // into growth above threshold.
  require_no_overflow(l.l6 * t, t);
  const double decay = std::exp(-l.l5 * t);
  const double grow = std::exp(l.l6 * t);
  const double s5 = t * expm1_over(-l.l5 * t);
  const double s6 = t * expm1_over(l.l6 * t);
  return {
      decay + l.l1 * s5,
      decay + l.l2 * s5,
      grow - l.l3 * s6,
      grow - l.l4 * s6,
  };
}

GaussianWidths gaussian_widths(const ModelParams& params, SteadyState) {
  steady_gamma(params, "steady-state widths");
  if (classify_regime(params).tag != RegimeTag::BelowThreshold) {
    throw DomainError("steady-state widths exist only below threshold");
  }
  const LambdaCoeffs l = lambda_coeffs(params);
  return {l.l1 / l.l5, l.l2 / l.l5, l.l3 / l.l6, l.l4 / l.l6};
}

QCoefficients q_coefficients(const GaussianWidths& w) {
  for (double a : {w.a1, w.a2, w.a3, w.a4}) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      std::ostringstream os;
      os << "Gaussian widths must be finite and positive, got " << a;
      throw DomainError(os.str());
    }
  }
  const double p1 = 1.0 / w.a1;
  const double p2 = 1.0 / w.a2;
  const double p3 = 1.0 / w.a3;
  const double p4 = 1.0 / w.a4;
  return {
      1.0 / std::sqrt(w.a1 * w.a2 * w.a3 * w.a4),
      0.25 * (p1 + p2 + p3 + p4),
      0.25 * (-p1 - p2 + p3 + p4),
      0.25 * (-p1 + p2 + p3 - p4),
      0.25 * (-p1 + p2 - p3 + p4),
  };
}

double q_two_mode(const QCoefficients& c, std::complex<double> alpha,
                  std::complex<double> beta) {
  const double exponent = -c.b1 * (std::norm(alpha) + std::norm(beta)) +
                          2.0 * c.b2 * std::real(alpha * beta) +
                          2.0 * c.b3 * std::real(alpha * std::conj(beta)) +
                          c.b4 * std::real(alpha * alpha + beta * beta);
  return c.d / (kPi * kPi) * std::exp(exponent);
}

double q_normalization(const QCoefficients& c) {
  // The exponent is -z^T K z with z = (x1, x2 | y1, y2); K splits into an
  // x-block and a y-block.
  const double kxx = c.b1 - c.b4;
  const double kxy = -(c.b2 + c.b3);
  const double kyy = c.b1 + c.b4;
  const double kyx = c.b2 - c.b3;
  const double det_x = kxx * kxx - kxy * kxy;
  const double det_y = kyy * kyy - kyx * kyx;
  if (!(kxx > 0.0 && kyy > 0.0 && det_x > 0.0 && det_y > 0.0)) {
    throw DomainError("Q-function quadratic form is not negative definite");
  }
  return c.d / std::sqrt(det_x * det_y);
}

SingleModeQ q_single_mode(const QCoefficients& c) {
  const double y = c.b1 * c.b1 - c.b4 * c.b4;
  if (!(y > 0.0) || !(c.b1 > 0.0)) {
    std::ostringstream os;
    os << "degenerate single-mode marginal: b1^2 - b4^2 = " << y;
    throw DomainError(os.str());
  }
  const double cross = c.b2 * c.b2 + c.b3 * c.b3;
  const double prod = c.b2 * c.b3;
  return {
      y,
      c.b1 - (c.b1 * cross + 2.0 * prod * c.b4) / y,
      c.b4 + (2.0 * c.b1 * prod + c.b4 * cross) / y,
      c.d,
  };
}

double q_single_mode_density(const SingleModeQ& q, std::complex<double> alpha) {
  const double exponent =
      -q.a * std::norm(alpha) + q.a_cap * std::real(alpha * alpha);
  return q.d / (kPi * std::sqrt(q.y)) * std::exp(exponent);
}

PhasePoint to_phase_point(std::complex<double> alpha,
                          std::complex<double> beta) {
  const double x1 = alpha.real();
  const double y1 = alpha.imag();
  const double x2 = beta.real();
  const double y2 = beta.imag();
  return {0.5 * (x1 + x2), 0.5 * (y1 - y2), 0.5 * (x1 - x2), 0.5 * (y1 + y2)};
}

std::pair<std::complex<double>, std::complex<double>> to_amplitudes(
    const PhasePoint& p) {
  return {{p.x + p.u, p.y + p.v}, {p.x - p.u, p.v - p.y}};
}

double q_rotated(const GaussianWidths& w, const PhasePoint& p) {
  const double norm = 4.0 / (kPi * kPi * std::sqrt(w.a1 * w.a2 * w.a3 * w.a4));
  return norm * std::exp(-2.0 * p.x * p.x / w.a1 - 2.0 * p.y * p.y / w.a2 -
                         2.0 * p.u * p.u / w.a3 - 2.0 * p.v * p.v / w.a4);
}

VarianceReport variance_single_mode(const ModelParams& params, double t) {
  const GaussianWidths w = gaussian_widths(params, t);
  VarianceReport rep;
  rep.v1 = Variance::finite(w.a1 + w.a3 - 1.0);
  rep.v2 = Variance::finite(w.a2 + w.a4 - 1.0);
  rep.mode_kind = ModeKind::SingleMode;
  rep.regime = classify_regime(params);
  return rep;
}

VarianceReport variance_single_mode(const ModelParams& params, SteadyState) {
  const double g = steady_gamma(params, "single-mode steady state");
  VarianceReport rep;
  rep.mode_kind = ModeKind::SingleMode;
  rep.regime = classify_regime(params);
  if (rep.regime.tag == RegimeTag::BelowThreshold) {
    const double q = 2.0 * params.kappa_gamma0() / g;
    const double denom = 1.0 - q * q;
    rep.v1 = Variance::finite(std::exp(-2.0 * params.r()) / denom);
    rep.v2 = Variance::finite(std::exp(2.0 * params.r()) / denom);
  } else {
    rep.warnings.push_back(
        "single-mode steady state diverges at and above threshold");
  }
  return rep;
}

double squeezing_onset_r(const ModelParams& params) {
  const double g = steady_gamma(params, "squeezing onset");
  if (classify_regime(params).tag != RegimeTag::BelowThreshold) {
    throw DomainError("no finite squeezing onset at or above threshold");
  }
  const double q = 2.0 * params.kappa_gamma0() / g;
  return -0.5 * std::log1p(-q * q);
}

VarianceReport variance_two_mode(const ModelParams& params, double t) {
  require_time(t);
  const double g = params.gamma("two-mode variance");
  const double k = params.kappa_gamma0();
  const double r = params.r();
  const double rate_sq = g + 2.0 * k;   // decay rate of c1 fluctuations
  const double rate_anti = g - 2.0 * k; // decay rate of c2 fluctuations
  require_no_overflow(-rate_anti * t, t);
  // 1 - [1 - e^{-rt}][1 - g e^{-+2r}/rate], rearranged to stay finite at
  // rate = 0.
  const double v1 = std::exp(-rate_sq * t) +
                    g * std::exp(-2.0 * r) * t * expm1_over(-rate_sq * t);
  const double v2 = std::exp(-rate_anti * t) +
                    g * std::exp(2.0 * r) * t * expm1_over(-rate_anti * t);
  VarianceReport rep;
  rep.v1 = Variance::finite(v1);
  rep.v2 = Variance::finite(v2);
  rep.mode_kind = ModeKind::TwoMode;
  rep.regime = classify_regime(params);
  return rep;
}

VarianceReport variance_two_mode(const ModelParams& params, SteadyState) {
  const double g = steady_gamma(params, "two-mode steady state");
  const double k = params.kappa_gamma0();
  const double r = params.r();
  VarianceReport rep;
  rep.mode_kind = ModeKind::TwoMode;
  rep.regime = classify_regime(params);
  rep.v1 = Variance::finite(g / (g + 2.0 * k) * std::exp(-2.0 * r));
  if (rep.regime.tag == RegimeTag::BelowThreshold) {
    rep.v2 = Variance::finite(g / (g - 2.0 * k) * std::exp(2.0 * r));
  } else {
    rep.warnings.push_back("anti-squeezed quadrature diverges at and above threshold");
  }
  return rep;
}

double squeezing_percent(double variance) { return 100.0 * (1.0 - variance); }

}  // namespace ndpo
