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

#include <cmath>
#include <numbers>
#include <sstream>

#include "ndpo/analytic_gaussian.hpp"

namespace ndpo {

namespace {

// One axis of the Fokker-Planck kernel: dQ/dt = (D/2) Q'' + (k/2)(z Q)'
// transports z' to z' e^{-kt/2} and spreads it with the given variance.
struct Axis {
  double shrink;
  double variance;
};

double axis_density(const Axis& ax, double from, double to) {
  const double mean = from * ax.shrink;
  const double d = to - mean;
  return std::exp(-d * d / (2.0 * ax.variance)) /
         std::sqrt(2.0 * std::numbers::pi * ax.variance);
}

void require_positive_variance(double variance, const char* axis) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    std::ostringstream os;
    os << "propagator has no normalizable kernel along " << axis
       << " (variance " << variance << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

double q_propagator(const ModelParams& params, double t, const PhasePoint& from,
                    const PhasePoint& to) {
  if (!std::isfinite(t) || t <= 0.0) {
    std::ostringstream os;
    os << "propagator requires t > 0, got " << t
       << " (the t = 0 kernel is a delta distribution)";
    throw DomainError(os.str());
  }
  const LambdaCoeffs l = lambda_coeffs(params);
  if (l.l6 * t > detail::kMaxExponent) {
    throw DomainError("propagator overflows at this time");
  }
  // (x, y): drift rate l5, diffusion l1/4 and l2/4.
  const double s5 = t * detail::expm1_over(-l.l5 * t);
  // (u, v): drift rate -l6, diffusion -l3/4 and -l4/4.
  const double s6 = t * detail::expm1_over(l.l6 * t);
  const Axis x{std::exp(-0.5 * l.l5 * t), 0.25 * l.l1 * s5};
  const Axis y{x.shrink, 0.25 * l.l2 * s5};
  const Axis u{std::exp(0.5 * l.l6 * t), -0.25 * l.l3 * s6};
  const Axis v{u.shrink, -0.25 * l.l4 * s6};
  require_positive_variance(x.variance, "x");
  require_positive_variance(y.variance, "y");
  require_positive_variance(u.variance, "u");
  require_positive_variance(v.variance, "v");
  return axis_density(x, from.x, to.x) * axis_density(y, from.y, to.y) *
         axis_density(u, from.u, to.u) * axis_density(v, from.v, to.v);
}

}  // namespace ndpo
