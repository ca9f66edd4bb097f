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

#include "ndpo/fock/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ndpo::fock {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th- and embedded 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;

void hermitize(CVector& y, Eigen::Index n) {
  Eigen::Map<CMatrix> m(y.data(), n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    m(j, j) = Complex(m(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
}

double top_layer_population(const CVector& y, const ModeLayout& layout) {
  const Eigen::Index n = layout.total();
  double tail = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (in_top_layer(layout, static_cast<int>(i))) tail += y[i + i * n].real();
  }
  return tail;
}

double weighted_rms(const CVector& err, const CVector& y0, const CVector& y1,
                    const EvolveOptions& opts) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        opts.abs_tol + opts.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double q = std::abs(err[i]) / scale;
    acc += q * q;
  }
  return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

EvolutionResult evolve(const Liouvillian& L, const DensityMatrix& rho0,
                       const std::vector<double>& t_grid,
                       const EvolveOptions& opts,
                       const EvolutionObserver& observer) {
  if (!(rho0.layout() == L.layout())) {
    throw DomainError("initial state and generator use different Fock spaces");
  }
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw DomainError("time grid must be non-empty and start at 0");
  }
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw DomainError("time grid must be nondecreasing");
  }

  const ModeLayout& layout = L.layout();
  const Eigen::Index n = layout.total();
  const SparseOp& A = L.matrix();
  EvolutionResult result;
  auto& stats = result.stats;

  CVector y = rho0.vectorized();
  CVector k1 = A * y;
  ++stats.rhs_evaluations;
  CVector k2(y.size()), k3(y.size()), k4(y.size()), k5(y.size()),
      k6(y.size()), k7(y.size()), tmp(y.size()), y_new(y.size()),
      err(y.size());

  const double span = t_grid.back() - t_grid.front();
  const double min_step = std::max(opts.min_step_rel * span, 1e-300);
  double h = opts.initial_step;
  if (h <= 0.0) {
    // Rough inverse of the generator's largest rate.
    double max_row = 0.0;
    for (Eigen::Index r = 0; r < A.outerSize(); ++r) {
      double s = 0.0;
      for (SparseOp::InnerIterator it(A, r); it; ++it) s += std::abs(it.value());
      max_row = std::max(max_row, s);
    }
    h = max_row > 0.0 ? 0.5 / max_row : span;
  }

  double t = 0.0;
  observer(t, DensityMatrix::from_vectorized(y, layout));
  for (size_t g = 1; g < t_grid.size(); ++g) {
    const double target = t_grid[g];
    while (t < target) {
      if (stats.accepted_steps + stats.rejected_steps >= opts.max_steps) {
        result.failure = IntegrationFailure{t, "step budget exhausted"};
        return result;
      }
      const bool last = t + h >= target;
      const double step = last ? target - t : h;

      tmp = y + step * a21 * k1;
      k2.noalias() = A * tmp;
      tmp = y + step * (a31 * k1 + a32 * k2);
      k3.noalias() = A * tmp;
      tmp = y + step * (a41 * k1 + a42 * k2 + a43 * k3);
      k4.noalias() = A * tmp;
      tmp = y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      k5.noalias() = A * tmp;
      tmp = y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      k6.noalias() = A * tmp;
      y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      k7.noalias() = A * y_new;
      stats.rhs_evaluations += 6;
      err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      const double en = weighted_rms(err, y, y_new, opts);

      if (!std::isfinite(en)) {
        result.failure = IntegrationFailure{t, "non-finite state encountered"};
        return result;
      }
      if (en <= 1.0) {
        ++stats.accepted_steps;
        t = last ? target : t + step;
        y.swap(y_new);
        if (opts.resymmetrize) {
          hermitize(y, n);
          k1.noalias() = A * y;
          ++stats.rhs_evaluations;
        } else {
          k1.swap(k7);
        }
        const double tail = top_layer_population(y, layout);
        if (tail > opts.divergence_tail) {
          std::ostringstream os;
          os << "top Fock layer population " << tail
             << " exceeds the divergence limit; the state is leaving the "
                "truncated space";
          result.failure = IntegrationFailure{t, os.str()};
          return result;
        }
        const double factor =
            en == 0.0 ? kMaxFactor
                      : std::clamp(kSafety * std::pow(en, -0.2), kMinFactor,
                                   kMaxFactor);
        // Keep the natural step when the last one was clipped to the grid.
        if (!last || step >= h) h = step * factor;
      } else {
        ++stats.rejected_steps;
        h = step * std::max(kMinFactor, kSafety * std::pow(en, -0.2));
      }
      if (h < min_step) {
        std::ostringstream os;
        os << "step size underflow (h = " << h
           << "); the generator is too stiff or the state diverges";
        result.failure = IntegrationFailure{t, os.str()};
        return result;
      }
    }
    observer(t, DensityMatrix::from_vectorized(y, layout));
  }
  return result;
}

EvolutionResult evolve(const Liouvillian& L, const DensityMatrix& rho0,
                       const std::vector<double>& t_grid,
                       const EvolveOptions& opts) {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  EvolutionResult result =
      evolve(L, rho0, t_grid, opts, [&](double t, const DensityMatrix& rho) {
        times.push_back(t);
        states.push_back(rho);
      });
  result.times = std::move(times);
  result.states = std::move(states);
  return result;
}

}  // namespace ndpo::fock
