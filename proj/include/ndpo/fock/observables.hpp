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

#pragma once

#include <complex>
#include <vector>

#include "ndpo/analytic_gaussian.hpp"
#include "ndpo/fock/density_matrix.hpp"

namespace ndpo::fock {

/// Which pair of quadratures to report. Single-mode pairs use
/// a1 = a + a^dag, a2 = i(a^dag - a); the two-mode pair uses
/// c_{1,2} = (a_{1,2} + b_{1,2})/sqrt(2). Vacuum variance is 1.
enum class QuadratureKind { SingleModeA, SingleModeB, TwoModeC };

/// tr(rho op).
Complex expectation(const DensityMatrix& rho, const SparseOp& op);

/// Quadrature variances of a two-mode product-basis state. Adds a warning
/// when the top-layer population exceeds `tail_tolerance`.
VarianceReport quadrature_variance(const DensityMatrix& rho, QuadratureKind kind,
                                   const Regime& regime = {},
                                   double tail_tolerance = 1e-6);

/// <X^dag X> of one mode.
double mean_photon(const DensityMatrix& rho, int mode);

struct MeanPhotons {
  double n_a = 0.0;
  double n_b = 0.0;
};

/// <a^dag a> and <b^dag b> of a two-mode state.
MeanPhotons mean_photon(const DensityMatrix& rho);

/// Population of states in which `mode` lies in its top layer.
double tail_population(const DensityMatrix& rho, int mode);
/// Population of states in which any mode lies in its top layer.
double tail_population(const DensityMatrix& rho);

/// Smallest cutoff whose truncated coherent state |alpha> loses less than
/// kCoherentTruncation of its norm.
inline constexpr double kCoherentTruncation = 1e-8;
int coherent_cutoff(std::complex<double> alpha);

/// Truncated coherent-state amplitudes e^{-|a|^2/2} a^n / sqrt(n!), n < n_cut.
/// Throws DomainError naming the required cutoff when the truncation loss
/// exceeds kCoherentTruncation.
CVector coherent_amplitudes(std::complex<double> alpha, int n_cut);

/// Husimi function <alpha, beta| rho |alpha, beta> / pi^2 of a two-mode state.
double husimi(const DensityMatrix& rho, std::complex<double> alpha,
              std::complex<double> beta);
/// Husimi function <alpha| rho |alpha> / pi of a single-mode state.
double husimi(const DensityMatrix& rho, std::complex<double> alpha);

struct StateDiagnostics {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double tail_population = 0.0;
};

/// |tr rho - 1|, max |rho - rho^dag|, smallest eigenvalue of the Hermitian
/// part and the top-layer population.
StateDiagnostics diagnose(const DensityMatrix& rho);

}  // namespace ndpo::fock
