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

#include "ndpo/fock/observables.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ndpo::fock {

Complex expectation(const DensityMatrix& rho, const SparseOp& op) {
  const CMatrix& m = rho.matrix();
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < op.outerSize(); ++i) {
    for (SparseOp::InnerIterator it(op, i); it; ++it) {
      acc += it.value() * m(it.col(), i);
    }
  }
  return acc;
}

namespace {

double variance_of(const DensityMatrix& rho, const SparseOp& q) {
  const double mean = expectation(rho, q).real();
  const SparseOp q2 = q * q;
  return expectation(rho, q2).real() - mean * mean;
}

}  // namespace

VarianceReport quadrature_variance(const DensityMatrix& rho, QuadratureKind kind,
                                   const Regime& regime, double tail_tolerance) {
  const ModeLayout& layout = rho.layout();
  if (layout.num_modes() != 2) {
    throw DomainError("quadrature variances need a two-mode state");
  }
  const Complex i(0.0, 1.0);
  SparseOp x;
  switch (kind) {
    case QuadratureKind::SingleModeA:
      x = annihilation(layout, 0);
      break;
    case QuadratureKind::SingleModeB:
      x = annihilation(layout, 1);
      break;
    case QuadratureKind::TwoModeC:
      x = (1.0 / std::numbers::sqrt2) *
          SparseOp(annihilation(layout, 0) + annihilation(layout, 1));
      break;
  }
  const SparseOp xd = SparseOp(x.adjoint());
  const SparseOp q1 = x + xd;
  const SparseOp q2 = i * SparseOp(xd - x);

  VarianceReport report;
  report.v1 = Variance::finite(variance_of(rho, q1));
  report.v2 = Variance::finite(variance_of(rho, q2));
  report.mode_kind =
      kind == QuadratureKind::TwoModeC ? ModeKind::TwoMode : ModeKind::SingleMode;
  report.regime = regime;
  report.source = Source::Numeric;
  const double tail = tail_population(rho);
  if (tail > tail_tolerance) {
    std::ostringstream os;
    os << "top Fock layer population " << tail << " exceeds " << tail_tolerance
       << "; increase n_cut";
    report.warnings.push_back(os.str());
  }
  return report;
}

double mean_photon(const DensityMatrix& rho, int mode) {
  const SparseOp x = annihilation(rho.layout(), mode);
  const SparseOp n = SparseOp(x.adjoint()) * x;
  return expectation(rho, n).real();
}

MeanPhotons mean_photon(const DensityMatrix& rho) {
  if (rho.layout().num_modes() != 2) throw DomainError("mean_photon needs a two-mode state");
  return MeanPhotons{mean_photon(rho, 0), mean_photon(rho, 1)};
}

double tail_population(const DensityMatrix& rho, int mode) {
  const ModeLayout& layout = rho.layout();
  double tail = 0.0;
  for (int k = 0; k < layout.total(); ++k) {
    if (in_top_layer(layout, k, mode)) tail += rho.matrix()(k, k).real();
  }
  return tail;
}

double tail_population(const DensityMatrix& rho) {
  const ModeLayout& layout = rho.layout();
  double tail = 0.0;
  for (int k = 0; k < layout.total(); ++k) {
    if (in_top_layer(layout, k)) tail += rho.matrix()(k, k).real();
  }
  return tail;
}

int coherent_cutoff(std::complex<double> alpha) {
  const double n2 = std::norm(alpha);
  double p = std::exp(-n2);
  double kept = 0.0;
  for (int n = 0; n < 100000; ++n) {
    kept += p;
    if (1.0 - kept < kCoherentTruncation) return n + 1;
    p *= n2 / (n + 1);
  }
  throw DomainError("coherent amplitude too large for a truncated Fock space");
}

CVector coherent_amplitudes(std::complex<double> alpha, int n_cut) {
  const int needed = coherent_cutoff(alpha);
  if (needed > n_cut) {
    std::ostringstream os;
    os << "coherent state |" << alpha.real() << (alpha.imag() < 0 ? "" : "+")
       << alpha.imag() << "i> needs n_cut >= " << needed << " (have " << n_cut
       << ") to keep the truncation loss below " << kCoherentTruncation;
    throw DomainError(os.str());
  }
  CVector c(n_cut);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < n_cut; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
  return c;
}

double husimi(const DensityMatrix& rho, std::complex<double> alpha,
              std::complex<double> beta) {
  const ModeLayout& layout = rho.layout();
  if (layout.num_modes() != 2) throw DomainError("two-mode Husimi needs two modes");
  const CVector ca = coherent_amplitudes(alpha, layout.dim(0));
  const CVector cb = coherent_amplitudes(beta, layout.dim(1));
  CVector psi(layout.total());
  for (int k = 0; k < layout.total(); ++k) {
    psi[k] = ca[layout.occupation(k, 0)] * cb[layout.occupation(k, 1)];
  }
  const Complex q = psi.dot(rho.matrix() * psi);
  return q.real() / (std::numbers::pi * std::numbers::pi);
}

double husimi(const DensityMatrix& rho, std::complex<double> alpha) {
  const ModeLayout& layout = rho.layout();
  if (layout.num_modes() != 1) throw DomainError("single-mode Husimi needs one mode");
  const CVector c = coherent_amplitudes(alpha, layout.dim(0));
  return c.dot(rho.matrix() * c).real() / std::numbers::pi;
}

StateDiagnostics diagnose(const DensityMatrix& rho) {
  const CMatrix& m = rho.matrix();
  StateDiagnostics d;
  d.trace_error = std::abs(rho.trace() - Complex(1.0));
  d.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  d.tail_population = tail_population(rho);
  return d;
}

}  // namespace ndpo::fock
