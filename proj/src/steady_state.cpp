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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/SparseLU>

#include "ndpo/fock/evolve.hpp"

namespace ndpo::fock {

namespace {

double inf_norm(const SparseOp& A) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < A.outerSize(); ++r) {
    double s = 0.0;
    for (SparseOp::InnerIterator it(A, r); it; ++it) s += std::abs(it.value());
    best = std::max(best, s);
  }
  return best;
}

// Indices connected to any diagonal element vec(rho)[i (d + 1)], in
// increasing order, with the (0, 0) element first.
std::vector<Eigen::Index> diagonal_component(const SparseOp& A, Eigen::Index d) {
  const Eigen::Index n = A.rows();
  const SparseOp At = A.transpose();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<Eigen::Index> stack;
  for (Eigen::Index i = 0; i < d; ++i) {
    seen[i * (d + 1)] = 1;
    stack.push_back(i * (d + 1));
  }
  while (!stack.empty()) {
    const Eigen::Index r = stack.back();
    stack.pop_back();
    for (const SparseOp* op : {&A, &At}) {
      for (SparseOp::InnerIterator it(*op, r); it; ++it) {
        if (!seen[it.col()]) {
          seen[it.col()] = 1;
          stack.push_back(it.col());
        }
      }
    }
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (seen[k]) keep.push_back(k);
  }
  return keep;
}

}  // namespace

DensityMatrix steady_state(const Liouvillian& L, const SteadyStateOptions& opts) {
  if (L.regime() && L.regime()->tag != RegimeTag::BelowThreshold) {
    std::ostringstream os;
    os << "no normalizable steady state: the generator is "
       << to_string(L.regime()->tag) << " (gamma - 2 kappa gamma0 = "
       << L.regime()->margin << ")";
    throw PhysicalityError(os.str());
  }
  const SparseOp& A = L.matrix();
  const Eigen::Index d = L.layout().total();
  const Eigen::Index n = A.rows();

  // The generator is block diagonal over the connected components of its
  // sparsity graph; a trace-one solution lives on the components that touch
  // the diagonal of rho, so only those are solved for.
  const std::vector<Eigen::Index> keep = diagonal_component(A, d);
  std::vector<Eigen::Index> position(static_cast<size_t>(n), -1);
  for (size_t k = 0; k < keep.size(); ++k) position[keep[k]] = static_cast<Eigen::Index>(k);
  const auto m = static_cast<Eigen::Index>(keep.size());

  // Row 0 is the balance equation for rho(0, 0); swap it for tr rho = 1.
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<size_t>(A.nonZeros() + d));
  for (Eigen::Index k = 1; k < m; ++k) {
    for (SparseOp::InnerIterator it(A, keep[k]); it; ++it) {
      entries.emplace_back(k, position[it.col()], it.value());
    }
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    entries.emplace_back(0, position[i * (d + 1)], 1.0);
  }
  Eigen::SparseMatrix<Complex, Eigen::ColMajor> M(m, m);
  M.setFromTriplets(entries.begin(), entries.end());
  M.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<Complex, Eigen::ColMajor>,
                  Eigen::COLAMDOrdering<int>>
      lu;
  lu.analyzePattern(M);
  lu.factorize(M);
  if (lu.info() != Eigen::Success) {
    throw PhysicalityError(
        "steady-state system is singular; the stationary state is not unique "
        "in the truncated space (" + lu.lastErrorMessage() + ")");
  }
  CVector rhs = CVector::Zero(m);
  rhs[0] = 1.0;
  const CVector sol = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !sol.allFinite()) {
    throw PhysicalityError("steady-state solve failed");
  }
  CVector x = CVector::Zero(n);
  for (Eigen::Index k = 0; k < m; ++k) x[keep[k]] = sol[k];

  // Hermitize and renormalize before checking the residual.
  Eigen::Map<CMatrix> rho(x.data(), d, d);
  CMatrix herm = 0.5 * (rho + rho.adjoint());
  herm /= herm.trace().real();
  DensityMatrix out(std::move(herm), L.layout());

  const CVector v = out.vectorized();
  const double denom = inf_norm(A) * v.cwiseAbs().maxCoeff();
  const double residual = (A * v).cwiseAbs().maxCoeff() / denom;
  if (!(residual <= opts.residual_tol)) {
    std::ostringstream os;
    os << "steady-state residual " << residual << " exceeds tolerance "
       << opts.residual_tol;
    throw PhysicalityError(os.str());
  }
  return out;
}

}  // namespace ndpo::fock
