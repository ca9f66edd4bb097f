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

#include <optional>
#include <vector>

#include "ndpo/fock/density_matrix.hpp"
#include "ndpo/model_params.hpp"

namespace ndpo::fock {

/// Superoperator acting on column-stacked density matrices,
/// vec(A rho B) = (B^T kron A) vec(rho). Stored sparse, row-major.
class Liouvillian {
 public:
  Liouvillian(SparseOp matrix, ModeLayout layout,
              std::optional<Regime> regime = std::nullopt);

  const SparseOp& matrix() const { return matrix_; }
  const ModeLayout& layout() const { return layout_; }
  /// Regime of the parameters the generator was built from, if known.
  const std::optional<Regime>& regime() const { return regime_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  CVector apply(const CVector& vec_rho) const { return matrix_ * vec_rho; }
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  SparseOp matrix_;
  ModeLayout layout_;
  std::optional<Regime> regime_;
};

/// One left/right multiplication term coef * A rho B of a master equation.
struct SuperTerm {
  Complex coef;
  SparseOp left;
  SparseOp right;
};

/// Assembles sum_k coef_k (B_k^T kron A_k) directly in row-major order.
SparseOp assemble_superoperator(const std::vector<SuperTerm>& terms, int dim);

/// Two-mode generator in the product basis |n_a, n_b>:
///
///   d rho/dt = s kappa gamma0 [ab - a^dag b^dag, rho]
///            + sum_{X=a,b} gamma_X/2 { (N+1) D[X] + N D[X^dag]
///              + M (2 X^dag rho X^dag + 2 X rho X - X^dag2 rho - rho X^dag2
///                   - X^2 rho - rho X^2) },
///
/// D[X] rho = 2 X rho X^dag - X^dag X rho - rho X^dag X, with s = +1 for
/// PumpConvention::Hamiltonian and -1 for AsPrinted. Asymmetric damping
/// rates are accepted.
Liouvillian build_liouvillian(const ModelParams& params, const FockConfig& cfg);

/// Single-mode generator with a degenerate parametric term
///   (squeeze/2) [c^2 - c^dag2, rho]
/// and the same squeezed-reservoir dissipator as above.
///
/// `frame` selects the Fock basis: the mode operator is written as
/// c = cosh(frame) f - sinh(frame) f^dag and rho is stored in the number
/// basis of f. Then c + c^dag = e^{-frame}(f + f^dag) and
/// i(c^dag - c) = e^{frame} i(f^dag - f). frame = 0 is the plain basis.
struct SingleModeChannel {
  double gamma = 0.0;
  double n = 0.0;
  double m = 0.0;
  double squeeze = 0.0;
};

Liouvillian build_single_mode_liouvillian(const SingleModeChannel& channel,
                                          int n_cut,
                                          std::optional<Regime> regime = {},
                                          double frame = 0.0);

/// The operator c above, truncated to n_cut levels of f.
SparseOp frame_lowering(int n_cut, double frame);

}  // namespace ndpo::fock
