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

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ndpo::fock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseOp = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Which sign the parametric interaction carries in the master equation.
/// Hamiltonian: -i[H, rho] for H = i kappa gamma0 (ab - a^dag b^dag), which
/// squeezes c1 = (a1 + b1)/sqrt(2). AsPrinted: the opposite commutator sign,
/// which squeezes c2 instead; kept for comparison.
enum class PumpConvention { Hamiltonian, AsPrinted };

struct FockConfig {
  /// Photon-number cutoff per mode; states |n> with 0 <= n < n_cut.
  int n_cut = 30;
  /// Largest acceptable population of the top Fock layer (see kTopLayerDepth).
  double tail_tolerance = 1e-6;
  /// Upper bound for automatic cutoff escalation.
  int max_n_cut = 400;
  PumpConvention pump = PumpConvention::Hamiltonian;
};

/// Throws ndpo::DomainError (config error) when n_cut < 2 or the tolerance
/// is not in (0, 1).
void validate(const FockConfig& cfg);

/// Tensor-product layout of the truncated Fock space. Basis index of
/// |n_0, n_1, ...> is row-major in the mode order (the last mode is fastest).
class ModeLayout {
 public:
  ModeLayout() = default;
  explicit ModeLayout(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int num_modes() const { return static_cast<int>(dims_.size()); }
  int dim(int mode) const { return dims_.at(static_cast<size_t>(mode)); }
  /// Product of all mode dimensions.
  int total() const { return total_; }
  /// Occupation of `mode` in basis state `index`.
  int occupation(int index, int mode) const;

  friend bool operator==(const ModeLayout&, const ModeLayout&) = default;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

/// Number of highest Fock levels per mode that form the "top layer" used as
/// the truncation diagnostic. Two levels, because quadratic generators
/// started from the vacuum populate only even photon numbers of a mode.
inline constexpr int kTopLayerDepth = 2;

/// True when some mode of basis state `index` lies in its top layer.
bool in_top_layer(const ModeLayout& layout, int index);
/// True when `mode` of basis state `index` lies in its top layer.
bool in_top_layer(const ModeLayout& layout, int index, int mode);

/// Truncated annihilation operator of `mode`, embedded in the full layout.
SparseOp annihilation(const ModeLayout& layout, int mode);
SparseOp identity(const ModeLayout& layout);

/// Density operator on a truncated Fock space.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix rho, ModeLayout layout);

  static DensityMatrix vacuum(const ModeLayout& layout);
  /// Projector onto the Fock state with the given occupations.
  static DensityMatrix fock_state(const ModeLayout& layout,
                                  const std::vector<int>& occupation);
  /// Inverse of vectorized(): column-stacked vec(rho).
  static DensityMatrix from_vectorized(const CVector& vec,
                                       const ModeLayout& layout);

  const CMatrix& matrix() const { return rho_; }
  const ModeLayout& layout() const { return layout_; }
  int dim() const { return layout_.total(); }

  /// Column-stacking vectorization: vec[i + j * dim] = rho(i, j).
  CVector vectorized() const;

  Complex trace() const { return rho_.trace(); }

 private:
  CMatrix rho_;
  ModeLayout layout_;
};

}  // namespace ndpo::fock
