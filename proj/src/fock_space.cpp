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
#include <sstream>

#include "ndpo/fock/density_matrix.hpp"
#include "ndpo/model_params.hpp"

namespace ndpo::fock {

void validate(const FockConfig& cfg) {
  if (cfg.n_cut < 2) {
    std::ostringstream os;
    os << "Fock cutoff must be >= 2 to represent vacuum dynamics, got "
       << cfg.n_cut;
    throw DomainError(os.str());
  }
  if (!(cfg.tail_tolerance > 0.0 && cfg.tail_tolerance < 1.0)) {
    throw DomainError("tail tolerance must lie in (0, 1)");
  }
}

ModeLayout::ModeLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("mode layout needs at least one mode");
  total_ = 1;
  for (int d : dims_) {
    if (d < 2) throw DomainError("every mode needs at least two Fock levels");
    total_ *= d;
  }
}

int ModeLayout::occupation(int index, int mode) const {
  int stride = 1;
  for (int m = num_modes() - 1; m > mode; --m) stride *= dims_[m];
  return (index / stride) % dims_[mode];
}

bool in_top_layer(const ModeLayout& layout, int index, int mode) {
  return layout.occupation(index, mode) >= layout.dim(mode) - kTopLayerDepth;
}

bool in_top_layer(const ModeLayout& layout, int index) {
  for (int m = 0; m < layout.num_modes(); ++m) {
    if (in_top_layer(layout, index, m)) return true;
  }
  return false;
}

SparseOp annihilation(const ModeLayout& layout, int mode) {
  const int n = layout.total();
  int stride = 1;
  for (int m = layout.num_modes() - 1; m > mode; --m) stride *= layout.dim(m);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int k = layout.occupation(i, mode);
    if (k > 0) entries.emplace_back(i - stride, i, std::sqrt(double(k)));
  }
  SparseOp op(n, n);
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

SparseOp identity(const ModeLayout& layout) {
  SparseOp id(layout.total(), layout.total());
  id.setIdentity();
  return id;
}

DensityMatrix::DensityMatrix(CMatrix rho, ModeLayout layout)
    : rho_(std::move(rho)), layout_(std::move(layout)) {
  if (rho_.rows() != layout_.total() || rho_.cols() != layout_.total()) {
    throw DomainError("density matrix shape does not match its mode layout");
  }
}

DensityMatrix DensityMatrix::vacuum(const ModeLayout& layout) {
  return fock_state(layout, std::vector<int>(layout.dims().size(), 0));
}

DensityMatrix DensityMatrix::fock_state(const ModeLayout& layout,
                                        const std::vector<int>& occupation) {
  if (occupation.size() != layout.dims().size()) {
    throw DomainError("occupation list does not match the number of modes");
  }
  int index = 0;
  for (int m = 0; m < layout.num_modes(); ++m) {
    if (occupation[m] < 0 || occupation[m] >= layout.dim(m)) {
      throw DomainError("occupation outside the truncated Fock space");
    }
    index = index * layout.dim(m) + occupation[m];
  }
  CMatrix rho = CMatrix::Zero(layout.total(), layout.total());
  rho(index, index) = 1.0;
  return DensityMatrix(std::move(rho), layout);
}

DensityMatrix DensityMatrix::from_vectorized(const CVector& vec,
                                             const ModeLayout& layout) {
  const int n = layout.total();
  if (vec.size() != static_cast<Eigen::Index>(n) * n) {
    throw DomainError("vectorized density matrix has the wrong length");
  }
  return DensityMatrix(Eigen::Map<const CMatrix>(vec.data(), n, n), layout);
}

CVector DensityMatrix::vectorized() const {
  return Eigen::Map<const CVector>(rho_.data(), rho_.size());
}

}  // namespace ndpo::fock
