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

#include "ndpo/fock/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ndpo::fock {

Liouvillian::Liouvillian(SparseOp matrix, ModeLayout layout,
                         std::optional<Regime> regime)
    : matrix_(std::move(matrix)), layout_(std::move(layout)), regime_(regime) {
  const Eigen::Index d = layout_.total();
  if (matrix_.rows() != d * d || matrix_.cols() != d * d) {
    throw DomainError("superoperator shape does not match the mode layout");
  }
}

DensityMatrix Liouvillian::apply(const DensityMatrix& rho) const {
  return DensityMatrix::from_vectorized(apply(rho.vectorized()), layout_);
}

SparseOp assemble_superoperator(const std::vector<SuperTerm>& terms, int dim) {
  using ColMajorOp = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;
  const Eigen::Index n = dim;
  // Output row (i, j) needs row i of every left factor and column j of every
  // right factor.
  std::vector<ColMajorOp> rights;
  rights.reserve(terms.size());
  for (const auto& t : terms) rights.emplace_back(t.right);

  SparseOp out(n * n, n * n);
  Eigen::Index nnz_guess = 0;
  for (const auto& t : terms) nnz_guess += t.left.nonZeros();
  out.reserve(nnz_guess * 2);

  std::vector<std::pair<Eigen::Index, Complex>> row;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      row.clear();
      for (size_t k = 0; k < terms.size(); ++k) {
        for (SparseOp::InnerIterator a(terms[k].left, i); a; ++a) {
          for (ColMajorOp::InnerIterator b(rights[k], j); b; ++b) {
            row.emplace_back(a.col() + b.row() * n,
                             terms[k].coef * a.value() * b.value());
          }
        }
      }
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      const Eigen::Index r = i + j * n;
      out.startVec(r);
      for (size_t p = 0; p < row.size();) {
        Complex sum = 0.0;
        const Eigen::Index c = row[p].first;
        for (; p < row.size() && row[p].first == c; ++p) sum += row[p].second;
        if (sum != Complex(0.0)) out.insertBack(r, c) = sum;
      }
    }
  }
  out.finalize();
  out.makeCompressed();
  return out;
}

namespace {

// Appends the squeezed-reservoir dissipator of one mode. `hermitian_part`
// collects the anticommutator pieces so they become a single left and a
// single right term.
void add_reservoir(std::vector<SuperTerm>& terms, SparseOp& hermitian_part,
                   const SparseOp& x, double gamma, double n, double m) {
  if (gamma == 0.0) return;
  const SparseOp xd = SparseOp(x.adjoint());
  terms.push_back({gamma * (n + 1.0), x, xd});
  if (n != 0.0) terms.push_back({gamma * n, xd, x});
  if (m != 0.0) {
    terms.push_back({gamma * m, xd, xd});
    terms.push_back({gamma * m, x, x});
  }
  SparseOp k = 0.5 * gamma * (n + 1.0) * SparseOp(xd * x);
  if (n != 0.0) k += 0.5 * gamma * n * SparseOp(x * xd);
  if (m != 0.0) k += 0.5 * gamma * m * SparseOp(xd * xd + x * x);
  hermitian_part += k;
}

void finish(std::vector<SuperTerm>& terms, const SparseOp& hermitian_part,
            const SparseOp& id) {
  if (hermitian_part.nonZeros() == 0) return;
  terms.push_back({-1.0, hermitian_part, id});
  terms.push_back({-1.0, id, hermitian_part});
}

}  // namespace

Liouvillian build_liouvillian(const ModelParams& params, const FockConfig& cfg) {
  validate(cfg);
  const ModeLayout layout({cfg.n_cut, cfg.n_cut});
  const SparseOp id = identity(layout);
  const SparseOp a = annihilation(layout, 0);
  const SparseOp b = annihilation(layout, 1);
  const auto [n, m] = params.reservoir();

  std::vector<SuperTerm> terms;
  const double sign = cfg.pump == PumpConvention::Hamiltonian ? 1.0 : -1.0;
  const double pump = sign * params.kappa_gamma0();
  if (pump != 0.0) {
    const SparseOp p = SparseOp(a * b) - SparseOp(SparseOp(a.adjoint()) * SparseOp(b.adjoint()));
    terms.push_back({pump, p, id});
    terms.push_back({-pump, id, p});
  }
  SparseOp hermitian_part(layout.total(), layout.total());
  add_reservoir(terms, hermitian_part, a, params.gamma_a(), n, m);
  add_reservoir(terms, hermitian_part, b, params.gamma_b(), n, m);
  finish(terms, hermitian_part, id);

  return Liouvillian(assemble_superoperator(terms, layout.total()), layout,
                     classify_regime(params));
}

SparseOp frame_lowering(int n_cut, double frame) {
  const SparseOp f = annihilation(ModeLayout({n_cut}), 0);
  if (frame == 0.0) return f;
  return SparseOp(std::cosh(frame) * f - std::sinh(frame) * SparseOp(f.adjoint()));
}

Liouvillian build_single_mode_liouvillian(const SingleModeChannel& channel,
                                          int n_cut,
                                          std::optional<Regime> regime,
                                          double frame) {
  FockConfig cfg;
  cfg.n_cut = n_cut;
  validate(cfg);
  const ModeLayout layout({n_cut});
  const SparseOp id = identity(layout);
  const SparseOp c = frame_lowering(n_cut, frame);

  std::vector<SuperTerm> terms;
  if (channel.squeeze != 0.0) {
    const SparseOp cd = SparseOp(c.adjoint());
    const SparseOp p = 0.5 * channel.squeeze * (SparseOp(c * c) - SparseOp(cd * cd));
    terms.push_back({1.0, p, id});
    terms.push_back({-1.0, id, p});
  }
  SparseOp hermitian_part(layout.total(), layout.total());
  add_reservoir(terms, hermitian_part, c, channel.gamma, channel.n, channel.m);
  finish(terms, hermitian_part, id);

  return Liouvillian(assemble_superoperator(terms, layout.total()), layout,
                     regime);
}

}  // namespace ndpo::fock
