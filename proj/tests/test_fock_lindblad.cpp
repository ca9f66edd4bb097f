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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <random>
#include <sstream>

#include "ndpo/fock_lindblad.hpp"
#include "oracle_values.hpp"

using namespace ndpo;
using namespace ndpo::fock;
constexpr double kPi = std::numbers::pi;

namespace {

FockConfig config(int n, PumpConvention pump = PumpConvention::Hamiltonian) {
  FockConfig cfg;
  cfg.n_cut = n;
  cfg.pump = pump;
  return cfg;
}

DensityMatrix random_hermitian(const ModeLayout& layout, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> g;
  const int d = layout.total();
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(gen), g(gen));
  }
  CMatrix h = m + m.adjoint();
  h /= h.trace().real();
  return DensityMatrix(h, layout);
}

// Relabels a two-mode state |n_a, n_b> -> |n_b, n_a>.
DensityMatrix swap_modes(const DensityMatrix& rho) {
  const int n = rho.layout().dim(0);
  const int d = rho.dim();
  CMatrix out(d, d);
  auto sw = [n](int i) { return (i % n) * n + i / n; };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out(sw(i), sw(j)) = rho.matrix()(i, j);
  }
  return DensityMatrix(out, rho.layout());
}

const oracle::MomentRow& oracle_row(double g, double k, double r, double t) {
  for (const auto& row : oracle::kMoments) {
    if (row.gamma == g && row.kappa_gamma0 == k && row.r == r && row.t == t) return row;
  }
  throw std::logic_error("oracle row missing");
}

}  // namespace

TEST_CASE("configuration and layout") {
  CHECK_THROWS_AS(validate(config(1)), DomainError);
  CHECK_NOTHROW(validate(config(2)));
  FockConfig bad = config(4);
  bad.tail_tolerance = 0.0;
  CHECK_THROWS_AS(validate(bad), DomainError);
  CHECK_THROWS_AS(build_liouvillian(ModelParams::symmetric(1, 0, 0), config(1)), DomainError);

  const ModeLayout layout({3, 4});
  CHECK(layout.total() == 12);
  CHECK(layout.occupation(7, 0) == 1);
  CHECK(layout.occupation(7, 1) == 3);
  CHECK(in_top_layer(layout, 7));
  CHECK_FALSE(in_top_layer(layout, 0));

  const auto rho = random_hermitian(ModeLayout({3, 3}), 1);
  const CVector v = rho.vectorized();
  // Column stacking: vec[i + j d] = rho(i, j).
  CHECK(v[2 + 5 * 9] == rho.matrix()(2, 5));
  const auto back = DensityMatrix::from_vectorized(v, rho.layout());
  CHECK((back.matrix() - rho.matrix()).norm() == 0.0);
}

TEST_CASE("the generator preserves trace and Hermiticity") {
  const std::vector<ModelParams> params = {
      ModelParams::symmetric(1.0, 0.0, 0.0), ModelParams::symmetric(1.0, 0.2, 0.5),
      ModelParams::symmetric(0.0, 0.3, 0.0), ModelParams::asymmetric(1.0, 2.0, 0.3, 0.8),
      ModelParams::symmetric(1.0, 0.8, 1.0)};
  unsigned seed = 7;
  for (const auto& p : params) {
    for (auto pump : {PumpConvention::Hamiltonian, PumpConvention::AsPrinted}) {
      const auto L = build_liouvillian(p, config(6, pump));
      CHECK(L.dim() == 36 * 36);
      const auto rho = random_hermitian(L.layout(), seed++);
      const auto out = L.apply(rho).matrix();
      CHECK(std::abs(out.trace()) <= 1e-10);
      CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("pure damping: vacuum is the dark state") {
  const auto L = build_liouvillian(ModelParams::symmetric(1.0, 0.0, 0.0), config(5));
  const auto vac = DensityMatrix::vacuum(L.layout());
  CHECK(L.apply(vac).matrix().cwiseAbs().maxCoeff() == 0.0);

  const auto res = evolve(L, vac, {0.0, 1.0, 5.0});
  REQUIRE(res.states.size() == 3);
  CHECK_FALSE(res.failure);
  for (const auto& s : res.states) CHECK((s.matrix() - vac.matrix()).cwiseAbs().maxCoeff() < 1e-14);

  const auto ss = steady_state(L);
  CHECK((ss.matrix() - vac.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("evolve validates its inputs") {
  const auto L = build_liouvillian(ModelParams::symmetric(1.0, 0.2, 0.0), config(4));
  const auto vac = DensityMatrix::vacuum(L.layout());
  CHECK_THROWS_AS(evolve(L, vac, {}), DomainError);
  CHECK_THROWS_AS(evolve(L, vac, {0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(evolve(L, vac, {0.0, 2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(evolve(L, DensityMatrix::vacuum(ModeLayout({3, 3})), {0.0, 1.0}), DomainError);
}

TEST_CASE("product basis: dynamics agree with the oracle at a small cutoff") {
  const auto p = ModelParams::symmetric(1.0, 0.2, 0.0);
  const auto L = build_liouvillian(p, config(10));
  const auto res = evolve(L, DensityMatrix::vacuum(L.layout()), {0.0, 0.5, 1.0, 2.0});
  REQUIRE(res.states.size() == 4);
  for (size_t i = 0; i < res.states.size(); ++i) {
    const auto& rho = res.states[i];
    const auto& row = oracle_row(1.0, 0.2, 0.0, res.times[i]);
    const auto v = quadrature_variance(rho, QuadratureKind::TwoModeC);
    CHECK(v.source == Source::Numeric);
    CHECK(v.v1.value() == doctest::Approx(row.v1_two).epsilon(1e-4));
    CHECK(v.v2.value() == doctest::Approx(row.v2_two).epsilon(1e-4));
    const auto s = quadrature_variance(rho, QuadratureKind::SingleModeA);
    CHECK(s.v1.value() == doctest::Approx(row.v1_single).epsilon(1e-4));
    const auto n = mean_photon(rho);
    CHECK(n.n_a == doctest::Approx(row.n_a).epsilon(1e-4));
    CHECK(n.n_b == doctest::Approx(row.n_b).epsilon(1e-4));

    const auto diag = diagnose(rho);
    CHECK(diag.trace_error < 1e-8);
    CHECK(diag.hermiticity_error < 1e-10);
    CHECK(diag.min_eigenvalue > -1e-8);

    // Mode exchange leaves the state and its two-mode variances unchanged.
    const auto swapped = swap_modes(rho);
    CHECK((swapped.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    const auto vs = quadrature_variance(swapped, QuadratureKind::TwoModeC);
    CHECK(vs.v1.value() == doctest::Approx(v.v1.value()).epsilon(1e-12));
  }
}

TEST_CASE("product basis and normal-mode engine agree") {
  const auto p = ModelParams::symmetric(1.0, 0.2, 0.25);
  const std::vector<double> times{0.0, 0.5, 1.5};
  const auto L = build_liouvillian(p, config(10));
  const auto prod = evolve(L, DensityMatrix::vacuum(L.layout()), times);
  NormalModeOptions opts;
  opts.adapt_frame = false;
  const auto nm = NormalModeEngine(p, opts).evolve(times);
  REQUIRE(prod.states.size() == 3);
  REQUIRE(nm.states.size() == 3);
  for (size_t i = 0; i < times.size(); ++i) {
    for (auto kind : {QuadratureKind::TwoModeC, QuadratureKind::SingleModeA,
                      QuadratureKind::SingleModeB}) {
      const auto a = quadrature_variance(prod.states[i], kind);
      const auto b = quadrature_variance(nm.states[i], kind);
      CHECK(a.v1.value() == doctest::Approx(b.v1.value()).epsilon(1e-4));
      CHECK(a.v2.value() == doctest::Approx(b.v2.value()).epsilon(1e-4));
    }
    const auto na = mean_photon(prod.states[i]);
    const auto nb = mean_photon(nm.states[i]);
    CHECK(na.n_a == doctest::Approx(nb.n_a).epsilon(1e-4));
    CHECK(na.n_b == doctest::Approx(nb.n_b).epsilon(1e-4));
    for (Complex alpha : {Complex(0, 0), Complex(0.5, -0.5)}) {
      CHECK(husimi(prod.states[i], alpha, 0.3) ==
            doctest::Approx(husimi(nm.states[i], alpha, 0.3)).epsilon(1e-5));
    }
  }
}

TEST_CASE("product basis: squeezed-reservoir steady state") {
  // The product basis converges slowly in r; r = 0.5 needs n_cut = 14 for 1e-3.
  const double r = 0.25;
  const auto coarse = quadrature_variance(
      steady_state(build_liouvillian(ModelParams::symmetric(1.0, 0.0, r), config(8))),
      QuadratureKind::TwoModeC);
  const auto rho = steady_state(build_liouvillian(ModelParams::symmetric(1.0, 0.0, r), config(10)));
  const auto v = quadrature_variance(rho, QuadratureKind::TwoModeC);
  CHECK(std::abs(v.v1.value() - std::exp(-2 * r)) < 1e-4);
  CHECK(std::abs(v.v2.value() - std::exp(2 * r)) < 1e-4);
  CHECK(std::abs(v.v1.value() - std::exp(-2 * r)) < std::abs(coarse.v1.value() - std::exp(-2 * r)));
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(steady_state(build_liouvillian(ModelParams::symmetric(1.0, 0.5, 0.0), config(4))),
                  PhysicalityError);
  CHECK_THROWS_AS(steady_state(build_liouvillian(ModelParams::symmetric(1.0, 0.7, 0.0), config(4))),
                  PhysicalityError);
}

TEST_CASE("product basis: above threshold the integrator reports divergence") {
  const auto L = build_liouvillian(ModelParams::symmetric(1.0, 1.5, 0.0), config(6));
  const auto res = evolve(L, DensityMatrix::vacuum(L.layout()), {0.0, 1.0, 5.0, 20.0});
  REQUIRE(res.failure);
  CHECK(res.failure->last_good_time < 20.0);
  CHECK_FALSE(res.failure->reason.empty());
  CHECK(res.states.size() < 4);
}

TEST_CASE("observables on simple states") {
  const ModeLayout layout({6, 6});
  const auto vac = DensityMatrix::vacuum(layout);
  for (auto kind : {QuadratureKind::SingleModeA, QuadratureKind::SingleModeB,
                    QuadratureKind::TwoModeC}) {
    const auto v = quadrature_variance(vac, kind);
    CHECK(v.v1.value() == doctest::Approx(1.0));
    CHECK(v.v2.value() == doctest::Approx(1.0));
    CHECK(v.warnings.empty());
  }
  const auto one = DensityMatrix::fock_state(layout, {1, 0});
  const auto s = quadrature_variance(one, QuadratureKind::SingleModeA);
  CHECK(s.v1.value() == doctest::Approx(3.0));
  CHECK(s.v2.value() == doctest::Approx(3.0));

  const auto n0 = mean_photon(vac);
  CHECK(n0.n_a == 0.0);
  CHECK(n0.n_b == 0.0);
  const auto n11 = mean_photon(DensityMatrix::fock_state(layout, {1, 1}));
  CHECK(n11.n_a == doctest::Approx(1.0));
  CHECK(n11.n_b == doctest::Approx(1.0));

  const auto top = DensityMatrix::fock_state(layout, {5, 0});
  CHECK(tail_population(top) == doctest::Approx(1.0));
  CHECK(tail_population(top, 1) == 0.0);
  CHECK_FALSE(quadrature_variance(top, QuadratureKind::TwoModeC).warnings.empty());

  CHECK(husimi(DensityMatrix::vacuum(ModeLayout({30, 30})), 0.0, 0.0) ==
        doctest::Approx(1.0 / (kPi * kPi)));
  CHECK(husimi(DensityMatrix::vacuum(ModeLayout({30, 30})), 1.0, 0.0) ==
        doctest::Approx(std::exp(-1.0) / (kPi * kPi)).epsilon(1e-8));
  CHECK(husimi(DensityMatrix::vacuum(ModeLayout({30})), Complex(0.5, 0.5)) ==
        doctest::Approx(std::exp(-0.5) / kPi).epsilon(1e-8));
  try {
    husimi(vac, 3.0, 0.0);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("n_cut") != std::string::npos);
  }
  CHECK(coherent_cutoff(3.0) > 6);

  const auto d = diagnose(vac);
  CHECK(d.trace_error == 0.0);
  CHECK(d.hermiticity_error == 0.0);
  CHECK(d.min_eigenvalue == doctest::Approx(0.0));
}

TEST_CASE("squeezed frame operators") {
  const double xi = 0.6;
  const int n = 40;
  const SparseOp c = frame_lowering(n, xi);
  const CMatrix cd = CMatrix(c);
  const CMatrix comm = cd * cd.adjoint() - cd.adjoint() * cd;
  // [c, c^dag] = 1 away from the truncation edge.
  for (int i = 0; i < 10; ++i) CHECK(std::abs(comm(i, i) - 1.0) < 1e-12);
}

TEST_CASE("normal-mode engine: undamped amplifier") {
  const auto p = ModelParams::symmetric(0.0, 0.3, 0.0);
  const std::vector<double> times{0.0, 1.0, 2.5, 5.0};
  const auto run = NormalModeEngine(p).evolve(times);
  REQUIRE(run.states.size() == times.size());
  CHECK(run.converged);
  CHECK(run.max_tail < 1e-6);
  for (const auto& s : run.states) {
    const auto v = quadrature_variance(s, QuadratureKind::TwoModeC);
    CHECK(std::abs(v.v1.value() - std::exp(-0.6 * s.t)) < 1e-3);
    CHECK(std::abs(v.v2.value() - std::exp(0.6 * s.t)) < 1e-3);
    const auto n = mean_photon(s);
    CHECK(std::abs(n.n_a - std::pow(std::sinh(0.3 * s.t), 2)) < 1e-4);
    CHECK(std::abs(n.n_b - std::pow(std::sinh(0.3 * s.t), 2)) < 1e-4);
  }
  CHECK_THROWS_AS(NormalModeEngine(p).steady_state(), PhysicalityError);
}

TEST_CASE("normal-mode engine: steady states") {
  const auto s = NormalModeEngine(ModelParams::symmetric(1.0, 0.2, 0.0)).steady_state();
  const auto v = quadrature_variance(s, QuadratureKind::TwoModeC);
  CHECK(std::abs(v.v1.value() - 1.0 / 1.4) < 1e-3);
  const auto& row = oracle_row(1.0, 0.2, 0.5, -1.0);
  const auto s2 = NormalModeEngine(ModelParams::symmetric(1.0, 0.2, 0.5)).steady_state();
  const auto v2 = quadrature_variance(s2, QuadratureKind::TwoModeC);
  CHECK(std::abs(v2.v1.value() - row.v1_two) < 1e-3);
  CHECK(std::abs(v2.v2.value() - row.v2_two) < 1e-3);
  CHECK(std::abs(mean_photon(s2).n_a - row.n_a) < 1e-3);
  CHECK(std::isinf(s2.t));

  CHECK_THROWS_AS(NormalModeEngine(ModelParams::asymmetric(1.0, 2.0, 0.2, 0.0)),
                  UnsupportedConfiguration);
  CHECK_THROWS_AS(NormalModeEngine(ModelParams::symmetric(1.0, 0.5, 0.0)).steady_state(),
                  PhysicalityError);
}

TEST_CASE("pump sign taken as printed squeezes the other quadrature") {
  // Finding: with the commutator sign as printed the stationary two-mode
  // variances are about (0.61, 1.94) instead of the closed-form (0.263, 4.53).
  const auto p = ModelParams::symmetric(1.0, 0.2, 0.5);
  NormalModeOptions opts;
  opts.fock.pump = PumpConvention::AsPrinted;
  const auto s = NormalModeEngine(p, opts).steady_state();
  const auto v = quadrature_variance(s, QuadratureKind::TwoModeC);
  const auto want = variance_two_mode(p, kSteadyState);
  CHECK(std::abs(v.v1.value() - want.v1.value()) > 0.1);
  CHECK(std::abs(v.v2.value() - want.v2.value()) > 1.0);
  CHECK(v.v1.value() == doctest::Approx(0.61).epsilon(0.02));
  CHECK(v.v2.value() == doctest::Approx(1.94).epsilon(0.02));
}

TEST_CASE("IO: trajectory CSV and binary density dump") {
  std::ostringstream csv;
  write_trajectory_csv(csv, {{0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0}, {0.5, 0.25, 4.0, 0.1, 0.1, 1e-12, 3e-9}},
                       {"note"});
  CHECK(csv.str() ==
        "# note\nt,v1,v2,n_a,n_b,trace_err,tail_pop\n0,1,1,0,0,0,0\n0.5,0.25,4,0.1,0.1,1e-12,3e-09\n");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");

  const auto rho = random_hermitian(ModeLayout({3, 2}), 11).matrix();
  std::stringstream bin;
  write_density_binary(bin, rho);
  const std::string bytes = bin.str();
  REQUIRE(bytes.size() == 8 + 36 * 16);
  std::uint64_t dim = 0;
  std::memcpy(&dim, bytes.data(), 8);
  CHECK(dim == 6);
  // Row-major: the second pair is rho(0, 1).
  double re = 0.0;
  std::memcpy(&re, bytes.data() + 8 + 16, 8);
  CHECK(re == rho(0, 1).real());
  const CMatrix back = read_density_binary(bin);
  CHECK((back - rho).norm() == 0.0);

  std::istringstream truncated(bytes.substr(0, 40));
  CHECK_THROWS_AS(read_density_binary(truncated), std::runtime_error);
}
