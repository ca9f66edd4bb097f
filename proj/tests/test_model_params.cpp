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
#include <limits>

#include "ndpo/model_params.hpp"

using namespace ndpo;

TEST_CASE("reservoir statistics") {
  const auto vac = reservoir_stats(0.0);
  CHECK(vac.n == 0.0);
  CHECK(vac.m == 0.0);
  // sinh^2(1) and sinh(1)cosh(1) from a 30-digit evaluation.
  const auto one = reservoir_stats(1.0);
  CHECK(one.n == doctest::Approx(1.38109784554181572978).epsilon(1e-14));
  CHECK(one.m == doctest::Approx(1.81343020392350938383).epsilon(1e-14));
  for (double r : {0.1, 0.5, 2.0, 5.0}) {
    const auto s = reservoir_stats(r);
    CHECK(s.m * s.m == doctest::Approx(s.n * (s.n + 1.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(reservoir_stats(-0.1), DomainError);
  CHECK_THROWS_AS(reservoir_stats(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(reservoir_stats(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("parameter construction validates its inputs") {
  CHECK_THROWS_AS(ModelParams::symmetric(-1.0, 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::symmetric(1.0, -0.1, 0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::symmetric(1.0, 0.1, -1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::symmetric(std::nan(""), 0.1, 0.0), DomainError);
  CHECK_NOTHROW(ModelParams::symmetric(0.0, 0.3, 0.0));

  const auto p = ModelParams::symmetric(1.0, 0.2, 0.5);
  CHECK(p.is_symmetric());
  CHECK(p.gamma() == 1.0);
  CHECK(p.with_r(1.0).r() == 1.0);
  CHECK(p.with_kappa_gamma0(0.3).kappa_gamma0() == 0.3);
  const auto asym = ModelParams::asymmetric(1.0, 2.0, 0.2, 0.5);
  CHECK_FALSE(asym.is_symmetric());
  CHECK_THROWS_AS(asym.gamma(), UnsupportedConfiguration);
}

TEST_CASE("lambda coefficients") {
  const auto l = lambda_coeffs(ModelParams::symmetric(1.0, 0.1, 0.0));
  CHECK(l.l1 == doctest::Approx(1.1));
  CHECK(l.l2 == doctest::Approx(1.1));
  CHECK(l.l3 == doctest::Approx(-0.9));
  CHECK(l.l4 == doctest::Approx(-0.9));
  CHECK(l.l5 == doctest::Approx(1.2));
  CHECK(l.l6 == doctest::Approx(-0.8));

  const auto d = lambda_coeffs(ModelParams::symmetric(1.0, 0.0, 0.0));
  CHECK(d.l1 == 1.0);
  CHECK(d.l2 == 1.0);
  CHECK(d.l3 == -1.0);
  CHECK(d.l4 == -1.0);
  CHECK(d.l5 == 1.0);
  CHECK(d.l6 == -1.0);

  for (double r : {0.0, 0.3, 1.2}) {
    for (double k : {0.0, 0.25, 0.7}) {
      const auto c = lambda_coeffs(ModelParams::symmetric(1.5, k, r));
      CHECK(c.l1 + c.l3 == doctest::Approx(2 * k));
      CHECK(c.l2 + c.l4 == doctest::Approx(2 * k));
      CHECK(c.l2 >= c.l1);
      CHECK(c.l4 <= c.l3);
    }
  }
  CHECK_THROWS_AS(lambda_coeffs(ModelParams::asymmetric(1.0, 2.0, 0.2, 0.0)),
                  UnsupportedConfiguration);
}

TEST_CASE("regime classification") {
  const auto below = classify_regime(ModelParams::symmetric(1.0, 0.2, 0.0));
  CHECK(below.tag == RegimeTag::BelowThreshold);
  CHECK(below.margin == doctest::Approx(0.6));
  const auto at = classify_regime(ModelParams::symmetric(1.0, 0.5, 0.0));
  CHECK(at.tag == RegimeTag::AtThreshold);
  CHECK(at.margin == 0.0);
  const auto above = classify_regime(ModelParams::symmetric(1.0, 0.6, 0.0));
  CHECK(above.tag == RegimeTag::AboveThreshold);
  CHECK(above.margin == doctest::Approx(-0.2));
  CHECK(classify_regime(ModelParams::symmetric(0.0, 0.3, 0.0)).tag == RegimeTag::AboveThreshold);
  CHECK(classify_regime(ModelParams::symmetric(0.0, 0.0, 0.0)).tag == RegimeTag::AtThreshold);
  // Asymmetric threshold at 2 kappa gamma0 = sqrt(gamma_a gamma_b).
  CHECK(classify_regime(ModelParams::asymmetric(1.0, 4.0, 1.0, 0.0)).tag == RegimeTag::AtThreshold);
  CHECK(to_string(RegimeTag::BelowThreshold) == "below_threshold");
}

TEST_CASE("JSON round trip is strict") {
  const auto p = ModelParams::symmetric(1.0, 0.2, 0.5);
  CHECK(params_from_json(to_json(p)) == p);
  const auto asym = ModelParams::asymmetric(1.0, 2.0, 0.2, 0.5);
  CHECK(params_from_json(to_json(asym)) == asym);
  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"gamma", 1}, {"kappa_gamma0", 0.2}, {"r", 0},
                                                  {"extra", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"gamma", 1}, {"r", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"gamma", "1"}, {"kappa_gamma0", 0.2}, {"r", 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"gamma", 1}, {"kappa_gamma0", 0.2}, {"r", -1}}),
                  DomainError);
}
