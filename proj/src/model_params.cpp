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

#include "ndpo/model_params.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace ndpo {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be finite, got " << value;
    throw DomainError(os.str());
  }
}

void require_non_negative(double value, const char* name) {
  require_finite(value, name);
  if (value < 0.0) {
    std::ostringstream os;
    os << name << " must be >= 0, got " << value;
    throw DomainError(os.str());
  }
}

}  // namespace

ReservoirStats reservoir_stats(double r) {
  require_non_negative(r, "squeezing parameter r");
  const double s = std::sinh(r);
  return {s * s, s * std::cosh(r)};
}

ModelParams::ModelParams(double gamma_a, double gamma_b, double kappa_gamma0,
                         double r)
    : gamma_a_(gamma_a), gamma_b_(gamma_b), kappa_gamma0_(kappa_gamma0), r_(r) {
  // Zero damping is the undamped amplifier limit and is kept representable.
  require_non_negative(gamma_a_, "gamma_a");
  require_non_negative(gamma_b_, "gamma_b");
  require_non_negative(kappa_gamma0_, "kappa_gamma0");
  require_non_negative(r_, "r");
}

ModelParams ModelParams::symmetric(double gamma, double kappa_gamma0,
                                   double r) {
  return ModelParams(gamma, gamma, kappa_gamma0, r);
}

ModelParams ModelParams::asymmetric(double gamma_a, double gamma_b,
                                    double kappa_gamma0, double r) {
  return ModelParams(gamma_a, gamma_b, kappa_gamma0, r);
}

double ModelParams::gamma(std::string_view context) const {
  if (!is_symmetric()) {
    std::ostringstream os;
    os << context << " requires gamma_a == gamma_b (got " << gamma_a_ << ", "
       << gamma_b_ << "); only the Fock engine accepts asymmetric rates";
    throw UnsupportedConfiguration(os.str());
  }
  return gamma_a_;
}

ModelParams ModelParams::with_kappa_gamma0(double kappa_gamma0) const {
  return ModelParams(gamma_a_, gamma_b_, kappa_gamma0, r_);
}

ModelParams ModelParams::with_r(double r) const {
  return ModelParams(gamma_a_, gamma_b_, kappa_gamma0_, r);
}

LambdaCoeffs lambda_coeffs(const ModelParams& params) {
  const double g = params.gamma("lambda_coeffs");
  const double k = params.kappa_gamma0();
  const auto [n, m] = params.reservoir();
  return {
      k + g * (n - m + 1.0),
      k + g * (n + m + 1.0),
      k - g * (n - m + 1.0),
      k - g * (n + m + 1.0),
      2.0 * k + g,
      2.0 * k - g,
  };
}

Regime classify_regime(const ModelParams& params, double rel_tol) {
  const double g = params.is_symmetric()
                       ? params.gamma_a()
                       : std::sqrt(params.gamma_a() * params.gamma_b());
  const double margin = g - 2.0 * params.kappa_gamma0();
  const double band = rel_tol * g;
  if (std::abs(margin) <= band) return {RegimeTag::AtThreshold, margin};
  if (margin > 0.0) return {RegimeTag::BelowThreshold, margin};
  return {RegimeTag::AboveThreshold, margin};
}

std::string to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::BelowThreshold:
      return "below_threshold";
    case RegimeTag::AtThreshold:
      return "at_threshold";
    case RegimeTag::AboveThreshold:
      return "above_threshold";
  }
  return "unknown";
}

ModelParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("parameter configuration must be a JSON object");
  }
  static const std::set<std::string> kKnown = {"gamma", "kappa_gamma0", "r",
                                               "gamma_a", "gamma_b"};
  for (const auto& [key, _] : j.items()) {
    if (!kKnown.contains(key)) {
      throw std::invalid_argument("unknown parameter key '" + key + "'");
    }
  }
  auto number = [&](const char* key) -> double {
    const auto& v = j.at(key);
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("parameter '") + key +
                                  "' must be a number");
    }
    return v.get<double>();
  };
  for (const char* key : {"kappa_gamma0", "r"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    }
  }
  const bool has_gamma = j.contains("gamma");
  if (!has_gamma && !(j.contains("gamma_a") && j.contains("gamma_b"))) {
    throw std::invalid_argument(
        "missing parameter 'gamma' (or both 'gamma_a' and 'gamma_b')");
  }
  const double gamma = has_gamma ? number("gamma") : 0.0;
  const double ga = j.contains("gamma_a") ? number("gamma_a") : gamma;
  const double gb = j.contains("gamma_b") ? number("gamma_b") : gamma;
  return ModelParams::asymmetric(ga, gb, number("kappa_gamma0"), number("r"));
}

nlohmann::json to_json(const ModelParams& params) {
  nlohmann::json j;
  if (params.is_symmetric()) {
    j["gamma"] = params.gamma_a();
  } else {
    j["gamma_a"] = params.gamma_a();
    j["gamma_b"] = params.gamma_b();
  }
  j["kappa_gamma0"] = params.kappa_gamma0();
  j["r"] = params.r();
  return j;
}

}  // namespace ndpo
