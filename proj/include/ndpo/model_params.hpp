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

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace ndpo {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (negative times, negative squeezing, nonpositive widths, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a valid parameter set is handed to an operation that cannot
/// treat it, e.g. asymmetric damping rates passed to the closed-form engine.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mean photon number N and phase parameter M of a squeezed vacuum reservoir.
/// M is real and non-negative; M^2 = N(N+1).
struct ReservoirStats {
  double n = 0.0;
  double m = 0.0;
};

/// N = sinh^2 r, M = sinh r cosh r. Throws DomainError for negative or
/// non-finite r.
ReservoirStats reservoir_stats(double r);

/// Physical parameters of the oscillator and its two reservoirs.
///
/// The pump only ever enters through the product of the nonlinear coupling
/// and the pump amplitude, so that product is stored as one field. Both
/// reservoirs share the squeezing parameter r. Instances are immutable.
class ModelParams {
 public:
  /// gamma_a == gamma_b == gamma.
  static ModelParams symmetric(double gamma, double kappa_gamma0, double r);
  static ModelParams asymmetric(double gamma_a, double gamma_b,
                                double kappa_gamma0, double r);

  double gamma_a() const { return gamma_a_; }
  double gamma_b() const { return gamma_b_; }
  double kappa_gamma0() const { return kappa_gamma0_; }
  double r() const { return r_; }
  bool is_symmetric() const { return gamma_a_ == gamma_b_; }

  /// Common damping rate. Throws UnsupportedConfiguration when the rates
  /// differ; `context` names the caller in the message.
  double gamma(std::string_view context = "closed-form engine") const;

  ReservoirStats reservoir() const { return reservoir_stats(r_); }

  /// Same physics with kappa_gamma0 replaced.
  ModelParams with_kappa_gamma0(double kappa_gamma0) const;
  ModelParams with_r(double r) const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(double gamma_a, double gamma_b, double kappa_gamma0, double r);

  double gamma_a_;
  double gamma_b_;
  double kappa_gamma0_;
  double r_;
};

/// Rate coefficients of the Q-function Fokker-Planck equation (symmetric
/// case). l1..l4 are diffusion rates along x, y, u, v; l5 and l6 are the drift
/// rates of the (x, y) and (u, v) pairs.
struct LambdaCoeffs {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double l4 = 0.0;
  double l5 = 0.0;
  double l6 = 0.0;
};

LambdaCoeffs lambda_coeffs(const ModelParams& params);

enum class RegimeTag { BelowThreshold, AtThreshold, AboveThreshold };

struct Regime {
  RegimeTag tag = RegimeTag::BelowThreshold;
  /// gamma - 2 kappa gamma0.
  double margin = 0.0;
};

/// Default relative width of the AtThreshold band, in units of gamma.
inline constexpr double kThresholdRelTol = 1e-12;

/// Classifies by the sign of gamma - 2 kappa gamma0 with a band of
/// rel_tol * gamma counted as AtThreshold. For asymmetric rates gamma is
/// replaced by sqrt(gamma_a gamma_b).
Regime classify_regime(const ModelParams& params,
                       double rel_tol = kThresholdRelTol);

std::string to_string(RegimeTag tag);

/// Parses {"gamma", "kappa_gamma0", "r"} with optional "gamma_a"/"gamma_b"
/// overrides. Unknown keys are rejected with std::invalid_argument.
ModelParams params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelParams& params);

}  // namespace ndpo
