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

// Comparison campaigns between the closed-form Gaussian solution and the
// Fock-space engine, plus checks of the printed limiting cases.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ndpo/analytic_gaussian.hpp"
#include "ndpo/fock/density_matrix.hpp"
#include "ndpo/model_params.hpp"

namespace ndpo::validation {

/// Per-check bounds. Every check records the tolerance it used.
struct Tolerances {
  /// |v_numeric - v_analytic| at sample times and in the steady state,
  /// widened to the cutoff-tail bound when that is larger.
  double variance = 1e-3;
  /// Pointwise |Q_analytic - Q_husimi|.
  double q_pointwise = 1e-3;
  /// |integral of Q - 1| from the Gaussian determinant.
  double q_normalization = 1e-10;
  double trace = 1e-8;
  double hermiticity = 1e-10;
  /// Smallest eigenvalue must be >= -positivity.
  double positivity = 1e-8;
  /// Slack for v1 v2 >= 1 and v(0) = 1 on the numeric side.
  double numeric_identity = 1e-9;
  /// Relative deviation allowed between two closed forms.
  double closed_form = 1e-12;
};

struct ValidationCase {
  std::string name;
  ModelParams params = ModelParams::symmetric(1.0, 0.0, 0.0);
  /// Sample times for the variance comparison; must start at 0.
  std::vector<double> times{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  /// Sample times for the Q comparison.
  std::vector<double> q_times{0.5, 2.0};
  /// Complex amplitudes; Q is compared at every (alpha, beta) pair.
  std::vector<std::complex<double>> amplitude_grid;
  /// Starting cutoff, tail tolerance and cutoff budget of the Fock engine.
  fock::FockConfig fock;
  Tolerances tolerances;
  bool include_steady = true;
};

/// The 5x5 grid x + iy with x, y in {-1, -0.5, 0, 0.5, 1}.
std::vector<std::complex<double>> default_amplitude_grid();

/// Case with the default grid and a name derived from the parameters.
ValidationCase make_case(const ModelParams& params);

/// gamma = 1, kappa gamma0 in {0, 0.1, 0.2, 0.4, 0.45}, r in {0, 0.25, 0.5, 1}.
std::vector<ValidationCase> default_matrix();

struct Check {
  std::string tag;
  std::string description;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  bool skipped = false;
  std::string skip_reason;
  /// Input at which `deviation` was attained.
  std::string worst_input;
};

struct TailDiagnostics {
  std::string case_name;
  double max_tail = 0.0;
  int n_cut_c = 0;
  int n_cut_d = 0;
  double frame_c = 0.0;
  double frame_d = 0.0;
  bool converged = true;
  std::vector<std::string> notes;
};

struct ValidationReport {
  std::vector<Check> checks;
  std::vector<TailDiagnostics> tails;
  double wall_seconds = 0.0;

  /// True when no non-skipped check failed.
  bool passed() const;
  /// Number of checks that ran and failed.
  std::size_t failures() const;
  /// Appends the other report's entries; wall-clock times add up.
  void merge(const ValidationReport& other);
};

/// Evaluates both engines at every sample time and, below threshold, in the
/// steady state. Also checks v(0) = 1, v1 v2 >= 1 and the trace,
/// Hermiticity and positivity of every evolved density matrix.
/// Throws std::runtime_error naming the case when an engine fails.
ValidationReport compare_variances(const ValidationCase& c);

/// Pointwise analytic Q against Husimi samples of the evolved state at
/// every q_time and amplitude pair, plus the analytic normalization.
ValidationReport compare_q(const ValidationCase& c);

/// Both comparisons for each case. Cases run concurrently on up to
/// `threads` workers (0 = hardware concurrency); the merged report keeps the
/// input order.
ValidationReport run_cases(const std::vector<ValidationCase>& cases,
                           unsigned threads = 0);

/// Parameter family scanned by the limit suite. The pump is given as the
/// ratio 2 kappa gamma0 / gamma so the family stays below threshold.
struct LimitFamily {
  double gamma = 1.0;
  std::vector<double> pump_ratios{0.0, 0.2, 0.4, 0.8, 0.9};
  std::vector<double> r_values{0.0, 0.25, 0.5, 1.0, 2.0};
  std::vector<double> times{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  /// Run only the entry with this tag.
  std::optional<std::string> only;
  double tolerance = 1e-12;
};

/// Tags of every limit-suite entry, in run order.
const std::vector<std::string>& limit_tags();

/// Checks each printed special case against the general closed forms.
/// Throws std::invalid_argument for an unknown `only` tag.
ValidationReport limit_suite(const LimitFamily& family = {});

/// Closed-form properties: lambda identities, reservoir identity, vacuum
/// reductions of the Q coefficients, v(0) = 1 and v1 v2 >= 1 over the given
/// parameter points.
ValidationReport property_suite(const std::vector<ModelParams>& points,
                                const std::vector<double>& times);

/// JSON serialization of a report (pretty-printed).
std::string to_json(const ValidationReport& report);
/// Fixed-width plain-text table, one row per check.
std::string summary_table(const ValidationReport& report);

}  // namespace ndpo::validation
