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

// Command implementations behind the `ndpo` executable. Each command writes
// its artifact to a stream and returns a process exit code.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ndpo/model_params.hpp"

namespace ndpo::cli {

/// Bad flags, bad config file or unusable input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double gamma = 1.0;
  double kappa_gamma0 = 0.0;
  double r = 0.0;
  /// End of the time grid in units of 1/gamma (plain t when gamma = 0).
  double t_max = 10.0;
  /// Number of intervals of a sweep grid.
  int steps = 100;
  bool numeric = false;
  /// Starting Fock cutoff per mode of the numeric engine.
  int ncut = 30;
  /// Output path; empty means standard output.
  std::string out;

  // sweep-r
  double r_min = 0.0;
  double r_max = 2.0;
  bool at_threshold = false;
  /// "two" (two-mode quadratures) or "single" (signal mode only).
  std::string mode = "two";

  // validate
  std::optional<std::string> only;
  std::optional<double> q_tolerance;
  unsigned threads = 0;
  /// Validation matrix from the config file; empty means the default matrix.
  std::vector<ModelParams> cases;

  // plot-script
  std::string csv;
  std::optional<bool> log_v2;

  // trajectory
  /// "normal" (normal-mode engine) or "product" (two-mode Fock basis).
  std::string engine = "normal";
  /// Final density matrix dump; product engine only.
  std::string dump;

  /// Validated physical parameters.
  ModelParams params() const;
  /// Time grid in physical units: steps + 1 points from 0 to t_max / gamma.
  std::vector<double> physical_times() const;
};

/// Overlays a JSON object onto `cfg`. Unknown keys and wrongly typed values
/// raise UsageError.
void apply_config(RunConfig& cfg, const nlohmann::json& j);
/// Reads a JSON file and applies it.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Header comment lines recording the command, version and parameters.
std::vector<std::string> header_comments(const std::string& command,
                                         const RunConfig& cfg);

/// t, v1_analytic, v2_analytic [, v1_numeric, v2_numeric, tail_pop].
int cmd_sweep_time(const RunConfig& cfg, std::ostream& out);
/// r, v1, v2, squeezing_percent over the steady state.
int cmd_sweep_r(const RunConfig& cfg, std::ostream& out);
/// Writes the JSON report to `json_out` and a summary table to `log`.
/// Returns 0 iff every check passed.
int cmd_validate(const RunConfig& cfg, std::ostream& json_out, std::ostream& log);
/// Emits a matplotlib script for the CSV at cfg.csv.
int cmd_plot_script(const RunConfig& cfg, std::ostream& out);
/// Numeric trajectory CSV: t, v1, v2, n_a, n_b, trace_err, tail_pop.
int cmd_trajectory(const RunConfig& cfg, std::ostream& out);

/// Full command line entry point used by the executable.
int run(int argc, char** argv);

}  // namespace ndpo::cli
