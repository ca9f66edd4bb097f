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

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ndpo/cli.hpp"
#include "ndpo/fock/evolve.hpp"

namespace ndpo::cli {

namespace {

// Flag values kept apart from RunConfig so that only flags actually given
// override the config file.
struct Flags {
  std::string config;
  std::optional<double> gamma, kappa_gamma0, r, t_max, r_min, r_max, q_tolerance;
  std::optional<int> steps, ncut;
  std::optional<unsigned> threads;
  std::optional<std::string> out, mode, only, csv, engine, dump;
  bool numeric = false, at_threshold = false, log_v2 = false, linear_v2 = false;
};

template <typename T>
void overlay(T& target, const std::optional<T>& flag) {
  if (flag) target = *flag;
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (!f.config.empty()) apply_config_file(cfg, f.config);
  overlay(cfg.gamma, f.gamma);
  overlay(cfg.kappa_gamma0, f.kappa_gamma0);
  overlay(cfg.r, f.r);
  overlay(cfg.t_max, f.t_max);
  overlay(cfg.r_min, f.r_min);
  overlay(cfg.r_max, f.r_max);
  overlay(cfg.steps, f.steps);
  overlay(cfg.ncut, f.ncut);
  overlay(cfg.threads, f.threads);
  overlay(cfg.out, f.out);
  overlay(cfg.mode, f.mode);
  overlay(cfg.csv, f.csv);
  overlay(cfg.engine, f.engine);
  overlay(cfg.dump, f.dump);
  if (f.only) cfg.only = f.only;
  if (f.q_tolerance) cfg.q_tolerance = f.q_tolerance;
  if (f.numeric) cfg.numeric = true;
  if (f.at_threshold) cfg.at_threshold = true;
  if (f.log_v2) cfg.log_v2 = true;
  if (f.linear_v2) cfg.log_v2 = false;
  return cfg;
}

// Runs `body` with the output stream named by cfg.out (stdout when empty).
int with_output(const RunConfig& cfg, const std::function<int(std::ostream&)>& body) {
  if (cfg.out.empty()) return body(std::cout);
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write output file '" + cfg.out + "'");
  const int code = body(file);
  file.close();
  if (!file) throw UsageError("failed writing output file '" + cfg.out + "'");
  return code;
}

void physics_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--gamma", f.gamma, "damping rate gamma");
  cmd->add_option("--kappa-gamma0", f.kappa_gamma0, "pump strength kappa*gamma0");
  cmd->add_option("--r", f.r, "reservoir squeeze parameter r");
  cmd->add_option("--mode", f.mode, "quadratures: two (default) or single");
  cmd->add_option("--steps", f.steps, "number of grid intervals");
  cmd->add_option("--out", f.out, "output file (default: stdout)");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Squeezing of a nondegenerate parametric oscillator in a squeezed vacuum "
               "reservoir: closed-form and Fock-space engines"};
  app.set_version_flag("--version", std::string(NDPO_VERSION));
  app.require_subcommand(1);
  Flags f;

  auto* st = app.add_subcommand("sweep-time", "variances versus time (CSV)");
  physics_flags(st, f);
  st->add_option("--t-max", f.t_max, "end time in units of 1/gamma (plain t when gamma = 0)");
  st->add_flag("--numeric", f.numeric, "add Fock-engine columns");
  st->add_option("--ncut", f.ncut, "starting Fock cutoff per mode");

  auto* sr = app.add_subcommand("sweep-r", "stationary variances versus r (CSV)");
  physics_flags(sr, f);
  sr->add_option("--r-min", f.r_min, "first r");
  sr->add_option("--r-max", f.r_max, "last r");
  sr->add_flag("--at-threshold", f.at_threshold, "set kappa*gamma0 = gamma/2");

  auto* va = app.add_subcommand("validate", "cross-engine validation (JSON report)");
  va->add_option("--config", f.config, "JSON config file; may list 'cases'");
  va->add_option("--only", f.only, "run only the limit-suite entry with this tag");
  va->add_option("--q-tolerance", f.q_tolerance, "pointwise Q tolerance");
  va->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  va->add_option("--out", f.out, "JSON report file (default: stdout)");

  auto* ps = app.add_subcommand("plot-script", "matplotlib script for a sweep CSV");
  ps->add_option("--config", f.config, "JSON config file");
  ps->add_option("--csv", f.csv, "CSV written by sweep-time or sweep-r");
  ps->add_option("--gamma", f.gamma, "damping rate used for the time axis label");
  ps->add_flag("--log-v2", f.log_v2, "log scale for v2 (default for sweep-r)");
  ps->add_flag("--linear-v2", f.linear_v2, "linear scale for v2");
  ps->add_option("--out", f.out, "script file (default: stdout)");

  auto* tr = app.add_subcommand("trajectory", "numeric trajectory export (CSV)");
  physics_flags(tr, f);
  tr->add_option("--t-max", f.t_max, "end time in units of 1/gamma (plain t when gamma = 0)");
  tr->add_option("--ncut", f.ncut, "starting Fock cutoff per mode");
  tr->add_option("--engine", f.engine, "normal (default) or product");
  tr->add_option("--dump", f.dump, "binary dump of the final density matrix (product engine)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const RunConfig cfg = resolve(f);
    if (st->parsed()) return with_output(cfg, [&](std::ostream& o) { return cmd_sweep_time(cfg, o); });
    if (sr->parsed()) return with_output(cfg, [&](std::ostream& o) { return cmd_sweep_r(cfg, o); });
    if (ps->parsed()) return with_output(cfg, [&](std::ostream& o) { return cmd_plot_script(cfg, o); });
    if (tr->parsed()) return with_output(cfg, [&](std::ostream& o) { return cmd_trajectory(cfg, o); });
    if (va->parsed()) {
      return with_output(cfg, [&](std::ostream& o) { return cmd_validate(cfg, o, std::cerr); });
    }
  } catch (const UsageError& e) {
    std::cerr << "ndpo: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "ndpo: invalid parameters: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedConfiguration& e) {
    std::cerr << "ndpo: unsupported configuration: " << e.what() << '\n';
    return 3;
  } catch (const fock::PhysicalityError& e) {
    std::cerr << "ndpo: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "ndpo: error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ndpo::cli
