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

#include "ndpo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ndpo/analytic_gaussian.hpp"
#include "ndpo/cross_validation.hpp"
#include "ndpo/fock_lindblad.hpp"

namespace ndpo::cli {

namespace {

using fock::format_number;

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Verbosity from NDPO_LOG: error, warn (default), info or debug.
Level log_level() {
  const char* env = std::getenv("NDPO_LOG");
  const std::string v = env ? env : "";
  if (v == "error") return Level::Error;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

void log(Level level, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (level <= log_level()) {
    std::cerr << "ndpo [" << names[static_cast<int>(level)] << "] " << msg << '\n';
  }
}

std::string cell(const Variance& v) {
  return v.is_divergent() ? "divergent" : format_number(v.value());
}

// Time column value: gamma t, or plain t without damping.
double time_label(const RunConfig& cfg, double t) {
  return cfg.gamma > 0.0 ? cfg.gamma * t : t;
}

bool single_mode(const RunConfig& cfg) {
  if (cfg.mode == "two") return false;
  if (cfg.mode == "single") return true;
  throw UsageError("--mode must be 'two' or 'single', got '" + cfg.mode + "'");
}

void write_comments(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << "# " << l << '\n';
}

double number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw UsageError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int integer(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) throw UsageError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

bool boolean(const nlohmann::json& v, const std::string& key) {
  if (!v.is_boolean()) throw UsageError("config key '" + key + "' must be true or false");
  return v.get<bool>();
}

std::string text(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw UsageError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

ModelParams RunConfig::params() const {
  return ModelParams::symmetric(gamma, kappa_gamma0, r);
}

std::vector<double> RunConfig::physical_times() const {
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (!(t_max > 0.0)) throw UsageError("--t-max must be positive");
  const double scale = gamma > 0.0 ? 1.0 / gamma : 1.0;
  std::vector<double> t(static_cast<size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) t[static_cast<size_t>(i)] = scale * t_max * i / steps;
  return t;
}

void apply_config(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "gamma") cfg.gamma = number(v, key);
    else if (key == "kappa_gamma0") cfg.kappa_gamma0 = number(v, key);
    else if (key == "r") cfg.r = number(v, key);
    else if (key == "t_max") cfg.t_max = number(v, key);
    else if (key == "steps") cfg.steps = integer(v, key);
    else if (key == "numeric") cfg.numeric = boolean(v, key);
    else if (key == "ncut") cfg.ncut = integer(v, key);
    else if (key == "out") cfg.out = text(v, key);
    else if (key == "r_min") cfg.r_min = number(v, key);
    else if (key == "r_max") cfg.r_max = number(v, key);
    else if (key == "at_threshold") cfg.at_threshold = boolean(v, key);
    else if (key == "mode") cfg.mode = text(v, key);
    else if (key == "only") cfg.only = text(v, key);
    else if (key == "q_tolerance") cfg.q_tolerance = number(v, key);
    else if (key == "threads") cfg.threads = static_cast<unsigned>(std::max(0, integer(v, key)));
    else if (key == "csv") cfg.csv = text(v, key);
    else if (key == "log_v2") cfg.log_v2 = boolean(v, key);
    else if (key == "engine") cfg.engine = text(v, key);
    else if (key == "dump") cfg.dump = text(v, key);
    else if (key == "cases") {
      if (!v.is_array()) throw UsageError("config key 'cases' must be an array");
      cfg.cases.clear();
      for (const auto& c : v) {
        try {
          cfg.cases.push_back(params_from_json(c));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("config 'cases': ") + e.what());
        }
      }
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  apply_config(cfg, j);
}

std::vector<std::string> header_comments(const std::string& command, const RunConfig& cfg) {
  std::vector<std::string> out;
  out.push_back("ndpo " + std::string(NDPO_VERSION) + " " + command);
  std::ostringstream p;
  p << "gamma=" << format_number(cfg.gamma) << " kappa_gamma0=" << format_number(cfg.kappa_gamma0)
    << " r=" << format_number(cfg.r) << " t_max=" << format_number(cfg.t_max)
    << " steps=" << cfg.steps << " mode=" << cfg.mode << " numeric=" << (cfg.numeric ? 1 : 0)
    << " ncut=" << cfg.ncut;
  if (command == "sweep-r") {
    p << " r_min=" << format_number(cfg.r_min) << " r_max=" << format_number(cfg.r_max)
      << " at_threshold=" << (cfg.at_threshold ? 1 : 0);
  }
  out.push_back(p.str());
  out.push_back(cfg.gamma > 0.0 ? "time unit: 1/gamma (column t holds gamma*t)"
                                : "time unit: plain t (gamma = 0)");
  return out;
}

int cmd_sweep_time(const RunConfig& cfg, std::ostream& out) {
  const ModelParams p = cfg.params();
  const bool single = single_mode(cfg);
  const auto times = cfg.physical_times();
  const Regime regime = classify_regime(p);

  std::vector<std::string> numeric_cells;
  std::vector<std::string> comments = header_comments("sweep-time", cfg);
  comments.push_back("regime: " + to_string(regime.tag));
  if (cfg.numeric) {
    fock::NormalModeOptions opts;
    opts.fock.n_cut = cfg.ncut;
    fock::validate(opts.fock);
    log(Level::Info, "running the numeric engine");
    const auto run = fock::NormalModeEngine(p, opts).evolve(times);
    const auto kind = single ? fock::QuadratureKind::SingleModeA : fock::QuadratureKind::TwoModeC;
    for (const auto& s : run.states) {
      const auto v = fock::quadrature_variance(s, kind, regime, opts.fock.tail_tolerance);
      numeric_cells.push_back(cell(v.v1) + "," + cell(v.v2) + "," + format_number(s.tail));
    }
    if (run.failure) {
      comments.push_back("numeric engine stopped at t=" +
                         format_number(time_label(cfg, run.failure->last_good_time)) + ": " +
                         run.failure->reason);
      log(Level::Warn, "numeric engine stopped: " + run.failure->reason);
    }
    if (!run.converged) {
      comments.push_back("numeric tail above tolerance; max tail_pop=" +
                         format_number(run.max_tail));
    }
  }

  write_comments(out, comments);
  out << "t,v1_analytic,v2_analytic";
  if (cfg.numeric) out << ",v1_numeric,v2_numeric,tail_pop";
  out << '\n';
  for (size_t i = 0; i < times.size(); ++i) {
    const auto v = single ? variance_single_mode(p, times[i]) : variance_two_mode(p, times[i]);
    out << format_number(time_label(cfg, times[i])) << ',' << cell(v.v1) << ',' << cell(v.v2);
    if (cfg.numeric) {
      out << ',' << (i < numeric_cells.size() ? numeric_cells[i] : "failed,failed,failed");
    }
    out << '\n';
  }
  return 0;
}

int cmd_sweep_r(const RunConfig& cfg, std::ostream& out) {
  if (cfg.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(cfg.r_min >= 0.0 && cfg.r_max >= cfg.r_min)) {
    throw UsageError("need 0 <= --r-min <= --r-max");
  }
  RunConfig c = cfg;
  if (c.at_threshold) c.kappa_gamma0 = 0.5 * c.gamma;
  const bool single = single_mode(c);
  const ModelParams base = c.params();
  const Regime regime = classify_regime(base);
  if (regime.tag == RegimeTag::AboveThreshold) {
    throw DomainError("sweep-r needs a stationary state; parameters are above threshold "
                      "(gamma - 2 kappa_gamma0 = " + format_number(regime.margin) + ")");
  }
  if (!(c.gamma > 0.0)) throw DomainError("sweep-r needs gamma > 0 for a stationary state");

  auto comments = header_comments("sweep-r", c);
  comments.push_back("regime: " + to_string(regime.tag) + "; stationary variances");
  write_comments(out, comments);
  out << "r,v1,v2,squeezing_percent\n";
  for (int i = 0; i <= c.steps; ++i) {
    const double r = c.r_min + (c.r_max - c.r_min) * i / c.steps;
    const ModelParams p = base.with_r(r);
    const auto v = single ? variance_single_mode(p, kSteadyState)
                          : variance_two_mode(p, kSteadyState);
    out << format_number(r) << ',' << cell(v.v1) << ',' << cell(v.v2) << ','
        << (v.v1.is_divergent() ? "divergent" : format_number(squeezing_percent(v.v1.value())))
        << '\n';
  }
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& json_out, std::ostream& log_out) {
  using namespace validation;
  ValidationReport report;
  if (cfg.only) {
    LimitFamily family;
    family.only = cfg.only;
    try {
      report = limit_suite(family);
    } catch (const std::invalid_argument& e) {
      std::string tags;
      for (const auto& t : limit_tags()) tags += " " + t;
      throw UsageError(std::string(e.what()) + "; known tags:" + tags);
    }
  } else {
    std::vector<ValidationCase> cases;
    if (cfg.cases.empty()) {
      cases = default_matrix();
    } else {
      for (const auto& p : cfg.cases) cases.push_back(make_case(p));
    }
    std::vector<ModelParams> points;
    for (auto& c : cases) {
      if (cfg.q_tolerance) c.tolerances.q_pointwise = *cfg.q_tolerance;
      points.push_back(c.params);
    }
    log(Level::Info, "running " + std::to_string(cases.size()) + " validation cases");
    report = limit_suite();
    report.merge(property_suite(points, cases.front().times));
    report.merge(run_cases(cases, cfg.threads));
  }
  json_out << to_json(report) << '\n';
  log_out << summary_table(report);
  return report.passed() ? 0 : 1;
}

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::size_t rows = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open CSV file '" + path + "'");
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (table.header.empty()) {
      table.header = cells;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw UsageError("CSV file '" + path + "' line " + std::to_string(lineno) + " has " +
                       std::to_string(cells.size()) + " fields, header has " +
                       std::to_string(table.header.size()));
    }
    for (const auto& c : cells) {
      if (c == "divergent" || c == "failed") continue;
      char* end = nullptr;
      std::strtod(c.c_str(), &end);
      if (c.empty() || *end != '\0') {
        throw UsageError("CSV file '" + path + "' line " + std::to_string(lineno) +
                         " has a non-numeric field '" + c + "'");
      }
    }
    ++table.rows;
  }
  if (table.header.empty()) throw UsageError("CSV file '" + path + "' is empty");
  if (table.rows == 0) throw UsageError("CSV file '" + path + "' has no data rows");
  return table;
}

std::string py_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

int cmd_plot_script(const RunConfig& cfg, std::ostream& out) {
  if (cfg.csv.empty()) throw UsageError("plot-script needs --csv");
  const CsvTable table = read_csv(cfg.csv);
  const std::string& x = table.header.front();
  const bool log_v2 = cfg.log_v2.value_or(x == "r");
  std::vector<std::string> v1_cols, v2_cols;
  for (const auto& h : table.header) {
    if (h.rfind("v1", 0) == 0) v1_cols.push_back(h);
    if (h.rfind("v2", 0) == 0) v2_cols.push_back(h);
  }
  if (v1_cols.empty() && v2_cols.empty()) {
    throw UsageError("CSV file '" + cfg.csv + "' has no variance columns");
  }
  auto list = [](const std::vector<std::string>& cols) {
    std::string s = "[";
    for (size_t i = 0; i < cols.size(); ++i) s += (i ? ", " : "") + py_string(cols[i]);
    return s + "]";
  };
  std::string png = cfg.csv;
  if (png.size() > 4 && png.substr(png.size() - 4) == ".csv") png.resize(png.size() - 4);
  png += ".png";
  const std::string xlabel = x == "t" ? (cfg.gamma > 0.0 ? "gamma t" : "t") : x;

  out << "#!/usr/bin/env python3\n"
      << "# Generated by ndpo " << NDPO_VERSION << " plot-script.\n"
      << "import csv\n"
      << "import math\n\n"
      << "import matplotlib\n"
      << "matplotlib.use(\"Agg\")\n"
      << "import matplotlib.pyplot as plt\n\n"
      << "CSV_PATH = " << py_string(cfg.csv) << "\n"
      << "PNG_PATH = " << py_string(png) << "\n"
      << "X_COLUMN = " << py_string(x) << "\n"
      << "V1_COLUMNS = " << list(v1_cols) << "\n"
      << "V2_COLUMNS = " << list(v2_cols) << "\n"
      << "LOG_V2 = " << (log_v2 ? "True" : "False") << "\n\n\n"
      << "def value(cell):\n"
      << "    return math.nan if cell in (\"divergent\", \"failed\") else float(cell)\n\n\n"
      << "with open(CSV_PATH, newline=\"\") as handle:\n"
      << "    rows = [line for line in handle if not line.startswith(\"#\")]\n"
      << "data = list(csv.DictReader(rows))\n"
      << "x = [value(row[X_COLUMN]) for row in data]\n\n"
      << "fig, axes = plt.subplots(1, 2, figsize=(10, 4), constrained_layout=True)\n"
      << "for ax, columns in zip(axes, (V1_COLUMNS, V2_COLUMNS)):\n"
      << "    for name in columns:\n"
      << "        ax.plot(x, [value(row[name]) for row in data], label=name)\n"
      << "    ax.axhline(1.0, color=\"gray\", linestyle=\"--\", label=\"vacuum v = 1\")\n"
      << "    ax.set_xlabel(" << py_string(xlabel) << ")\n"
      << "    ax.set_ylabel(\"variance\")\n"
      << "    ax.legend()\n"
      << "if LOG_V2:\n"
      << "    axes[1].set_yscale(\"log\")\n"
      << "fig.savefig(PNG_PATH, dpi=150)\n"
      << "print(PNG_PATH)\n";
  return 0;
}

int cmd_trajectory(const RunConfig& cfg, std::ostream& out) {
  const ModelParams p = cfg.params();
  const bool single = single_mode(cfg);
  const auto times = cfg.physical_times();
  const Regime regime = classify_regime(p);
  const auto kind = single ? fock::QuadratureKind::SingleModeA : fock::QuadratureKind::TwoModeC;
  fock::FockConfig fc;
  fc.n_cut = cfg.ncut;
  fock::validate(fc);

  std::vector<fock::TrajectoryRow> rows;
  auto comments = header_comments("trajectory", cfg);
  comments.push_back("engine: " + cfg.engine + "; regime: " + to_string(regime.tag));

  if (cfg.engine == "normal") {
    if (!cfg.dump.empty()) throw UsageError("--dump needs --engine product");
    fock::NormalModeOptions opts;
    opts.fock = fc;
    const auto run = fock::NormalModeEngine(p, opts).evolve(times);
    for (const auto& s : run.states) {
      const auto v = fock::quadrature_variance(s, kind, regime, fc.tail_tolerance);
      const auto n = fock::mean_photon(s);
      const double trace_err = std::max(std::abs(s.c.trace() - 1.0), std::abs(s.d.trace() - 1.0));
      rows.push_back(
          {time_label(cfg, s.t), v.v1.value(), v.v2.value(), n.n_a, n.n_b, trace_err, s.tail});
    }
    if (run.failure) comments.push_back("stopped: " + run.failure->reason);
  } else if (cfg.engine == "product") {
    const auto L = fock::build_liouvillian(p, fc);
    const auto res = fock::evolve(L, fock::DensityMatrix::vacuum(L.layout()), times);
    for (size_t i = 0; i < res.states.size(); ++i) {
      const auto& rho = res.states[i];
      const auto v = fock::quadrature_variance(rho, kind, regime, fc.tail_tolerance);
      const auto n = fock::mean_photon(rho);
      rows.push_back({time_label(cfg, res.times[i]), v.v1.value(), v.v2.value(), n.n_a, n.n_b,
                      std::abs(rho.trace() - 1.0), fock::tail_population(rho)});
    }
    if (res.failure) comments.push_back("stopped: " + res.failure->reason);
    if (!cfg.dump.empty() && !res.states.empty()) {
      fock::write_density_binary(cfg.dump, res.states.back().matrix());
      comments.push_back("final density matrix written to " + cfg.dump);
    }
  } else {
    throw UsageError("--engine must be 'normal' or 'product', got '" + cfg.engine + "'");
  }
  fock::write_trajectory_csv(out, rows, comments);
  return 0;
}

}  // namespace ndpo::cli
