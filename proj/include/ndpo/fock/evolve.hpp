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

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ndpo/fock/liouvillian.hpp"

namespace ndpo::fock {

/// Raised by the steady-state solver when the generator has no unique,
/// normalizable stationary state (threshold, rank deficiency, bad residual).
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolveOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  /// First trial step; 0 picks one from the generator norm.
  double initial_step = 0.0;
  /// Steps below min_step_rel * (t_end - t_start) count as underflow.
  double min_step_rel = 1e-14;
  std::size_t max_steps = 50'000'000;
  /// Integration stops once the top Fock layer holds more than this.
  double divergence_tail = 1e-2;
  /// Replace rho by (rho + rho^dag)/2 after every accepted step.
  bool resymmetrize = true;
};

struct IntegrationFailure {
  double last_good_time = 0.0;
  std::string reason;
};

struct EvolutionStats {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evaluations = 0;
};

struct EvolutionResult {
  /// Grid times reached, in order; states[i] belongs to times[i].
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::optional<IntegrationFailure> failure;
  EvolutionStats stats;
};

using EvolutionObserver = std::function<void(double, const DensityMatrix&)>;

/// Integrates d vec(rho)/dt = L vec(rho) with the Dormand-Prince 5(4) pair
/// and calls `observer` at every grid time. `t_grid` must start at 0 and be
/// nondecreasing. Returns the failure report (if any) and step statistics;
/// `times`/`states` stay empty.
EvolutionResult evolve(const Liouvillian& L, const DensityMatrix& rho0,
                       const std::vector<double>& t_grid,
                       const EvolveOptions& opts,
                       const EvolutionObserver& observer);

/// Same as above but stores every grid state in the result.
EvolutionResult evolve(const Liouvillian& L, const DensityMatrix& rho0,
                       const std::vector<double>& t_grid,
                       const EvolveOptions& opts = {});

struct SteadyStateOptions {
  /// Bound on ||L rho||_inf / (||L||_inf ||rho||_inf).
  double residual_tol = 1e-10;
};

/// Solves L rho = 0 with tr rho = 1 by a sparse LU factorization in which
/// the first diagonal row is replaced by the trace functional. Refuses
/// generators known to be at or above threshold.
DensityMatrix steady_state(const Liouvillian& L,
                           const SteadyStateOptions& opts = {});

}  // namespace ndpo::fock
