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

#include <iosfwd>
#include <string>
#include <vector>

#include "ndpo/fock/density_matrix.hpp"

namespace ndpo::fock {

struct TrajectoryRow {
  double t = 0.0;
  double v1 = 1.0;
  double v2 = 1.0;
  double n_a = 0.0;
  double n_b = 0.0;
  double trace_err = 0.0;
  double tail_pop = 0.0;
};

/// Writes `# `-prefixed comment lines, then the header
/// t,v1,v2,n_a,n_b,trace_err,tail_pop and one row per entry (%.12g).
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows,
                          const std::vector<std::string>& comments = {});

/// Binary dump: uint64 dimension D, then D*D (re, im) pairs of float64 in
/// row-major order, all little-endian.
void write_density_binary(std::ostream& os, const CMatrix& rho);
void write_density_binary(const std::string& path, const CMatrix& rho);
/// Inverse of write_density_binary. Throws std::runtime_error on a short or
/// malformed stream.
CMatrix read_density_binary(std::istream& is);
CMatrix read_density_binary(const std::string& path);

/// printf("%.12g") of one value.
std::string format_number(double value);

}  // namespace ndpo::fock
