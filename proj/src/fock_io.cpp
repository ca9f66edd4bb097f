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

#include "ndpo/fock/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ndpo::fock {

namespace {

template <typename T>
void put_le(std::ostream& os, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& is) {
  unsigned char bytes[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw std::runtime_error("density matrix dump is truncated");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows,
                          const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "t,v1,v2,n_a,n_b,trace_err,tail_pop\n";
  for (const auto& r : rows) {
    os << format_number(r.t) << ',' << format_number(r.v1) << ','
       << format_number(r.v2) << ',' << format_number(r.n_a) << ','
       << format_number(r.n_b) << ',' << format_number(r.trace_err) << ','
       << format_number(r.tail_pop) << '\n';
  }
}

void write_density_binary(std::ostream& os, const CMatrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("matrix is not square");
  put_le<std::uint64_t>(os, static_cast<std::uint64_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      put_le<double>(os, rho(i, j).real());
      put_le<double>(os, rho(i, j).imag());
    }
  }
}

void write_density_binary(const std::string& path, const CMatrix& rho) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_density_binary(os, rho);
}

CMatrix read_density_binary(std::istream& is) {
  const auto d = get_le<std::uint64_t>(is);
  if (d == 0 || d > (1u << 20)) {
    throw std::runtime_error("density matrix dump has an invalid dimension");
  }
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix rho(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = get_le<double>(is);
      const double im = get_le<double>(is);
      rho(i, j) = Complex(re, im);
    }
  }
  return rho;
}

CMatrix read_density_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_density_binary(is);
}

}  // namespace ndpo::fock
