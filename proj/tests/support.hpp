// Copyright 2026 The ppsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations used to cross-check the library. Nothing
// here calls into the code under test beyond plain data types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ppsim/demod.hpp"
#include "ppsim/error.hpp"

namespace ppsim::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PPSIM_DATA_DIR) / name;
}

/// Error category thrown by `fn`; records a test failure if nothing is thrown.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ppsim::Error thrown";
  return ErrorCode::kIo;
}

/// Direct recurrence a_{n+s} = sum_k c_k a_{n+k} over GF(2); `poly` lists
/// coefficients from x^s down to x^0.
inline std::vector<int> lfsr_recurrence(const std::vector<int>& poly, std::vector<int> seed) {
  const int s = static_cast<int>(poly.size()) - 1;
  const std::size_t period = (std::size_t{1} << s) - 1;
  std::vector<int> a = std::move(seed);
  while (a.size() < period) {
    const std::size_t n = a.size() - s;
    int next = 0;
    for (int k = 0; k < s; ++k) next ^= poly[s - k] & a[n + k];
    a.push_back(next);
  }
  return a;
}

/// Rows 0..N-1: zero row, then left rotations of `base` with a trailing 0.
inline std::vector<std::vector<int>> rows_from_base(const std::vector<int>& base) {
  const std::size_t n = base.size() + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) rows[j][k] = base[(k + j - 1) % base.size()];
  }
  return rows;
}

inline std::complex<double> correlate_bits(const std::vector<int>& a, const std::vector<int>& b,
                                           double phase) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::polar(1.0, phase * (a[k] - b[k]));
  return sum / static_cast<double>(a.size());
}

inline int quantize(std::complex<double> raw, double tau) {
  if (std::abs(raw.real()) < tau) return 0;
  return raw.real() > 0 ? 1 : -1;
}

/// Smallest r > 0 with a^r = 1 mod n, by repeated multiplication.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t v = a % n;
  std::uint64_t r = 1;
  while (v != 1) {
    v = v * a % n;
    ++r;
  }
  return r;
}

/// Coefficients of sum_r prod_i (status_i at column ((i + r - 2) mod n) + 1),
/// expanded basis string by basis string and divided by their GCD.
inline std::map<std::string, long long> expand_states(const ModeStatusMatrix& m) {
  const std::size_t n = m.rows();
  std::map<std::string, long long> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) bits[i] = ((x >> (n - 1 - i)) & 1U) ? '1' : '0';
    long long total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
      long long prod = 1;
      for (std::size_t i = 1; i <= n; ++i) {
        const ModeStatus& st = m.at(i - 1, (i + r - 2) % n);
        prod *= bits[i - 1] == '1' ? st.b : st.a;
      }
      total += prod;
    }
    if (total != 0) out[bits] = total;
  }
  long long g = 0;
  for (const auto& [k, v] : out) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1) {
    for (auto& [k, v] : out) v /= g;
  }
  return out;
}

}  // namespace ppsim::testing
