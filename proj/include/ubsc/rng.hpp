// Copyright (c) 2026 The ubsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ubsc/error.hpp"

namespace ubsc {

// Seeded random source. The sampling algorithms are spelled out here instead
// of using std <random> distributions, whose output is implementation
// defined; every draw consumes a pinned number of engine words, so a seed
// fully determines all results.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). Rejection from the smallest covering power of two.
  uint64_t uniform_below(uint64_t n) {
    if (n == 0) throw NumericError("uniform_below: empty range");
    if (n == 1) return 0;
    uint64_t mask = ~uint64_t{0} >> std::countl_zero(n - 1);
    for (;;) {
      uint64_t draw = engine_() & mask;
      if (draw < n) return draw;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal, Marsaglia polar method. Values come in pairs; the spare
  // is cached so the consumption pattern is still a pure function of the seed.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // k distinct indices drawn uniformly from [0, n) by partial Fisher-Yates.
  std::vector<uint64_t> sample_without_replacement(uint64_t n, uint64_t k) {
    if (k > n) throw DataError("sample_without_replacement: k exceeds population");
    std::vector<uint64_t> idx(n);
    std::iota(idx.begin(), idx.end(), uint64_t{0});
    for (uint64_t i = 0; i < k; ++i) {
      uint64_t j = i + uniform_below(n - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ubsc
