/*
 * Copyright 2026 The listdist authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace listdist {

/// Table of harmonic numbers H_s = sum_{j=1..s} 1/j.
///
/// Entries are accumulated in extended precision and rounded once, so
/// table[s] - table[s-1] stays within one rounding step of 1/s.  Lookups
/// take a shared lock; growth is geometric and serialized.  Indices above
/// `max_entries` fall back to the asymptotic expansion
/// ln s + gamma + 1/(2s) - 1/(12 s^2), whose error is negligible at that
/// magnitude.
class HarmonicCache {
 public:
  static constexpr std::uint64_t kDefaultMaxEntries = 4'000'000;

  explicit HarmonicCache(std::uint64_t max_entries = kDefaultMaxEntries);

  /// H_s. Total on all nonnegative s.
  double value(std::uint64_t s) const;

  /// Largest index currently materialized in the table.
  std::uint64_t materialized() const;

  std::uint64_t max_entries() const { return max_entries_; }

  /// Process-wide cache used by the free functions below.
  static HarmonicCache& shared();

 private:
  void grow(std::uint64_t s) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<double> table_;     // table_[s] == H_s
  mutable long double tail_ = 0.0L;       // H_{materialized()} in extended precision
  std::uint64_t max_entries_;
};

/// H_s via the shared cache.
double harmonic(std::uint64_t s);

/// delta(a,b,c) = sum_{i=a..b} |c-i|/(c+i), evaluated by the three-branch
/// closed form over harmonic numbers:
///
///   c < a      :  (b-a+1) - 2c (H_{b+c} - H_{a+c-1})
///   a <= c <= b:  2c (2 H_{2c} - H_{a+c-1} - H_{b+c}) + (a+b-2c-1)
///   c > b      :  2c (H_{b+c} - H_{a+c-1}) - (b-a+1)
///
/// Arguments must be positive with a <= b.
double delta(std::int64_t a, std::int64_t b, std::int64_t c);

/// Literal O(b-a) summation of |c-i|/(c+i); the reference for `delta`.
double delta_oracle(std::int64_t a, std::int64_t b, std::int64_t c);

/// epsilon_k(s) = sum_{j=1..s} j H_{j+k}
///              = (s-k)(s+k+1)/2 H_{s+k+1} + k(k+1)/2 H_{k+1} + s(2k-s-1)/4.
double epsilon(std::int64_t k, std::int64_t s);

/// xi(s) = sum_{j=1..s} 2j H_{2j}
///       = (s+1/2)^2 H_{2s+1} - H_s/8 - (2s^2+s+1)/4.
double xi(std::int64_t s);

/// theta(alpha,beta,gamma) = sum_{u=alpha..gamma} sum_{v=beta..gamma} |u-v|/(u+v).
///
/// Symmetric in (alpha, beta); the arguments are normalized before
/// evaluation so both orders run the same code path.  Each lower bound
/// must not exceed gamma.
double theta(std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

}  // namespace listdist
