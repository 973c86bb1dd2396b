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
#include "listdist/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "listdist/errors.hpp"

namespace listdist {

namespace {

constexpr double kEulerMascheroni = 0.577215664901532860606512090082;

double asymptotic_harmonic(std::uint64_t s) {
  const double x = static_cast<double>(s);
  return std::log(x) + kEulerMascheroni + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
}

}  // namespace

HarmonicCache::HarmonicCache(std::uint64_t max_entries)
    : max_entries_(std::max<std::uint64_t>(max_entries, 1)) {
  table_.reserve(1024);
  table_.push_back(0.0);  // H_0
}

double HarmonicCache::value(std::uint64_t s) const {
  if (s > max_entries_) {
    return asymptotic_harmonic(s);
  }
  {
    std::shared_lock lock(mutex_);
    if (s < table_.size()) {
      return table_[s];
    }
  }
  grow(s);
  std::shared_lock lock(mutex_);
  return table_[s];
}

std::uint64_t HarmonicCache::materialized() const {
  std::shared_lock lock(mutex_);
  return table_.size() - 1;
}

void HarmonicCache::grow(std::uint64_t s) const {
  std::unique_lock lock(mutex_);
  if (s < table_.size()) {
    return;  // another thread got here first
  }
  std::uint64_t target = std::max<std::uint64_t>(s + 1, table_.size() * 2);
  target = std::min<std::uint64_t>(target, max_entries_ + 1);
  table_.reserve(target);
  for (std::uint64_t j = table_.size(); j < target; ++j) {
    tail_ += 1.0L / static_cast<long double>(j);
    table_.push_back(static_cast<double>(tail_));
  }
}

HarmonicCache& HarmonicCache::shared() {
  static HarmonicCache cache;
  return cache;
}

double harmonic(std::uint64_t s) { return HarmonicCache::shared().value(s); }

double delta(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || c < 1) {
    throw ValidationError("delta: arguments must be positive");
  }
  if (a > b) {
    throw ValidationError("delta: invalid range, a > b (a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  }
  const auto& cache = HarmonicCache::shared();
  const double cd = static_cast<double>(c);
  if (c < a) {
    return static_cast<double>(b - a + 1) -
           2.0 * cd * (cache.value(b + c) - cache.value(a + c - 1));
  }
  if (c > b) {
    return 2.0 * cd * (cache.value(b + c) - cache.value(a + c - 1)) -
           static_cast<double>(b - a + 1);
  }
  return 2.0 * cd * (2.0 * cache.value(2 * c) - cache.value(a + c - 1) - cache.value(b + c)) +
         static_cast<double>(a + b - 2 * c - 1);
}

double delta_oracle(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || c < 1) {
    throw ValidationError("delta_oracle: arguments must be positive");
  }
  if (a > b) {
    throw ValidationError("delta_oracle: invalid range, a > b");
  }
  double sum = 0.0;
  for (std::int64_t i = a; i <= b; ++i) {
    sum += static_cast<double>(std::abs(c - i)) / static_cast<double>(c + i);
  }
  return sum;
}

double epsilon(std::int64_t k, std::int64_t s) {
  if (k < 0 || s < 0) {
    throw ValidationError("epsilon: arguments must be nonnegative");
  }
  const auto& cache = HarmonicCache::shared();
  const double kd = static_cast<double>(k);
  const double sd = static_cast<double>(s);
  return (sd - kd) * (sd + kd + 1.0) / 2.0 * cache.value(s + k + 1) +
         kd * (kd + 1.0) / 2.0 * cache.value(k + 1) + sd * (2.0 * kd - sd - 1.0) / 4.0;
}

double xi(std::int64_t s) {
  if (s < 0) {
    throw ValidationError("xi: argument must be nonnegative");
  }
  const auto& cache = HarmonicCache::shared();
  const double sd = static_cast<double>(s);
  const double half = sd + 0.5;
  return half * half * cache.value(2 * s + 1) - cache.value(s) / 8.0 -
         (2.0 * sd * sd + sd + 1.0) / 4.0;
}

double theta(std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
  if (alpha < 1 || beta < 1) {
    throw ValidationError("theta: lower bounds must be positive");
  }
  if (alpha > gamma || beta > gamma) {
    throw ValidationError("theta: invalid range, lower bound exceeds gamma");
  }
  const auto [lo, hi] = std::minmax(alpha, beta);
  double sum = 0.0;
  for (std::int64_t u = lo; u <= gamma; ++u) {
    sum += delta(hi, gamma, u);
  }
  return sum;
}

}  // namespace listdist
