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
#include "listdist/canberra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "compensated.hpp"
#include "listdist/errors.hpp"
#include "listdist/harmonic.hpp"

namespace listdist {

namespace {

void require_pair(const RankedList& a, const RankedList& b) {
  if (!same_universe(a, b)) {
    throw ValidationError("distance requires lists over the same universe");
  }
  if (a.empty() || b.empty()) {
    throw InsufficientDataError("distance is undefined for empty lists");
  }
}

double abs_rank_ratio(std::int64_t u, std::int64_t v) {
  return static_cast<double>(std::abs(u - v)) / static_cast<double>(u + v);
}

/// Closed form of theta(l1+1, l2+1, p): the total Canberra contribution of
/// one unselected feature before averaging, assembled from the epsilon/xi
/// identities.  Requires l1 <= l2 <= p.
double unselected_block(std::int64_t l1, std::int64_t l2, std::int64_t p) {
  internal::CompensatedSum sum;
  sum.add(2.0 * xi(p));
  sum.add(-2.0 * xi(l2));
  sum.add(-2.0 * epsilon(l1, p));
  sum.add(2.0 * epsilon(l1, l2));
  sum.add(-2.0 * epsilon(p, p));
  sum.add(2.0 * epsilon(p, l2));
  sum.add(static_cast<double>(p + l1) * static_cast<double>(p - l2));
  sum.add(static_cast<double>(l2) * static_cast<double>(l2 + 1));
  sum.add(-static_cast<double>(p) * static_cast<double>(p + 1));
  return sum.value();
}

void finalize(DistanceBreakdown& out) {
  out.core = out.t1 + out.t2;
  out.complete = out.core + out.t3;
  const double expected = expected_value(out.p);
  out.core_normalized = out.core == 0.0 ? 0.0 : out.core / expected;
  out.complete_normalized = out.complete == 0.0 ? 0.0 : out.complete / expected;
}

/// All completions of a partial rank map: every way of assigning ranks
/// {l+1..p} to the features missing from the list.  Each row is a full
/// rank vector indexed by feature-1.
std::vector<std::vector<std::int64_t>> enumerate_completions(const RankedList& list) {
  const std::int64_t p = list.universe().size();
  std::vector<std::int64_t> base(static_cast<std::size_t>(p), 0);
  for (std::int64_t f = 1; f <= p; ++f) {
    base[static_cast<std::size_t>(f - 1)] = list.rank_of(f);
  }
  std::vector<std::int64_t> missing;
  for (std::int64_t f = 1; f <= p; ++f) {
    if (base[static_cast<std::size_t>(f - 1)] == 0) {
      missing.push_back(f);
    }
  }
  std::vector<std::int64_t> ranks;
  for (std::int64_t r = list.length() + 1; r <= p; ++r) {
    ranks.push_back(r);
  }
  std::vector<std::vector<std::int64_t>> completions;
  do {
    auto full = base;
    for (std::size_t i = 0; i < missing.size(); ++i) {
      full[static_cast<std::size_t>(missing[i] - 1)] = ranks[i];
    }
    completions.push_back(std::move(full));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return completions;
}

}  // namespace

double permutation_distance(const RankedList& sigma, const RankedList& tau) {
  require_pair(sigma, tau);
  if (!sigma.complete() || !tau.complete()) {
    throw ValidationError("permutation distance requires complete lists");
  }
  const std::int64_t p = sigma.universe().size();
  internal::CompensatedSum sum;
  for (std::int64_t f = 1; f <= p; ++f) {
    sum.add(abs_rank_ratio(sigma.rank_of(f), tau.rank_of(f)));
  }
  return sum.value();
}

double expected_value(std::int64_t p) {
  if (p < 1) {
    throw ValidationError("expected_value requires p >= 1");
  }
  const double pd = static_cast<double>(p);
  internal::CompensatedSum sum;
  sum.add((2.0 * pd + 2.0 + 1.0 / (2.0 * pd)) * harmonic(2 * p));
  sum.add(-(2.0 * pd + 2.0 + 1.0 / (4.0 * pd)) * harmonic(p));
  sum.add(-(pd + 1.5));
  return sum.value();
}

DistanceBreakdown partial_distance(const RankedList& first, const RankedList& second) {
  require_pair(first, second);
  const bool swapped = first.length() > second.length();
  const RankedList& shorter = swapped ? second : first;
  const RankedList& longer = swapped ? first : second;

  const std::int64_t p = shorter.universe().size();
  const std::int64_t l1 = shorter.length();
  const std::int64_t l2 = longer.length();
  if (l1 > p || l2 > p) {
    throw ValidationError("list longer than its universe");  // unreachable via the model
  }

  const PairDecomposition split = decompose(shorter, longer);

  DistanceBreakdown out;
  out.p = p;
  out.l1 = l1;
  out.l2 = l2;

  internal::CompensatedSum common;
  for (const std::int64_t f : split.common) {
    common.add(abs_rank_ratio(shorter.rank_of(f), longer.rank_of(f)));
  }
  out.t1 = common.value();

  // Features present in one list average a delta block against the ranks
  // the other list's completions can assign them.  The sets are empty
  // whenever the corresponding divisor would vanish.
  double only_shorter = 0.0;
  if (!split.only_first.empty()) {
    internal::CompensatedSum sum;
    for (const std::int64_t f : split.only_first) {
      sum.add(delta(l2 + 1, p, shorter.rank_of(f)));
    }
    only_shorter = sum.value() / static_cast<double>(p - l2);
  }
  double only_longer = 0.0;
  if (!split.only_second.empty()) {
    internal::CompensatedSum sum;
    for (const std::int64_t f : split.only_second) {
      sum.add(delta(l1 + 1, p, longer.rank_of(f)));
    }
    only_longer = sum.value() / static_cast<double>(p - l1);
  }
  out.t2 = only_shorter + only_longer;

  if (split.outside > 0) {
    out.a_coefficient = static_cast<double>(split.outside) /
                        (static_cast<double>(p - l1) * static_cast<double>(p - l2));
    out.t3 = out.a_coefficient * unselected_block(l1, l2, p);
  }

  finalize(out);
  return out;
}

double coset_oracle(const RankedList& first, const RankedList& second,
                    std::uint64_t pair_budget) {
  require_pair(first, second);
  const std::int64_t p = first.universe().size();

  long double pairs = 1.0L;
  for (std::int64_t j = 2; j <= p - first.length(); ++j) pairs *= j;
  for (std::int64_t j = 2; j <= p - second.length(); ++j) pairs *= j;
  if (pairs > static_cast<long double>(pair_budget)) {
    throw BudgetError("coset enumeration of " + std::to_string(static_cast<double>(pairs)) +
                      " completion pairs exceeds the budget");
  }

  const auto left = enumerate_completions(first);
  const auto right = enumerate_completions(second);
  internal::CompensatedSum total;
  for (const auto& alpha : left) {
    for (const auto& beta : right) {
      double d = 0.0;
      for (std::int64_t f = 0; f < p; ++f) {
        d += abs_rank_ratio(alpha[static_cast<std::size_t>(f)], beta[static_cast<std::size_t>(f)]);
      }
      total.add(d);
    }
  }
  return total.value() / (static_cast<double>(left.size()) * static_cast<double>(right.size()));
}

DistanceBreakdown term_sum_oracle(const RankedList& first, const RankedList& second,
                                  std::int64_t p_budget) {
  require_pair(first, second);
  const bool swapped = first.length() > second.length();
  const RankedList& shorter = swapped ? second : first;
  const RankedList& longer = swapped ? first : second;

  const std::int64_t p = shorter.universe().size();
  if (p > p_budget) {
    throw BudgetError("term summation at p=" + std::to_string(p) + " exceeds the budget of " +
                      std::to_string(p_budget));
  }
  const std::int64_t l1 = shorter.length();
  const std::int64_t l2 = longer.length();
  const PairDecomposition split = decompose(shorter, longer);

  DistanceBreakdown out;
  out.p = p;
  out.l1 = l1;
  out.l2 = l2;

  internal::CompensatedSum common;
  for (const std::int64_t f : split.common) {
    common.add(abs_rank_ratio(shorter.rank_of(f), longer.rank_of(f)));
  }
  out.t1 = common.value();

  double only_shorter = 0.0;
  if (!split.only_first.empty()) {
    internal::CompensatedSum sum;
    for (const std::int64_t f : split.only_first) {
      const std::int64_t r = shorter.rank_of(f);
      for (std::int64_t j = l2 + 1; j <= p; ++j) {
        sum.add(abs_rank_ratio(r, j));
      }
    }
    only_shorter = sum.value() / static_cast<double>(p - l2);
  }
  double only_longer = 0.0;
  if (!split.only_second.empty()) {
    internal::CompensatedSum sum;
    for (const std::int64_t f : split.only_second) {
      const std::int64_t r = longer.rank_of(f);
      for (std::int64_t j = l1 + 1; j <= p; ++j) {
        sum.add(abs_rank_ratio(r, j));
      }
    }
    only_longer = sum.value() / static_cast<double>(p - l1);
  }
  out.t2 = only_shorter + only_longer;

  if (split.outside > 0) {
    internal::CompensatedSum block;
    for (std::int64_t u = l1 + 1; u <= p; ++u) {
      for (std::int64_t v = l2 + 1; v <= p; ++v) {
        block.add(abs_rank_ratio(u, v));
      }
    }
    out.a_coefficient = static_cast<double>(split.outside) /
                        (static_cast<double>(p - l1) * static_cast<double>(p - l2));
    out.t3 = out.a_coefficient * block.value();
  }

  finalize(out);
  return out;
}

}  // namespace listdist
