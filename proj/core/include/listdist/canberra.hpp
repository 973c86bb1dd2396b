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

#include "listdist/list_model.hpp"

namespace listdist {

/// Canberra distance between two partial lists, decomposed by where each
/// feature lives relative to the pair:
///
///   t1  - features in both lists (rank disagreement term)
///   t2  - features in exactly one list (averaged against the missing side)
///   t3  - features in neither list, scaled by the coefficient
///         A = |F \ (L1 u L2)| / ((p - l1)(p - l2))
///
/// core = t1 + t2, complete = t1 + t2 + t3; the normalized variants divide
/// by the expected Canberra distance over the full permutation group.
/// Lengths are reported with l1 <= l2, the order the formulas assume.
struct DistanceBreakdown {
  std::int64_t p = 0;
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double a_coefficient = 0.0;
  double core = 0.0;
  double complete = 0.0;
  double core_normalized = 0.0;
  double complete_normalized = 0.0;
};

/// Canberra distance between two complete lists (full permutations):
/// sum_i |tau(i) - sigma(i)| / (tau(i) + sigma(i)).
double permutation_distance(const RankedList& sigma, const RankedList& tau);

/// Mean Canberra distance between two uniformly random permutations of
/// S_p: (2p+2+1/(2p)) H_{2p} - (2p+2+1/(4p)) H_p - (p+3/2).
double expected_value(std::int64_t p);

/// Closed-form Complete/Core Canberra distance between partial lists,
/// defined as the mean permutation distance over all pairs of completions.
/// Symmetric in its arguments; rejects empty lists.
DistanceBreakdown partial_distance(const RankedList& first, const RankedList& second);

/// Covers every p <= 8 pairing of nonempty lists (7!^2 completion pairs).
inline constexpr std::uint64_t kDefaultCosetBudget = 25'401'600;

/// Ground truth by literal enumeration: completes both lists to full
/// permutations in every possible way and averages the permutation
/// distance.  Fails with BudgetError when (p-l1)!(p-l2)! exceeds the
/// budget.
double coset_oracle(const RankedList& first, const RankedList& second,
                    std::uint64_t pair_budget = kDefaultCosetBudget);

/// Mid-level oracle: the same per-feature decomposition as
/// `partial_distance`, with every closed form replaced by a raw loop.
/// Bridges the coset enumeration (tiny p) and the closed form (any p).
DistanceBreakdown term_sum_oracle(const RankedList& first, const RankedList& second,
                                  std::int64_t p_budget = 5000);

}  // namespace listdist
