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
#include <span>

namespace listdist {

/// Binary confusion matrix counts.
struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
};

/// Matthews correlation coefficient:
/// (TP*TN - FP*FN) / sqrt((TP+FP)(TP+FN)(TN+FP)(TN+FN)).
/// Returns 0 when any denominator factor vanishes (the no-information
/// value); throws on all-zero counts.
double mcc(const ConfusionCounts& counts);

enum class TiePolicy {
  strict,  // ties between a positive and a negative score count as 0
  half,    // ties count as 0.5
};

/// Wilcoxon-Mann-Whitney AUC: the fraction of (positive, negative) score
/// pairs where the positive scores higher.  Both classes must be nonempty.
double auc(std::span<const double> positive_scores, std::span<const double> negative_scores,
           TiePolicy ties = TiePolicy::strict);

}  // namespace listdist
