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
#include "listdist/metrics.hpp"

#include <cmath>

#include "listdist/errors.hpp"

namespace listdist {

double mcc(const ConfusionCounts& c) {
  if (c.tp < 0 || c.fp < 0 || c.fn < 0 || c.tn < 0) {
    throw ValidationError("confusion counts must be nonnegative");
  }
  if (c.tp + c.fp + c.fn + c.tn == 0) {
    throw InsufficientDataError("mcc is undefined for all-zero counts");
  }
  const double tp = static_cast<double>(c.tp);
  const double fp = static_cast<double>(c.fp);
  const double fn = static_cast<double>(c.fn);
  const double tn = static_cast<double>(c.tn);
  const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denom == 0.0) {
    return 0.0;
  }
  return (tp * tn - fp * fn) / std::sqrt(denom);
}

double auc(std::span<const double> positive_scores, std::span<const double> negative_scores,
           TiePolicy ties) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw InsufficientDataError("auc requires at least one score in each class");
  }
  double wins = 0.0;
  for (const double pos : positive_scores) {
    for (const double neg : negative_scores) {
      if (pos > neg) {
        wins += 1.0;
      } else if (pos == neg && ties == TiePolicy::half) {
        wins += 0.5;
      }
    }
  }
  return wins / (static_cast<double>(positive_scores.size()) *
                 static_cast<double>(negative_scores.size()));
}

}  // namespace listdist
