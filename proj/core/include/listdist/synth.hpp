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
#include <vector>

#include "listdist/list_model.hpp"

namespace listdist {

/// Two-class expression matrix: samples x genes, with a +1/-1 class label
/// per sample.  Genes are addressed 1-based, matching feature indices.
struct ExpressionMatrix {
  std::int64_t sample_count = 0;
  std::int64_t gene_count = 0;
  std::vector<int> labels;      // per sample, +1 or -1
  std::vector<double> values;   // row-major, sample-major

  double at(std::int64_t sample, std::int64_t gene) const {
    return values[static_cast<std::size_t>(sample * gene_count + (gene - 1))];
  }
  double& at(std::int64_t sample, std::int64_t gene) {
    return values[static_cast<std::size_t>(sample * gene_count + (gene - 1))];
  }
};

enum class TibVariant { tib100, tib500 };

struct TibConfig {
  TibVariant variant = TibVariant::tib100;
  std::uint64_t seed = 0;
};

/// Synthetic two-class microarray benchmark: 100 samples split 50/50, with
/// 100 (tib100) or 500 (tib500) genes.  Values start standard normal; a
/// leading block of genes gets class means +1/-1; three replacement passes
/// then redraw randomly chosen gene columns around fixed means, diluting
/// part of the signal.  Deterministic for a fixed seed.
ExpressionMatrix generate_tib(const TibConfig& config);

/// Ratio of the class +1 mean to the class -1 mean for one gene.  NaN when
/// the reference class mean is zero.  `gene` is 1-based.
double fold_change(const ExpressionMatrix& m, std::int64_t gene);

/// Welch two-sample t statistic (mean1 - mean2) / sqrt(s1^2/n1 + s2^2/n2)
/// for one gene; each class needs at least two samples.  NaN when both
/// class variances vanish.
double t_statistic(const ExpressionMatrix& m, std::int64_t gene);

enum class FilterStat { fold_change, t };

struct ThresholdConfig {
  FilterStat stat = FilterStat::t;
  double theta = 0.5;             // fraction of the per-resample statistic range
  std::int64_t resamples = 100;   // B
  std::int64_t per_class = 25;    // n samples drawn from each class
  std::uint64_t seed = 0;
  bool rank_absolute = false;     // rank |t| / |log FC| instead of the raw value
};

/// Repeated-subsampling gene filter: for each of B resamples, draws n
/// samples per class, scores every gene with the chosen statistic and
/// keeps genes scoring at least min + theta * (max - min) of the observed
/// range, ranked by decreasing score (ties by ascending gene index).
/// Genes with undefined scores are excluded.  Deterministic for a fixed
/// seed; each resample has its own substream, so list r does not depend
/// on B.
ListSet threshold_lists(const ExpressionMatrix& m, const ThresholdConfig& config);

}  // namespace listdist
