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
#include "listdist/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "listdist/errors.hpp"
#include "substream_rng.hpp"

namespace listdist {

namespace {

// Stream tags of the substream scheme (see substream_rng.hpp).
constexpr std::uint64_t kStreamBaseNoise = 1;
constexpr std::uint64_t kStreamReplacementPick = 2;
constexpr std::uint64_t kStreamReplacementDraw = 3;
constexpr std::uint64_t kStreamSubsample = 4;

struct ReplacementStep {
  double probability;    // chance that a gene column in [first, last] is redrawn
  std::int64_t first;
  std::int64_t last;
  double mean;
};

struct ClassSummary {
  double mean = 0.0;
  double variance = 0.0;  // sample variance, n-1 denominator
  std::int64_t count = 0;
};

ClassSummary summarize(const ExpressionMatrix& m, std::int64_t gene, int label,
                       std::span<const std::int64_t> samples) {
  ClassSummary out;
  double sum = 0.0;
  for (const std::int64_t s : samples) {
    if (m.labels[static_cast<std::size_t>(s)] == label) {
      sum += m.at(s, gene);
      out.count += 1;
    }
  }
  if (out.count == 0) {
    return out;
  }
  out.mean = sum / static_cast<double>(out.count);
  double squares = 0.0;
  for (const std::int64_t s : samples) {
    if (m.labels[static_cast<std::size_t>(s)] == label) {
      const double d = m.at(s, gene) - out.mean;
      squares += d * d;
    }
  }
  out.variance = out.count > 1 ? squares / static_cast<double>(out.count - 1) : 0.0;
  return out;
}

std::vector<std::int64_t> all_samples(const ExpressionMatrix& m) {
  std::vector<std::int64_t> samples(static_cast<std::size_t>(m.sample_count));
  for (std::int64_t s = 0; s < m.sample_count; ++s) {
    samples[static_cast<std::size_t>(s)] = s;
  }
  return samples;
}

double fold_change_on(const ExpressionMatrix& m, std::int64_t gene,
                      std::span<const std::int64_t> samples) {
  const ClassSummary pos = summarize(m, gene, +1, samples);
  const ClassSummary neg = summarize(m, gene, -1, samples);
  if (pos.count == 0 || neg.count == 0) {
    throw InsufficientDataError("fold change requires samples from both classes");
  }
  if (neg.mean == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return pos.mean / neg.mean;
}

double t_statistic_on(const ExpressionMatrix& m, std::int64_t gene,
                      std::span<const std::int64_t> samples) {
  const ClassSummary pos = summarize(m, gene, +1, samples);
  const ClassSummary neg = summarize(m, gene, -1, samples);
  if (pos.count < 2 || neg.count < 2) {
    throw InsufficientDataError("t statistic requires at least two samples per class");
  }
  const double scale = pos.variance / static_cast<double>(pos.count) +
                       neg.variance / static_cast<double>(neg.count);
  if (scale == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (pos.mean - neg.mean) / std::sqrt(scale);
}

void check_gene(const ExpressionMatrix& m, std::int64_t gene) {
  if (gene < 1 || gene > m.gene_count) {
    throw ValidationError("gene index " + std::to_string(gene) + " outside [1.." +
                          std::to_string(m.gene_count) + "]");
  }
}

}  // namespace

ExpressionMatrix generate_tib(const TibConfig& config) {
  const bool small = config.variant == TibVariant::tib100;
  const std::int64_t genes = small ? 100 : 500;
  const std::int64_t discriminant = small ? 20 : 50;
  const std::vector<ReplacementStep> steps = small
      ? std::vector<ReplacementStep>{{0.40, 21, 40, -1.0}, {0.50, 41, 60, 1.0}, {0.70, 61, 70, 0.5}}
      : std::vector<ReplacementStep>{{0.40, 21, 50, -1.0}, {0.50, 51, 150, 1.0}, {0.70, 151, 250, 0.5}};

  ExpressionMatrix m;
  m.sample_count = 100;
  m.gene_count = genes;
  m.labels.resize(100);
  for (std::int64_t s = 0; s < 100; ++s) {
    m.labels[static_cast<std::size_t>(s)] = s < 50 ? +1 : -1;
  }
  m.values.resize(static_cast<std::size_t>(100 * genes));

  // One noise substream per gene column, drawn in sample order.
  for (std::int64_t g = 1; g <= genes; ++g) {
    internal::SubstreamRng rng(config.seed, kStreamBaseNoise, static_cast<std::uint64_t>(g));
    for (std::int64_t s = 0; s < 100; ++s) {
      double value = rng.normal();
      if (g <= discriminant) {
        value += s < 50 ? 1.0 : -1.0;
      }
      m.at(s, g) = value;
    }
  }

  // Replacement passes: each gene in the step's range is independently
  // selected with the step probability, then its whole column is redrawn
  // around the step mean.
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    for (std::int64_t g = step.first; g <= step.last; ++g) {
      const std::uint64_t slot = static_cast<std::uint64_t>(k + 1) * 1'000'000 +
                                 static_cast<std::uint64_t>(g);
      internal::SubstreamRng pick(config.seed, kStreamReplacementPick, slot);
      if (pick.uniform01() >= step.probability) {
        continue;
      }
      internal::SubstreamRng draw(config.seed, kStreamReplacementDraw, slot);
      for (std::int64_t s = 0; s < 100; ++s) {
        m.at(s, g) = draw.normal(step.mean, 1.0);
      }
    }
  }
  return m;
}

double fold_change(const ExpressionMatrix& m, std::int64_t gene) {
  check_gene(m, gene);
  return fold_change_on(m, gene, all_samples(m));
}

double t_statistic(const ExpressionMatrix& m, std::int64_t gene) {
  check_gene(m, gene);
  return t_statistic_on(m, gene, all_samples(m));
}

ListSet threshold_lists(const ExpressionMatrix& m, const ThresholdConfig& config) {
  if (!(config.theta >= 0.0 && config.theta <= 1.0)) {
    throw ValidationError("theta must lie in [0, 1]");
  }
  if (config.resamples < 1) {
    throw ValidationError("resample count must be positive");
  }
  std::vector<std::int64_t> positives;
  std::vector<std::int64_t> negatives;
  for (std::int64_t s = 0; s < m.sample_count; ++s) {
    (m.labels[static_cast<std::size_t>(s)] == +1 ? positives : negatives).push_back(s);
  }
  const std::int64_t n = config.per_class;
  const std::int64_t smallest =
      std::min<std::int64_t>(static_cast<std::int64_t>(positives.size()),
                             static_cast<std::int64_t>(negatives.size()));
  const std::int64_t minimum = config.stat == FilterStat::t ? 2 : 1;
  if (n < minimum || n > smallest) {
    throw ValidationError("per-class sample count " + std::to_string(n) + " outside [" +
                          std::to_string(minimum) + ".." + std::to_string(smallest) + "]");
  }

  auto universe = std::make_shared<const FeatureUniverse>(m.gene_count);
  std::vector<RankedList> lists;
  lists.reserve(static_cast<std::size_t>(config.resamples));

  for (std::int64_t r = 0; r < config.resamples; ++r) {
    internal::SubstreamRng rng(config.seed, kStreamSubsample, static_cast<std::uint64_t>(r));
    auto chosen = rng.sample_without_replacement(positives, static_cast<std::size_t>(n));
    auto chosen_neg = rng.sample_without_replacement(negatives, static_cast<std::size_t>(n));
    chosen.insert(chosen.end(), chosen_neg.begin(), chosen_neg.end());

    std::vector<double> scores(static_cast<std::size_t>(m.gene_count),
                               std::numeric_limits<double>::quiet_NaN());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::int64_t g = 1; g <= m.gene_count; ++g) {
      double score = config.stat == FilterStat::t ? t_statistic_on(m, g, chosen)
                                                  : fold_change_on(m, g, chosen);
      if (config.rank_absolute && !std::isnan(score)) {
        if (config.stat == FilterStat::fold_change) {
          score = score > 0.0 ? std::abs(std::log(score))
                              : std::numeric_limits<double>::quiet_NaN();
        } else {
          score = std::abs(score);
        }
      }
      scores[static_cast<std::size_t>(g - 1)] = score;
      if (!std::isnan(score)) {
        lo = std::min(lo, score);
        hi = std::max(hi, score);
      }
    }

    std::vector<std::int64_t> kept;
    if (lo <= hi) {  // at least one defined score
      // Clamp so rounding cannot push the cutoff past the observed maximum.
      const double cutoff = std::min(lo + config.theta * (hi - lo), hi);
      for (std::int64_t g = 1; g <= m.gene_count; ++g) {
        const double score = scores[static_cast<std::size_t>(g - 1)];
        if (!std::isnan(score) && score >= cutoff) {
          kept.push_back(g);
        }
      }
      std::stable_sort(kept.begin(), kept.end(), [&](std::int64_t a, std::int64_t b) {
        return scores[static_cast<std::size_t>(a - 1)] > scores[static_cast<std::size_t>(b - 1)];
      });
    }
    lists.emplace_back(universe, std::move(kept));
  }
  return ListSet(universe, std::move(lists));
}

}  // namespace listdist
