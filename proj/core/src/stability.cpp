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
#include "listdist/stability.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>
#include <utility>

#include "compensated.hpp"
#include "listdist/errors.hpp"

namespace listdist {

namespace {

double select_metric(const DistanceBreakdown& d, StabilityMetric metric) {
  switch (metric) {
    case StabilityMetric::core:
      return d.core;
    case StabilityMetric::complete:
      return d.complete;
    case StabilityMetric::core_normalized:
      return d.core_normalized;
    case StabilityMetric::complete_normalized:
      return d.complete_normalized;
  }
  return d.core;
}

}  // namespace

std::string to_string(StabilityMetric metric) {
  switch (metric) {
    case StabilityMetric::core:
      return "core";
    case StabilityMetric::complete:
      return "complete";
    case StabilityMetric::core_normalized:
      return "core_normalized";
    case StabilityMetric::complete_normalized:
      return "complete_normalized";
  }
  return "core";
}

StabilityReport stability_matrix(const ListSet& set, StabilityMetric metric) {
  const std::int64_t b = set.size();
  if (b < 2) {
    throw InsufficientDataError("stability matrix requires at least two lists");
  }
  for (std::int64_t i = 0; i < b; ++i) {
    if (set[i].empty()) {
      throw InsufficientDataError("stability matrix rejects empty lists (list " +
                                  std::to_string(i + 1) + " is empty)");
    }
  }

  StabilityReport report;
  report.metric = metric;
  report.list_count = b;
  report.matrix.assign(static_cast<std::size_t>(b * b), 0.0);

  // Upper triangle plus diagonal, as flat work items.
  std::vector<std::pair<std::int64_t, std::int64_t>> work;
  work.reserve(static_cast<std::size_t>(b * (b + 1) / 2));
  for (std::int64_t i = 0; i < b; ++i) {
    for (std::int64_t j = i; j < b; ++j) {
      work.emplace_back(i, j);
    }
  }

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t w = begin; w < end; ++w) {
      const auto [i, j] = work[w];
      const double value = select_metric(partial_distance(set[i], set[j]), metric);
      report.matrix[static_cast<std::size_t>(i * b + j)] = value;
      report.matrix[static_cast<std::size_t>(j * b + i)] = value;
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  if (work.size() >= 64 && hw > 1) {
    const std::size_t workers = std::min<std::size_t>(hw, 8);
    const std::size_t chunk = (work.size() + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(begin + chunk, work.size());
      if (begin >= end) break;
      threads.emplace_back(run, begin, end);
    }
    for (auto& thread : threads) thread.join();
  } else {
    run(0, work.size());
  }

  internal::CompensatedSum sum;
  for (std::int64_t i = 0; i < b; ++i) {
    for (std::int64_t j = i + 1; j < b; ++j) {
      sum.add(report.at(i, j));
    }
  }
  report.indicator = sum.value() / (static_cast<double>(b) * static_cast<double>(b - 1) / 2.0);
  return report;
}

std::vector<std::int64_t> BordaTable::ranking() const {
  std::vector<std::int64_t> order;
  order.reserve(rows.size());
  for (const auto& row : rows) {
    order.push_back(row.feature);
  }
  return order;
}

BordaTable borda(const ListSet& set) {
  struct Tally {
    std::int64_t extractions = 0;
    std::int64_t rank_total = 0;
  };
  std::unordered_map<std::int64_t, Tally> tally;
  for (const auto& list : set) {
    const auto items = list.items();
    for (std::size_t r = 0; r < items.size(); ++r) {
      auto& entry = tally[items[r]];
      entry.extractions += 1;
      entry.rank_total += static_cast<std::int64_t>(r) + 1;
    }
  }

  BordaTable table;
  table.rows.reserve(tally.size());
  for (const auto& [feature, entry] : tally) {
    table.rows.push_back({feature, entry.extractions,
                          static_cast<double>(entry.rank_total) /
                              static_cast<double>(entry.extractions)});
  }
  // Tie-break on average position with exact integer cross products.
  auto position_less = [&](const BordaRow& a, const BordaRow& b) {
    const auto& ta = tally.at(a.feature);
    const auto& tb = tally.at(b.feature);
    return ta.rank_total * tb.extractions < tb.rank_total * ta.extractions;
  };
  std::sort(table.rows.begin(), table.rows.end(),
            [&](const BordaRow& a, const BordaRow& b) {
              if (a.extractions != b.extractions) return a.extractions > b.extractions;
              if (position_less(a, b)) return true;
              if (position_less(b, a)) return false;
              return a.feature < b.feature;
            });
  return table;
}

}  // namespace listdist
