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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "listdist/errors.hpp"
#include "listdist/stability.hpp"
#include "oracles.hpp"

using namespace listdist;

namespace {

ListSet make_set(UniversePtr universe, std::vector<std::vector<std::int64_t>> raw) {
  std::vector<RankedList> lists;
  lists.reserve(raw.size());
  for (auto& items : raw) {
    lists.emplace_back(universe, std::move(items));
  }
  return ListSet(std::move(universe), std::move(lists));
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("identical lists give a zero core matrix") {
  auto universe = testing::make_universe(20);
  auto set = make_set(universe, {{3, 1, 7}, {3, 1, 7}, {3, 1, 7}, {3, 1, 7}});
  const auto report = stability_matrix(set, StabilityMetric::core);
  CHECK(report.indicator == 0.0);
  for (std::int64_t i = 0; i < report.list_count; ++i) {
    for (std::int64_t j = 0; j < report.list_count; ++j) {
      CHECK(report.at(i, j) == 0.0);
    }
  }
}

TEST_CASE("two lists reduce to the single pairwise distance") {
  auto universe = testing::make_universe(12);
  auto set = make_set(universe, {{1, 2, 3}, {4, 2}});
  const auto report = stability_matrix(set, StabilityMetric::complete);
  const double direct = partial_distance(set[0], set[1]).complete;
  CHECK(report.indicator == direct);
  CHECK(report.at(0, 1) == direct);
  CHECK(report.at(1, 0) == direct);
}

TEST_CASE("indicator equals the mean of coset enumerations at p=7") {
  std::mt19937_64 rng(2);
  auto universe = testing::make_universe(7);
  std::vector<RankedList> lists;
  for (int i = 0; i < 3; ++i) {
    lists.push_back(testing::random_list(universe, 2 + (i % 2), rng));
  }
  ListSet set(universe, lists);
  const auto report = stability_matrix(set, StabilityMetric::complete);
  const double mean = (coset_oracle(lists[0], lists[1]) + coset_oracle(lists[0], lists[2]) +
                       coset_oracle(lists[1], lists[2])) /
                      3.0;
  CHECK(std::abs(report.indicator - mean) <= 1e-9);
}

TEST_CASE("matrix is symmetric with the metric on the diagonal") {
  auto universe = testing::make_universe(30);
  auto set = make_set(universe, {{1, 2, 3}, {2, 1, 3}, {9, 8}});
  for (const auto metric : {StabilityMetric::core, StabilityMetric::complete,
                            StabilityMetric::core_normalized,
                            StabilityMetric::complete_normalized}) {
    const auto report = stability_matrix(set, metric);
    for (std::int64_t i = 0; i < report.list_count; ++i) {
      for (std::int64_t j = 0; j < report.list_count; ++j) {
        CHECK(report.at(i, j) == report.at(j, i));
      }
    }
    if (metric == StabilityMetric::core || metric == StabilityMetric::core_normalized) {
      for (std::int64_t i = 0; i < report.list_count; ++i) {
        CHECK(report.at(i, i) == 0.0);
      }
    }
  }
}

TEST_CASE("complete self-distance of a partial list stays positive") {
  auto universe = testing::make_universe(50);
  auto set = make_set(universe, {{1, 2, 3}, {1, 2, 3}});
  const auto complete = stability_matrix(set, StabilityMetric::complete);
  CHECK(complete.indicator > 0.0);
  const auto core = stability_matrix(set, StabilityMetric::core);
  CHECK(core.indicator == 0.0);

  // Complete identical permutations have zero distance under both kinds.
  auto full = make_set(testing::make_universe(4), {{1, 2, 3, 4}, {1, 2, 3, 4}});
  CHECK(stability_matrix(full, StabilityMetric::complete).indicator == 0.0);
  CHECK(stability_matrix(full, StabilityMetric::core).indicator == 0.0);
}

TEST_CASE("indicator is invariant under list reordering") {
  std::mt19937_64 rng(17);
  auto universe = testing::make_universe(25);
  std::vector<RankedList> lists;
  for (int i = 0; i < 6; ++i) {
    lists.push_back(testing::random_list(universe, 4 + (i % 3), rng));
  }
  const auto base = stability_matrix(ListSet(universe, lists), StabilityMetric::complete);

  std::vector<std::size_t> order{5, 2, 0, 4, 1, 3};
  std::vector<RankedList> shuffled;
  for (const auto i : order) shuffled.push_back(lists[i]);
  const auto permuted = stability_matrix(ListSet(universe, shuffled), StabilityMetric::complete);

  CHECK(base.indicator == permuted.indicator);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      CHECK(permuted.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) ==
            base.at(static_cast<std::int64_t>(order[i]), static_cast<std::int64_t>(order[j])));
    }
  }
}

TEST_CASE("parallel fill matches the serial path") {
  std::mt19937_64 rng(31);
  auto universe = testing::make_universe(40);
  std::vector<RankedList> lists;
  for (int i = 0; i < 14; ++i) {  // 105 work items, crosses the parallel threshold
    lists.push_back(testing::random_list(universe, 3 + (i % 5), rng));
  }
  ListSet set(universe, lists);
  const auto a = stability_matrix(set, StabilityMetric::complete);
  const auto b = stability_matrix(set, StabilityMetric::complete);
  CHECK(a.matrix == b.matrix);
  CHECK(a.indicator == b.indicator);
}

TEST_CASE("stability rejects thin input") {
  auto universe = testing::make_universe(5);
  auto single = make_set(universe, {{1, 2}});
  CHECK_THROWS_AS(stability_matrix(single, StabilityMetric::core), InsufficientDataError);
  auto with_empty = make_set(universe, {{1, 2}, {}});
  CHECK_THROWS_AS(stability_matrix(with_empty, StabilityMetric::core), InsufficientDataError);
}

TEST_CASE("borda ranks the hand example") {
  // L1=(A,B), L2=(B,C), L3=(A,C) on tokens A,B,C: every feature is in two
  // lists; average positions 1, 1.5 and 2 order them A, B, C.
  auto universe = std::make_shared<const FeatureUniverse>(std::vector<std::string>{"A", "B", "C"});
  std::vector<RankedList> lists;
  lists.push_back(RankedList::from_tokens(universe, std::vector<std::string>{"A", "B"}));
  lists.push_back(RankedList::from_tokens(universe, std::vector<std::string>{"B", "C"}));
  lists.push_back(RankedList::from_tokens(universe, std::vector<std::string>{"A", "C"}));
  const auto table = borda(ListSet(universe, std::move(lists)));

  REQUIRE(table.rows.size() == 3);
  CHECK(table.ranking() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(table.rows[0].extractions == 2);
  CHECK(table.rows[1].extractions == 2);
  CHECK(table.rows[2].extractions == 2);
  CHECK(table.rows[0].mean_position == 1.0);
  CHECK(table.rows[1].mean_position == 1.5);
  CHECK(table.rows[2].mean_position == 2.0);
}

TEST_CASE("borda of identical copies echoes the list") {
  auto universe = testing::make_universe(10);
  auto set = make_set(universe, {{7, 3, 9}, {7, 3, 9}, {7, 3, 9}});
  const auto table = borda(set);
  CHECK(table.ranking() == std::vector<std::int64_t>{7, 3, 9});
  for (const auto& row : table.rows) {
    CHECK(row.extractions == 3);
  }
  CHECK(table.rows[0].mean_position == 1.0);
  CHECK(table.rows[1].mean_position == 2.0);
  CHECK(table.rows[2].mean_position == 3.0);
}

TEST_CASE("borda of a single list echoes the list") {
  auto universe = testing::make_universe(6);
  auto set = make_set(universe, {{5, 1, 4}});
  const auto table = borda(set);
  CHECK(table.ranking() == std::vector<std::int64_t>{5, 1, 4});
  CHECK(table.rows[0].extractions == 1);
}

TEST_CASE("borda excludes unseen features and breaks ties by index") {
  auto universe = testing::make_universe(9);
  // 4 and 6 tie on extractions and mean position; index orders them.
  auto set = make_set(universe, {{6, 2}, {4, 2}});
  const auto table = borda(set);
  CHECK(table.rows.size() == 3);
  CHECK(table.ranking() == std::vector<std::int64_t>{2, 4, 6});
}

TEST_CASE("borda is deterministic across runs") {
  std::mt19937_64 rng(101);
  auto universe = testing::make_universe(50);
  std::vector<RankedList> lists;
  for (int i = 0; i < 10; ++i) {
    lists.push_back(testing::random_list(universe, 8, rng));
  }
  ListSet set(universe, lists);
  const auto first = borda(set);
  const auto second = borda(set);
  CHECK(first.ranking() == second.ranking());
  // A total order over every extracted feature.
  std::vector<std::int64_t> sorted = first.ranking();
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

}  // TEST_SUITE
