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

#include <sstream>

#include "listdist/errors.hpp"
#include "listdist/list_io.hpp"
#include "listdist/list_model.hpp"
#include "oracles.hpp"

using namespace listdist;

TEST_SUITE("list_model") {

TEST_CASE("ranked list materializes the dual rank map") {
  auto universe = testing::make_universe(5);
  RankedList list(universe, {3, 1, 4});
  CHECK(list.length() == 3);
  CHECK(list.rank_of(3) == 1);
  CHECK(list.rank_of(1) == 2);
  CHECK(list.rank_of(4) == 3);
  CHECK(list.rank_of(2) == 0);
  CHECK(list.rank_of(5) == 0);
}

TEST_CASE("construction rejects bad lists") {
  auto universe = testing::make_universe(3);
  CHECK_THROWS_AS(RankedList(universe, {1, 1}), ValidationError);
  CHECK_THROWS_AS(RankedList(universe, {0}), ValidationError);
  CHECK_THROWS_AS(RankedList(universe, {4}), ValidationError);
  CHECK_THROWS_AS(FeatureUniverse(0), ValidationError);
}

TEST_CASE("complete list boundary") {
  auto universe = testing::make_universe(3);
  RankedList list(universe, {1, 2, 3});
  CHECK(list.complete());
  CHECK(list.length() == 3);
}

TEST_CASE("empty list is representable") {
  auto universe = testing::make_universe(3);
  RankedList list(universe, {});
  CHECK(list.empty());
  CHECK(list.rank_of(1) == 0);
}

TEST_CASE("token universes resolve and reject unknowns") {
  auto universe = std::make_shared<const FeatureUniverse>(
      std::vector<std::string>{"alpha", "beta", "gamma"});
  CHECK(universe->index_of("beta") == 2);
  CHECK(universe->label(3) == "gamma");
  CHECK_THROWS_AS(universe->index_of("delta"), ValidationError);
  CHECK_THROWS_AS(FeatureUniverse(std::vector<std::string>{"a", "a"}), ValidationError);

  auto list = RankedList::from_tokens(universe, std::vector<std::string>{"gamma", "alpha"});
  CHECK(list.items()[0] == 3);
  CHECK(list.items()[1] == 1);
}

TEST_CASE("index universes parse decimal tokens") {
  auto universe = testing::make_universe(10);
  CHECK(universe->index_of("7") == 7);
  CHECK(universe->label(7) == "7");
  CHECK_THROWS_AS(universe->index_of("0"), ValidationError);
  CHECK_THROWS_AS(universe->index_of("11"), ValidationError);
  CHECK_THROWS_AS(universe->index_of("x"), ValidationError);
}

TEST_CASE("decompose splits the universe three ways") {
  auto universe = testing::make_universe(5);
  SUBCASE("overlapping") {
    auto d = decompose(RankedList(universe, {1, 2}), RankedList(universe, {2, 3}));
    CHECK(d.common == std::vector<std::int64_t>{2});
    CHECK(d.exclusive() == std::vector<std::int64_t>{1, 3});
    CHECK(d.outside == 2);
  }
  SUBCASE("identical") {
    auto u4 = testing::make_universe(4);
    auto d = decompose(RankedList(u4, {1, 2}), RankedList(u4, {1, 2}));
    CHECK(d.common == std::vector<std::int64_t>{1, 2});
    CHECK(d.exclusive().empty());
    CHECK(d.outside == 2);
  }
  SUBCASE("disjoint cover") {
    auto u4 = testing::make_universe(4);
    auto d = decompose(RankedList(u4, {1, 2}), RankedList(u4, {3, 4}));
    CHECK(d.common.empty());
    CHECK(d.exclusive() == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(d.outside == 0);
  }
}

TEST_CASE("decompose is symmetric and partitions the universe") {
  std::mt19937_64 rng(3);
  auto universe = testing::make_universe(30);
  for (int i = 0; i < 50; ++i) {
    auto a = testing::random_list(universe, 1 + static_cast<std::int64_t>(rng() % 10), rng);
    auto b = testing::random_list(universe, 1 + static_cast<std::int64_t>(rng() % 20), rng);
    auto d1 = decompose(a, b);
    auto d2 = decompose(b, a);
    CHECK(d1.common == d2.common);
    CHECK(d1.exclusive() == d2.exclusive());
    CHECK(d1.outside == d2.outside);
    CHECK(static_cast<std::int64_t>(d1.common.size() + d1.exclusive().size()) + d1.outside == 30);
  }
}

TEST_CASE("decompose rejects universe mismatch") {
  auto a = RankedList(testing::make_universe(5), {1});
  auto b = RankedList(testing::make_universe(6), {1});
  CHECK_THROWS_AS(decompose(a, b), ValidationError);
}

TEST_CASE("list set validates membership") {
  auto universe = testing::make_universe(4);
  std::vector<RankedList> lists;
  lists.emplace_back(universe, std::vector<std::int64_t>{1, 2});
  lists.emplace_back(universe, std::vector<std::int64_t>{2, 3});
  ListSet set(universe, std::move(lists));
  CHECK(set.size() == 2);
  CHECK_THROWS_AS(ListSet(universe, {}), InsufficientDataError);
}

TEST_CASE("lines round-trip reproduces the items") {
  auto universe = testing::make_universe(9);
  std::vector<RankedList> lists;
  lists.emplace_back(universe, std::vector<std::int64_t>{5, 1, 9});
  lists.emplace_back(universe, std::vector<std::int64_t>{});
  lists.emplace_back(universe, std::vector<std::int64_t>{2});
  ListSet set(universe, std::move(lists));

  std::ostringstream out;
  write_list_lines(out, set);
  std::istringstream in(out.str());
  auto parsed = read_list_lines(in, universe);

  REQUIRE(parsed.size() == 3);
  CHECK(std::vector<std::int64_t>(parsed[0].items().begin(), parsed[0].items().end()) ==
        std::vector<std::int64_t>{5, 1, 9});
  CHECK(parsed[1].empty());
  CHECK(parsed[2].items()[0] == 2);
}

TEST_CASE("lines format skips comments and keeps blank lines as empty lists") {
  auto universe = testing::make_universe(5);
  std::istringstream in("# header comment\n1, 2 ,3\n\n4,5 # trailing\n");
  auto lists = read_list_lines(in, universe);
  REQUIRE(lists.size() == 3);
  CHECK(lists[0].length() == 3);
  CHECK(lists[1].empty());
  CHECK(lists[2].length() == 2);
}

TEST_CASE("lines format reports parse failures with line numbers") {
  auto universe = testing::make_universe(5);
  std::istringstream dup("1,1\n");
  CHECK_THROWS_WITH_AS(read_list_lines(dup, universe),
                       doctest::Contains("line 1"), ValidationError);
  std::istringstream bad("1\n2,nope\n");
  CHECK_THROWS_WITH_AS(read_list_lines(bad, universe),
                       doctest::Contains("line 2"), ValidationError);
}

}  // TEST_SUITE
