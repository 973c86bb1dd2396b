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
#include "listdist/list_model.hpp"

#include <algorithm>
#include <charconv>

#include "listdist/errors.hpp"

namespace listdist {

FeatureUniverse::FeatureUniverse(std::int64_t p) : p_(p) {
  if (p < 1) {
    throw ValidationError("universe size must be positive, got " + std::to_string(p));
  }
}

FeatureUniverse::FeatureUniverse(std::vector<std::string> tokens)
    : p_(static_cast<std::int64_t>(tokens.size())), tokens_(std::move(tokens)) {
  if (p_ < 1) {
    throw ValidationError("universe token list is empty");
  }
  index_.reserve(tokens_.size());
  for (std::int64_t i = 0; i < p_; ++i) {
    const auto& tok = tokens_[static_cast<std::size_t>(i)];
    if (tok.empty()) {
      throw ValidationError("universe contains an empty token at position " +
                            std::to_string(i + 1));
    }
    if (!index_.emplace(tok, i + 1).second) {
      throw ValidationError("universe token is not unique: '" + tok + "'");
    }
  }
}

std::int64_t FeatureUniverse::index_of(std::string_view token) const {
  if (has_tokens()) {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
      throw ValidationError("unknown feature token: '" + std::string(token) + "'");
    }
    return it->second;
  }
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("feature token is not a valid index: '" + std::string(token) + "'");
  }
  if (value < 1 || value > p_) {
    throw ValidationError("feature index " + std::to_string(value) + " outside universe [1.." +
                          std::to_string(p_) + "]");
  }
  return value;
}

std::string FeatureUniverse::label(std::int64_t index) const {
  if (index < 1 || index > p_) {
    throw ValidationError("feature index " + std::to_string(index) + " outside universe [1.." +
                          std::to_string(p_) + "]");
  }
  if (has_tokens()) {
    return tokens_[static_cast<std::size_t>(index - 1)];
  }
  return std::to_string(index);
}

bool FeatureUniverse::operator==(const FeatureUniverse& other) const {
  return p_ == other.p_ && tokens_ == other.tokens_;
}

DualRank::DualRank(std::span<const std::int64_t> items) {
  ranks_.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    ranks_.emplace(items[i], static_cast<std::int64_t>(i) + 1);
  }
}

RankedList::RankedList(UniversePtr universe, std::vector<std::int64_t> items)
    : universe_(std::move(universe)), items_(std::move(items)) {
  if (!universe_) {
    throw ValidationError("ranked list requires a universe");
  }
  const std::int64_t p = universe_->size();
  for (const std::int64_t f : items_) {
    if (f < 1 || f > p) {
      throw ValidationError("feature index " + std::to_string(f) + " outside universe [1.." +
                            std::to_string(p) + "]");
    }
  }
  dual_ = DualRank(items_);
  if (dual_.length() != length()) {
    // Find one offender for the message.
    std::vector<std::int64_t> sorted(items_);
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    throw ValidationError("duplicate feature in ranked list: index " + std::to_string(*dup));
  }
}

RankedList RankedList::from_tokens(UniversePtr universe, std::span<const std::string> tokens) {
  if (!universe) {
    throw ValidationError("ranked list requires a universe");
  }
  std::vector<std::int64_t> items;
  items.reserve(tokens.size());
  for (const auto& tok : tokens) {
    items.push_back(universe->index_of(tok));
  }
  return RankedList(std::move(universe), std::move(items));
}

std::vector<std::int64_t> PairDecomposition::exclusive() const {
  std::vector<std::int64_t> merged;
  merged.reserve(only_first.size() + only_second.size());
  std::merge(only_first.begin(), only_first.end(), only_second.begin(), only_second.end(),
             std::back_inserter(merged));
  return merged;
}

PairDecomposition decompose(const RankedList& first, const RankedList& second) {
  if (!same_universe(first, second)) {
    throw ValidationError("lists belong to different universes");
  }
  std::vector<std::int64_t> a(first.items().begin(), first.items().end());
  std::vector<std::int64_t> b(second.items().begin(), second.items().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  PairDecomposition out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.common));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.only_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.only_second));
  const std::int64_t united = static_cast<std::int64_t>(out.common.size() + out.only_first.size() +
                                                        out.only_second.size());
  out.outside = first.universe().size() - united;
  return out;
}

ListSet::ListSet(UniversePtr universe, std::vector<RankedList> lists)
    : universe_(std::move(universe)), lists_(std::move(lists)) {
  if (!universe_) {
    throw ValidationError("list set requires a universe");
  }
  if (lists_.empty()) {
    throw InsufficientDataError("list set must contain at least one list");
  }
  for (const auto& list : lists_) {
    if (list.universe_ptr() != universe_ && !(list.universe() == *universe_)) {
      throw ValidationError("list set members must share the universe");
    }
  }
}

bool same_universe(const RankedList& a, const RankedList& b) {
  return a.universe_ptr() == b.universe_ptr() || a.universe() == b.universe();
}

}  // namespace listdist
