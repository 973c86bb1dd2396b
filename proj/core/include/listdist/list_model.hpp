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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace listdist {

/// The fixed feature set of size p.  Features are addressed by 1-based
/// index; an optional token table provides a string <-> index bijection.
/// A token-less universe accepts decimal index strings as tokens.
class FeatureUniverse {
 public:
  explicit FeatureUniverse(std::int64_t p);
  explicit FeatureUniverse(std::vector<std::string> tokens);

  std::int64_t size() const { return p_; }
  bool has_tokens() const { return !tokens_.empty(); }

  /// Resolves a token (or decimal index string) to its 1-based index.
  std::int64_t index_of(std::string_view token) const;

  /// Token for an index, or the decimal index string when token-less.
  std::string label(std::int64_t index) const;

  bool operator==(const FeatureUniverse& other) const;

 private:
  std::int64_t p_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int64_t> index_;
};

using UniversePtr = std::shared_ptr<const FeatureUniverse>;

/// Rank map of a partial list: feature -> rank in [1..l], 0 when absent.
class DualRank {
 public:
  DualRank() = default;
  explicit DualRank(std::span<const std::int64_t> items);

  /// tau(feature); 0 for features outside the list.
  std::int64_t rank_of(std::int64_t feature) const {
    auto it = ranks_.find(feature);
    return it == ranks_.end() ? 0 : it->second;
  }

  std::int64_t length() const { return static_cast<std::int64_t>(ranks_.size()); }

 private:
  std::unordered_map<std::int64_t, std::int64_t> ranks_;
};

/// An ordered, duplicate-free partial list of features, best rank first.
/// Immutable after construction.
class RankedList {
 public:
  /// Validates indices against the universe and materializes the rank map.
  RankedList(UniversePtr universe, std::vector<std::int64_t> items);

  static RankedList from_tokens(UniversePtr universe, std::span<const std::string> tokens);

  const FeatureUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  std::int64_t length() const { return static_cast<std::int64_t>(items_.size()); }
  bool empty() const { return items_.empty(); }
  bool complete() const { return length() == universe_->size(); }

  std::span<const std::int64_t> items() const { return items_; }
  std::int64_t rank_of(std::int64_t feature) const { return dual_.rank_of(feature); }
  const DualRank& dual() const { return dual_; }

 private:
  UniversePtr universe_;
  std::vector<std::int64_t> items_;
  DualRank dual_;
};

/// Three-way split of the universe induced by a pair of lists: features in
/// both, features in exactly one (kept per side), and the count of features
/// in neither.
struct PairDecomposition {
  std::vector<std::int64_t> common;       // L1 n L2, ascending
  std::vector<std::int64_t> only_first;   // L1 \ L2, ascending
  std::vector<std::int64_t> only_second;  // L2 \ L1, ascending
  std::int64_t outside = 0;               // |F \ (L1 u L2)|

  /// F_{1/2} = (L1 u L2) \ (L1 n L2), ascending.
  std::vector<std::int64_t> exclusive() const;
};

PairDecomposition decompose(const RankedList& first, const RankedList& second);

/// B ranked lists over one universe; lengths may differ and lists may be
/// empty (the distance engine rejects empty lists, the model keeps them).
class ListSet {
 public:
  ListSet(UniversePtr universe, std::vector<RankedList> lists);

  std::int64_t size() const { return static_cast<std::int64_t>(lists_.size()); }
  const RankedList& operator[](std::int64_t i) const { return lists_[static_cast<std::size_t>(i)]; }

  const UniversePtr& universe_ptr() const { return universe_; }
  const FeatureUniverse& universe() const { return *universe_; }

  auto begin() const { return lists_.begin(); }
  auto end() const { return lists_.end(); }

 private:
  UniversePtr universe_;
  std::vector<RankedList> lists_;
};

/// True when the two lists refer to the same universe (by pointer or value).
bool same_universe(const RankedList& a, const RankedList& b);

}  // namespace listdist
