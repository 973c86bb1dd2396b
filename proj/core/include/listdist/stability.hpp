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
#include <string>
#include <vector>

#include "listdist/canberra.hpp"
#include "listdist/list_model.hpp"

namespace listdist {

/// Which value of the DistanceBreakdown a stability matrix is built from.
enum class StabilityMetric {
  core,
  complete,
  core_normalized,
  complete_normalized,
};

std::string to_string(StabilityMetric metric);

/// Mutual-distance matrix over a set of lists plus the scalar stability
/// indicator: the mean of the B(B-1)/2 strictly-upper-triangle entries.
/// Lower means the set is more self-homogeneous.
struct StabilityReport {
  StabilityMetric metric = StabilityMetric::core;
  std::int64_t list_count = 0;
  std::vector<double> matrix;  // list_count x list_count, row-major, symmetric
  double indicator = 0.0;

  double at(std::int64_t i, std::int64_t j) const {
    return matrix[static_cast<std::size_t>(i * list_count + j)];
  }
};

/// Fills the matrix with pairwise partial distances (diagonal included;
/// it is zero for the core metrics).  Requires at least two lists, none
/// empty.  Pairs are evaluated concurrently when the matrix is large;
/// the result does not depend on scheduling.
StabilityReport stability_matrix(const ListSet& set, StabilityMetric metric);

/// One feature's aggregation across a list set: in how many lists it
/// appears and its average rank there.
struct BordaRow {
  std::int64_t feature = 0;
  std::int64_t extractions = 0;   // e_j, number of lists containing the feature
  double mean_position = 0.0;     // a(j), average rank over those lists
};

/// Features ranked by decreasing extraction count, ties by increasing
/// average position, remaining ties by ascending feature index.  Features
/// appearing in no list are excluded.
struct BordaTable {
  std::vector<BordaRow> rows;

  std::vector<std::int64_t> ranking() const;
};

BordaTable borda(const ListSet& set);

}  // namespace listdist
