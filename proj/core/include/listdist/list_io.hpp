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

#include <iosfwd>
#include <string>
#include <vector>

#include "listdist/list_model.hpp"
#include "listdist/synth.hpp"

namespace listdist {

/// `lines` list format: one list per line, comma-separated feature tokens,
/// best rank first.  Blank lines are empty lists; `#` starts a comment.
std::vector<RankedList> read_list_lines(std::istream& in, UniversePtr universe);

void write_list_lines(std::ostream& out, const ListSet& set);

/// Universe file: one feature token per line, index order; `#` comments
/// and blank lines ignored.
UniversePtr read_universe_file(std::istream& in);

/// Expression matrix as tab-separated text: a header row (`label`, then
/// one column name per gene), then one row per sample starting with its
/// +1/-1 label.  Values round-trip exactly.
void write_matrix(std::ostream& out, const ExpressionMatrix& m);

ExpressionMatrix read_matrix(std::istream& in);

/// Shortest exact decimal text for a double (17 significant digits).
std::string format_double(double value);

}  // namespace listdist
