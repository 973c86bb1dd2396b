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
#include "listdist/list_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "listdist/errors.hpp"

namespace listdist {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_tokens(std::string_view line, char separator) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto end = line.find(separator, start);
    const auto piece = trim(line.substr(start, end == std::string_view::npos ? line.size() - start
                                                                             : end - start));
    tokens.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

double parse_double(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("matrix line " + std::to_string(line_no) + ": bad numeric value '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<RankedList> read_list_lines(std::istream& in, UniversePtr universe) {
  if (!universe) {
    throw ValidationError("list file requires a universe");
  }
  std::vector<RankedList> lists;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(strip_comment(line));
    if (body.empty()) {
      // A blank payload line is an empty list; a pure comment line is not.
      if (trim(line).empty()) {
        lists.emplace_back(universe, std::vector<std::int64_t>{});
      }
      continue;
    }
    std::vector<std::int64_t> items;
    try {
      for (const auto& token : split_tokens(body, ',')) {
        if (token.empty()) {
          throw ValidationError("empty token");
        }
        items.push_back(universe->index_of(token));
      }
      lists.emplace_back(universe, std::move(items));
    } catch (const ValidationError& e) {
      throw ValidationError("list file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return lists;
}

void write_list_lines(std::ostream& out, const ListSet& set) {
  const auto& universe = set.universe();
  for (const auto& list : set) {
    bool first = true;
    for (const std::int64_t f : list.items()) {
      if (!first) out << ',';
      out << universe.label(f);
      first = false;
    }
    out << '\n';
  }
}

UniversePtr read_universe_file(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(strip_comment(line));
    if (body.empty()) continue;
    tokens.emplace_back(body);
  }
  return std::make_shared<const FeatureUniverse>(std::move(tokens));
}

void write_matrix(std::ostream& out, const ExpressionMatrix& m) {
  out << "label";
  for (std::int64_t g = 1; g <= m.gene_count; ++g) {
    out << '\t' << 'g' << g;
  }
  out << '\n';
  for (std::int64_t s = 0; s < m.sample_count; ++s) {
    out << m.labels[static_cast<std::size_t>(s)];
    for (std::int64_t g = 1; g <= m.gene_count; ++g) {
      out << '\t' << format_double(m.at(s, g));
    }
    out << '\n';
  }
}

ExpressionMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("matrix file is empty");
  }
  const auto header = split_tokens(trim(line), '\t');
  if (header.empty() || header.front() != "label") {
    throw ValidationError("matrix header must start with 'label'");
  }
  const std::int64_t genes = static_cast<std::int64_t>(header.size()) - 1;
  if (genes < 1) {
    throw ValidationError("matrix has no gene columns");
  }

  ExpressionMatrix m;
  m.gene_count = genes;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto cells = split_tokens(body, '\t');
    if (static_cast<std::int64_t>(cells.size()) != genes + 1) {
      throw ValidationError("matrix line " + std::to_string(line_no) + ": expected " +
                            std::to_string(genes + 1) + " columns, got " +
                            std::to_string(cells.size()));
    }
    const std::string& label = cells.front();
    if (label != "1" && label != "+1" && label != "-1") {
      throw ValidationError("matrix line " + std::to_string(line_no) +
                            ": label must be +1 or -1, got '" + label + "'");
    }
    m.labels.push_back(label == "-1" ? -1 : +1);
    for (std::int64_t g = 1; g <= genes; ++g) {
      m.values.push_back(parse_double(cells[static_cast<std::size_t>(g)], line_no));
    }
    m.sample_count += 1;
  }
  if (m.sample_count == 0) {
    throw ValidationError("matrix file has no sample rows");
  }
  return m;
}

std::string format_double(double value) {
  char buffer[40];
  const int written = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

}  // namespace listdist
