/*
 * Copyright 2026 The superbid Authors.
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
#include "superbid/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace superbid {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_score(const std::string& field, int line, int col) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw ParseError(line, col, "expected a decimal score, got \"" + field + "\"");
  return value;
}

}  // namespace

SimilarityMatrix read_similarity_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_fields(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (size_t c = 0; c < fields.size(); ++c)
      row.push_back(parse_score(fields[c], lineno, static_cast<int>(c) + 1));
    if (!rows.empty() && row.size() != rows.front().size())
      throw RaggedRowsError(lineno);
    rows.push_back(std::move(row));
  }
  return validate_matrix(rows);
}

SimilarityMatrix read_similarity_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_similarity_csv(in);
}

void write_similarity_csv(const SimilarityMatrix& m, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < m.reviewers(); ++i) {
    for (int j = 0; j < m.papers(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m.at(i, j));
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void write_similarity_csv_file(const SimilarityMatrix& m,
                               const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_similarity_csv(m, out);
  if (!out.good()) throw IoError("write failed for " + path);
}

BidState read_bids_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "empty bid file");
  auto fields = split_fields(line);
  std::vector<int> counts;
  counts.reserve(fields.size());
  for (size_t c = 0; c < fields.size(); ++c) {
    const std::string& f = fields[c];
    int value = 0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc() || ptr != f.data() + f.size() || value < 0)
      throw ParseError(1, static_cast<int>(c) + 1,
                       "expected a nonnegative bid count, got \"" + f + "\"");
    counts.push_back(value);
  }
  return BidState(std::move(counts));
}

void write_bids_csv_file(const BidState& bids, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (int j = 0; j < bids.papers(); ++j) {
    if (j) out << ',';
    out << bids.count(j);
  }
  out << '\n';
  if (!out.good()) throw IoError("write failed for " + path);
}

void write_labels_csv_file(const std::vector<int>& labels,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (size_t j = 0; j < labels.size(); ++j)
    out << (j + 1) << ',' << labels[j] << '\n';
  if (!out.good()) throw IoError("write failed for " + path);
}

}  // namespace superbid
