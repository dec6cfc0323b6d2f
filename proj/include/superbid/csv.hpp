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
#ifndef SUPERBID_CSV_HPP_
#define SUPERBID_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "superbid/types.hpp"

namespace superbid {

// Similarity matrices travel as plain CSV: one row per reviewer,
// comma-separated decimal scores, no header.

SimilarityMatrix read_similarity_csv(std::istream& in);
SimilarityMatrix read_similarity_csv_file(const std::string& path);

void write_similarity_csv(const SimilarityMatrix& m, std::ostream& out);
void write_similarity_csv_file(const SimilarityMatrix& m,
                               const std::string& path);

/// Bid-count files are a single line of comma-separated nonnegative integers.
BidState read_bids_csv_file(const std::string& path);
void write_bids_csv_file(const BidState& bids, const std::string& path);

/// Label files pair a 1-based paper index with an integer label per line.
void write_labels_csv_file(const std::vector<int>& labels,
                           const std::string& path);

}  // namespace superbid

#endif  // SUPERBID_CSV_HPP_
