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
#include "superbid/types.hpp"

#include <algorithm>
#include <cmath>

namespace superbid {

SimilarityMatrix::SimilarityMatrix(int n, int d, std::vector<double> scores)
    : n_(n), d_(d), scores_(std::move(scores)) {
  if (n_ < 1 || d_ < 1) throw EmptyMatrixError();
  if (scores_.size() != static_cast<size_t>(n_) * d_)
    throw Error("score buffer size does not match dimensions");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < d_; ++j) {
      double v = at(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw OutOfRangeError(i, j, v);
    }
  }
}

SimilarityMatrix SimilarityMatrix::permuted_rows(
    const std::vector<int>& row_order) const {
  if (static_cast<int>(row_order.size()) != n_)
    throw Error("row order length does not match reviewer count");
  std::vector<double> out(scores_.size());
  for (int i = 0; i < n_; ++i) {
    auto src = row(row_order[i]);
    std::copy(src.begin(), src.end(), out.begin() + static_cast<size_t>(i) * d_);
  }
  return SimilarityMatrix(n_, d_, std::move(out));
}

SimilarityMatrix validate_matrix(const std::vector<std::vector<double>>& raw) {
  if (raw.empty() || raw.front().empty()) throw EmptyMatrixError();
  const int n = static_cast<int>(raw.size());
  const int d = static_cast<int>(raw.front().size());
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != d) throw RaggedRowsError(i + 1);
    for (int j = 0; j < d; ++j) {
      double v = raw[i][j];
      if (!(v >= 0.0 && v <= 1.0)) throw OutOfRangeError(i, j, v);
      flat.push_back(v);
    }
  }
  return SimilarityMatrix(n, d, std::move(flat));
}

PaperOrdering::PaperOrdering(std::vector<int> positions)
    : positions_(std::move(positions)) {
  const int d = static_cast<int>(positions_.size());
  if (d == 0) throw Error("empty paper ordering");
  std::vector<char> seen(d, 0);
  for (int p : positions_) {
    if (p < 1 || p > d || seen[p - 1])
      throw Error("paper ordering is not a bijection onto 1..d");
    seen[p - 1] = 1;
  }
}

PaperOrdering PaperOrdering::identity(int d) {
  std::vector<int> pos(d);
  for (int j = 0; j < d; ++j) pos[j] = j + 1;
  return PaperOrdering(std::move(pos));
}

PaperOrdering PaperOrdering::from_display(const std::vector<int>& papers) {
  const int d = static_cast<int>(papers.size());
  std::vector<int> pos(d, 0);
  for (int k = 0; k < d; ++k) {
    int j = papers[k];
    if (j < 0 || j >= d) throw Error("display list names an unknown paper");
    pos[j] = k + 1;
  }
  return PaperOrdering(std::move(pos));
}

std::vector<int> PaperOrdering::display_order() const {
  std::vector<int> papers(positions_.size());
  for (int j = 0; j < size(); ++j) papers[positions_[j] - 1] = j;
  return papers;
}

BidState::BidState(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw Error("negative bid count");
}

void BidState::apply(std::span<const std::uint8_t> bids) {
  if (bids.size() != counts_.size())
    throw Error("bid vector length does not match paper count");
  for (size_t j = 0; j < counts_.size(); ++j) counts_[j] += bids[j] ? 1 : 0;
}

double TabulatedFn::at(int position, double s) const {
  auto pit = std::find(positions.begin(), positions.end(), position);
  auto sit = std::find_if(sims.begin(), sims.end(),
                          [s](double v) { return v == s; });
  if (pit == positions.end() || sit == sims.end())
    throw Error("tabulated function queried off its grid");
  const size_t r = static_cast<size_t>(pit - positions.begin());
  const size_t c = static_cast<size_t>(sit - sims.begin());
  return values[r * sims.size() + c];
}

void ModelConfig::validate() const {
  if (lambda < 0.0) throw Error("lambda must be nonnegative");
  if (paper_gain.kind == PaperGainKind::Capped && paper_gain.cap < 1)
    throw Error("capped paper gain requires cap >= 1");
  if (paper_gain.kind == PaperGainKind::Linear && paper_gain.slope < 0.0)
    throw Error("linear paper gain requires nonnegative slope");
  if (bid.kind == BidKind::ThresholdIndicator &&
      (bid.threshold_s < 0.01 || bid.threshold_s > 1.0))
    throw Error("threshold bid parameter must lie in [0.01, 1]");
}

std::array<long long, 4> histogram(const BidState& bids,
                                   std::array<int, 3> bounds) {
  std::array<long long, 4> out{0, 0, 0, 0};
  for (int c : bids.counts()) {
    if (c <= bounds[0])
      ++out[0];
    else if (c <= bounds[1])
      ++out[1];
    else if (c <= bounds[2])
      ++out[2];
    else
      ++out[3];
  }
  return out;
}

}  // namespace superbid
