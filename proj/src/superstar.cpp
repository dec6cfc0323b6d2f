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
#include "superbid/superstar.hpp"

#include <algorithm>
#include <numeric>

namespace superbid {

void SuperState::record_arrival(int reviewer,
                                std::span<const std::uint8_t> bid_row) {
  if (arrived_[reviewer]) throw Error("reviewer arrived twice");
  arrived_[reviewer] = 1;
  ++arrived_count_;
  bids_.apply(bid_row);
}

HeuristicVector zero_heuristic(const SuperState& state, int /*reviewer*/) {
  return HeuristicVector(state.matrix().papers(), 0.0);
}

HeuristicVector mean_heuristic(const SuperState& state, int reviewer) {
  const SimilarityMatrix& m = state.matrix();
  const int n = m.reviewers();
  const int d = m.papers();
  HeuristicVector h(d, 0.0);

  const auto dec = decompose(state.config());
  double mean_fpi = 0.0;
  if (dec) {
    for (int k = 1; k <= d; ++k) mean_fpi += dec->f_pi(k);
    mean_fpi /= d;
  }

  for (int r = 0; r < n; ++r) {
    if (r == reviewer || state.has_arrived(r)) continue;
    auto row = m.row(r);
    if (dec) {
      for (int j = 0; j < d; ++j) h[j] += dec->f_s(row[j]) * mean_fpi;
    } else {
      for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int k = 1; k <= d; ++k)
          acc += bid_probability(state.config().bid, k, row[j]);
        h[j] += acc / d;
      }
    }
  }

  // Future reviewers number n - i when the current reviewer is the i-th
  // arrival; each contributes at most one bid per paper.
  const double limit = static_cast<double>(n - state.arrived_count() - 1);
  for (double& v : h) v = std::clamp(v, 0.0, std::max(limit, 0.0));
  return h;
}

WeightMatrix build_weight_matrix(std::span<const double> row,
                                 const BidState& bids,
                                 const HeuristicVector& h,
                                 const ModelConfig& config) {
  const int d = static_cast<int>(row.size());
  WeightMatrix w(d);
  for (int j = 0; j < d; ++j) {
    const double marginal =
        marginal_paper_gain(config.paper_gain, bids.count(j) + h[j]);
    for (int k = 0; k < d; ++k) {
      w.at(j, k) = config.lambda * reviewer_gain(config.reviewer_gain, k + 1, row[j]) +
                   bid_probability(config.bid, k + 1, row[j]) * marginal;
    }
  }
  return w;
}

PaperOrdering find_paper_order_general(std::span<const double> row,
                                       const BidState& bids,
                                       const HeuristicVector& h,
                                       const ModelConfig& config) {
  return solve_assignment(build_weight_matrix(row, bids, h, config)).first;
}

std::vector<double> build_alpha_weights(std::span<const double> row,
                                        const BidState& bids,
                                        const HeuristicVector& h,
                                        const ModelConfig& config) {
  const auto dec = decompose(config);
  if (!dec) throw NotDecomposableError();
  const int d = static_cast<int>(row.size());
  std::vector<double> alpha(d);
  for (int j = 0; j < d; ++j) {
    alpha[j] = dec->f_s(row[j]) *
                   marginal_paper_gain(config.paper_gain, bids.count(j) + h[j]) +
               config.lambda * dec->reviewer_gain_s(row[j]);
  }
  return alpha;
}

PaperOrdering find_paper_order_efficient(std::span<const double> row,
                                         const BidState& bids,
                                         const HeuristicVector& h,
                                         const ModelConfig& config) {
  const auto alpha = build_alpha_weights(row, bids, h, config);
  const int d = static_cast<int>(alpha.size());
  std::vector<int> papers(d);
  std::iota(papers.begin(), papers.end(), 0);
  std::sort(papers.begin(), papers.end(), [&](int a, int b) {
    if (alpha[a] != alpha[b]) return alpha[a] > alpha[b];
    return a < b;
  });
  return PaperOrdering::from_display(papers);
}

PaperOrdering order_papers(std::span<const double> row, const BidState& bids,
                           const HeuristicVector& h, const ModelConfig& config,
                           OrderPath path) {
  const bool decomposable = decompose(config).has_value();
  if (path == OrderPath::Efficient ||
      (path == OrderPath::Auto && decomposable)) {
    return find_paper_order_efficient(row, bids, h, config);
  }
  return find_paper_order_general(row, bids, h, config);
}

PaperOrdering super_step(const SuperState& state, int reviewer,
                         OrderPath path) {
  if (state.has_arrived(reviewer))
    throw Error("reviewer has already arrived");
  const HeuristicVector h = state.config().heuristic == HeuristicKind::Mean
                                ? mean_heuristic(state, reviewer)
                                : zero_heuristic(state, reviewer);
  return order_papers(state.matrix().row(reviewer), state.bids(), h,
                      state.config(), path);
}

}  // namespace superbid
