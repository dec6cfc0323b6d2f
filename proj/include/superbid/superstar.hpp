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
#ifndef SUPERBID_SUPERSTAR_HPP_
#define SUPERBID_SUPERSTAR_HPP_

#include <span>
#include <vector>

#include "superbid/assignment.hpp"
#include "superbid/gains.hpp"
#include "superbid/types.hpp"

namespace superbid {

/// Which ordering subroutine to run. Auto picks the sorting path whenever the
/// model decomposes and falls back to the assignment solver otherwise.
enum class OrderPath { Auto, General, Efficient };

/// Rolling state of one bidding process: the model, the similarity matrix,
/// the bids seen so far, and which reviewers have already arrived. Read-only
/// with respect to ordering computations; the simulation loop owns mutation.
class SuperState {
 public:
  SuperState(const SimilarityMatrix& matrix, ModelConfig config)
      : matrix_(&matrix),
        config_(std::move(config)),
        bids_(matrix.papers()),
        arrived_(matrix.reviewers(), 0) {}

  const SimilarityMatrix& matrix() const { return *matrix_; }
  const ModelConfig& config() const { return config_; }
  const BidState& bids() const { return bids_; }
  int arrived_count() const { return arrived_count_; }
  bool has_arrived(int reviewer) const { return arrived_[reviewer] != 0; }

  void record_arrival(int reviewer, std::span<const std::uint8_t> bid_row);

 private:
  const SimilarityMatrix* matrix_;
  ModelConfig config_;
  BidState bids_;
  std::vector<char> arrived_;
  int arrived_count_ = 0;
};

/// All-zero future-bid estimate.
HeuristicVector zero_heuristic(const SuperState& state, int reviewer);

/// Expected future bids per paper if every not-yet-arrived reviewer were
/// shown an independent uniformly random ordering:
///   h_j = (1/d) * sum over future reviewers r, positions k of f(k, S_{r,j}).
/// Values are clamped to [0, n - i] against accumulation error; the final
/// reviewer always receives zeros.
HeuristicVector mean_heuristic(const SuperState& state, int reviewer);

/// Weights of the one-reviewer assignment problem:
///   w(j, k) = lambda * gamma_r(k, S_j)
///           + f(k, S_j) * (gamma_p(g_j + h_j + 1) - gamma_p(g_j + h_j)).
WeightMatrix build_weight_matrix(std::span<const double> row,
                                 const BidState& bids,
                                 const HeuristicVector& h,
                                 const ModelConfig& config);

/// Ordering maximizing the assignment weights; works for any model.
PaperOrdering find_paper_order_general(std::span<const double> row,
                                       const BidState& bids,
                                       const HeuristicVector& h,
                                       const ModelConfig& config);

/// Per-paper scores for the sorting path:
///   alpha_j = f_s(S_j) * (gamma_p(g_j + h_j + 1) - gamma_p(g_j + h_j))
///           + lambda * gamma_r_s(S_j).
/// Throws NotDecomposableError when the model does not factor.
std::vector<double> build_alpha_weights(std::span<const double> row,
                                        const BidState& bids,
                                        const HeuristicVector& h,
                                        const ModelConfig& config);

/// Papers in nonincreasing alpha order, ties broken by ascending paper index.
PaperOrdering find_paper_order_efficient(std::span<const double> row,
                                         const BidState& bids,
                                         const HeuristicVector& h,
                                         const ModelConfig& config);

/// Ordering for an arbitrary similarity row and bid state under the
/// requested path. The heuristic vector is supplied by the caller.
PaperOrdering order_papers(std::span<const double> row, const BidState& bids,
                           const HeuristicVector& h, const ModelConfig& config,
                           OrderPath path = OrderPath::Auto);

/// One step of the sequential algorithm: computes the heuristic configured in
/// the state and returns the ordering for the arriving reviewer. Does not
/// mutate the state; recording bids is the simulation loop's job.
PaperOrdering super_step(const SuperState& state, int reviewer,
                         OrderPath path = OrderPath::Auto);

}  // namespace superbid

#endif  // SUPERBID_SUPERSTAR_HPP_
