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
#ifndef SUPERBID_ORACLE_HPP_
#define SUPERBID_ORACLE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superbid/generators.hpp"
#include "superbid/superstar.hpp"
#include "superbid/types.hpp"

namespace superbid {

// Ground-truth computations kept deliberately independent of the ordering
// code they are used to check: closed-form expectations, exhaustive search,
// and exact finite-horizon recursions over bid-count states.

/// Exact expected one-reviewer gain of showing `ordering`:
///   sum_j f(pos_j, S_j) * (gamma_p(g_j + 1) - gamma_p(g_j))
///   + lambda * sum_j gamma_r(pos_j, S_j).
double expected_immediate_gain(const PaperOrdering& ordering,
                               std::span<const double> row,
                               const BidState& bids,
                               const ModelConfig& config);

/// Exhaustive maximum of expected_immediate_gain over all d! orderings.
/// Guarded at d <= 8; throws TooLargeError beyond it.
std::pair<PaperOrdering, double> brute_force_local(std::span<const double> row,
                                                   const BidState& bids,
                                                   const ModelConfig& config);

/// Exact expectation of the immediate gain under a uniformly random
/// ordering. Uses the factored closed form when the model decomposes and
/// exhaustive enumeration (d <= 8) otherwise.
double rand_expected_immediate_gain(std::span<const double> row,
                                    const BidState& bids,
                                    const ModelConfig& config);

/// A (possibly randomized) map from (arrival index, bid counts) to a paper
/// ordering, evaluated exactly by the forward recursions below.
class OrderingPolicy {
 public:
  struct Branch {
    double prob;
    PaperOrdering ordering;
    /// Conditional expected reviewer-side gain of this branch. When absent
    /// it is computed from `ordering`; a mixture policy that collapses many
    /// orderings into one representative supplies the exact value here.
    std::optional<double> expected_reviewer_gain;
  };

  virtual ~OrderingPolicy() = default;
  virtual std::vector<Branch> branches(int reviewer,
                                       const BidState& bids) const = 0;
  /// Smallest count c such that the policy's decisions are identical for
  /// all counts >= c, or absent if the policy is sensitive everywhere.
  virtual std::optional<int> count_saturation() const { return std::nullopt; }
};

/// The sequential ordering algorithm as a deterministic policy; reviewers
/// are processed in matrix row order.
class SuperStarPolicy final : public OrderingPolicy {
 public:
  SuperStarPolicy(const SimilarityMatrix& matrix, ModelConfig config,
                  OrderPath path = OrderPath::Auto);
  std::vector<Branch> branches(int reviewer,
                               const BidState& bids) const override;
  std::optional<int> count_saturation() const override;

 private:
  const SimilarityMatrix* matrix_;
  ModelConfig config_;
  OrderPath path_;
  std::vector<HeuristicVector> heuristics_;  // per reviewer, bid-independent
};

class SimPolicy final : public OrderingPolicy {
 public:
  explicit SimPolicy(const SimilarityMatrix& matrix) : matrix_(&matrix) {}
  std::vector<Branch> branches(int reviewer,
                               const BidState& bids) const override;

 private:
  const SimilarityMatrix* matrix_;
};

class BidPolicy final : public OrderingPolicy {
 public:
  explicit BidPolicy(const SimilarityMatrix& matrix) : matrix_(&matrix) {}
  std::vector<Branch> branches(int reviewer,
                               const BidState& bids) const override;

 private:
  const SimilarityMatrix* matrix_;
};

/// The uniform mixture over all d! orderings. For bidding models in which
/// only the top position can draw a bid, the mixture collapses exactly to d
/// branches keyed by the top paper, with the conditional reviewer gain
/// averaged over the exchangeable arrangements of the rest; otherwise the
/// full factorial enumeration is used (and the small-instance guard of the
/// evaluators applies).
class UniformRandPolicy final : public OrderingPolicy {
 public:
  UniformRandPolicy(const SimilarityMatrix& matrix, ModelConfig config);
  std::vector<Branch> branches(int reviewer,
                               const BidState& bids) const override;
  std::optional<int> count_saturation() const override { return 0; }

 private:
  const SimilarityMatrix* matrix_;
  ModelConfig config_;
};

/// Exact expected total gain of running `policy` on `matrix` from zero bids:
/// forward recursion over (arrival index, bid-count vector). Guarded by
/// instance size: d <= 3 and n <= 5 in general; up to d, n <= 10 when the
/// bidding model is deterministic (top-position indicator family).
double policy_value_exact(const SimilarityMatrix& matrix,
                          const OrderingPolicy& policy,
                          const ModelConfig& config);

/// Exact optimal adaptive expected gain by backward induction:
///   V_i(g) = max_pi [ lambda * R_i(pi) + E V_{i+1}(g + bids(pi)) ],
/// terminal value sum_j gamma_p(g_j). Same size guards as
/// policy_value_exact.
double global_optimum_exact(const SimilarityMatrix& matrix,
                            const ModelConfig& config);

/// Closed-form optimum for the noiseless community model under the
/// top-position indicator bidding model and square-root paper gain:
///   m*q + lambda * m*q * (2^s - 1) * sum_{k=1..q} 1/log2(k+1).
/// Throws NoiselessOnlyError when cfg.xi > 0.
double community_optimum_analytic(const CommunityConfig& cfg, double lambda);

}  // namespace superbid

#endif  // SUPERBID_ORACLE_HPP_
