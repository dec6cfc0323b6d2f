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
#include "superbid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "superbid/baselines.hpp"

namespace superbid {

double expected_immediate_gain(const PaperOrdering& ordering,
                               std::span<const double> row,
                               const BidState& bids,
                               const ModelConfig& config) {
  double value = 0.0;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    const int pos = ordering.position(j);
    value += bid_probability(config.bid, pos, row[j]) *
                 marginal_paper_gain(config.paper_gain, bids.count(j)) +
             config.lambda * reviewer_gain(config.reviewer_gain, pos, row[j]);
  }
  return value;
}

namespace {

constexpr int kBruteForceLimit = 8;

template <typename Visit>
void for_each_display_order(int d, Visit visit) {
  std::vector<int> papers(d);
  std::iota(papers.begin(), papers.end(), 0);
  do {
    visit(papers);
  } while (std::next_permutation(papers.begin(), papers.end()));
}

}  // namespace

std::pair<PaperOrdering, double> brute_force_local(std::span<const double> row,
                                                   const BidState& bids,
                                                   const ModelConfig& config) {
  const int d = static_cast<int>(row.size());
  if (d > kBruteForceLimit)
    throw TooLargeError("brute-force search limited to d <= 8, got d = " +
                        std::to_string(d));
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> best_papers;
  for_each_display_order(d, [&](const std::vector<int>& papers) {
    const auto ordering = PaperOrdering::from_display(papers);
    const double value = expected_immediate_gain(ordering, row, bids, config);
    if (value > best) {
      best = value;
      best_papers = papers;
    }
  });
  return {PaperOrdering::from_display(best_papers), best};
}

double rand_expected_immediate_gain(std::span<const double> row,
                                    const BidState& bids,
                                    const ModelConfig& config) {
  const int d = static_cast<int>(row.size());
  if (const auto dec = decompose(config)) {
    double mean_fpi = 0.0;
    for (int k = 1; k <= d; ++k) mean_fpi += dec->f_pi(k);
    mean_fpi /= d;
    double alpha_sum = 0.0;
    for (int j = 0; j < d; ++j) {
      alpha_sum += dec->f_s(row[j]) *
                       marginal_paper_gain(config.paper_gain, bids.count(j)) +
                   config.lambda * dec->reviewer_gain_s(row[j]);
    }
    return alpha_sum * mean_fpi;
  }
  if (d > kBruteForceLimit)
    throw TooLargeError("uniform-ordering enumeration limited to d <= 8");
  double total = 0.0;
  long long count = 0;
  for_each_display_order(d, [&](const std::vector<int>& papers) {
    total += expected_immediate_gain(PaperOrdering::from_display(papers), row,
                                     bids, config);
    ++count;
  });
  return total / static_cast<double>(count);
}

// ---------------------------------------------------------------------------
// Exact policy evaluation and optimal value by recursion over count vectors.
// ---------------------------------------------------------------------------

namespace {

void check_dp_size(const SimilarityMatrix& matrix, const ModelConfig& config) {
  const int n = matrix.reviewers();
  const int d = matrix.papers();
  if (bid_position_one_only(config.bid)) {
    if (d <= 10 && n <= 10) return;
    throw TooLargeError(
        "exact recursion limited to d, n <= 10 for indicator bidding");
  }
  if (d <= 3 && n <= 5) return;
  throw TooLargeError("exact recursion limited to d <= 3 and n <= 5");
}

// Counts fit in 4 bits each under the size guards (counts <= n <= 10).
std::uint64_t pack_counts(const std::vector<int>& counts, int cap) {
  std::uint64_t key = 0;
  for (size_t j = 0; j < counts.size(); ++j)
    key |= static_cast<std::uint64_t>(std::min(counts[j], cap)) << (4 * j);
  return key;
}

// State cap that provably leaves both the policy's decisions and the
// terminal paper gain unchanged; 15 (the packing maximum) means no collapse.
int state_cap(const ModelConfig& config, std::optional<int> policy_sat) {
  if (config.paper_gain.kind == PaperGainKind::Capped && policy_sat)
    return std::max(config.paper_gain.cap, *policy_sat);
  return 15;
}

double terminal_paper_gain(const std::vector<int>& counts,
                           const ModelConfig& config) {
  double total = 0.0;
  for (int c : counts) total += paper_gain(config.paper_gain, c);
  return total;
}

double reviewer_gain_of(const PaperOrdering& ordering,
                        std::span<const double> row,
                        const ModelConfig& config) {
  double total = 0.0;
  for (int j = 0; j < static_cast<int>(row.size()); ++j)
    total += reviewer_gain(config.reviewer_gain, ordering.position(j), row[j]);
  return total;
}

// Enumerates bid outcomes of one reviewer under `ordering`, weighting a
// continuation value. Papers with probability exactly 0 or 1 are folded in
// directly; the remainder are expanded as a product of Bernoullis.
template <typename Continuation>
double expect_over_bids(const PaperOrdering& ordering,
                        std::span<const double> row, const ModelConfig& config,
                        std::vector<int>& counts, Continuation continue_with) {
  const int d = static_cast<int>(row.size());
  std::vector<int> uncertain;
  std::vector<double> prob(d);
  std::vector<int> sure;
  for (int j = 0; j < d; ++j) {
    prob[j] = bid_probability(config.bid, ordering.position(j), row[j]);
    if (prob[j] >= 1.0)
      sure.push_back(j);
    else if (prob[j] > 0.0)
      uncertain.push_back(j);
  }
  for (int j : sure) ++counts[j];

  double value = 0.0;
  const int u = static_cast<int>(uncertain.size());
  for (int mask = 0; mask < (1 << u); ++mask) {
    double p = 1.0;
    for (int b = 0; b < u; ++b) {
      const int j = uncertain[b];
      if (mask & (1 << b)) {
        p *= prob[j];
        ++counts[j];
      } else {
        p *= 1.0 - prob[j];
      }
    }
    value += p * continue_with(counts);
    for (int b = 0; b < u; ++b)
      if (mask & (1 << b)) --counts[uncertain[b]];
  }

  for (int j : sure) --counts[j];
  return value;
}

class PolicyEvaluator {
 public:
  PolicyEvaluator(const SimilarityMatrix& matrix, const OrderingPolicy& policy,
                  const ModelConfig& config)
      : matrix_(matrix),
        policy_(policy),
        config_(config),
        cap_(state_cap(config, policy.count_saturation())),
        memo_(matrix.reviewers()) {}

  double value() {
    std::vector<int> counts(matrix_.papers(), 0);
    return eval(0, counts);
  }

 private:
  double eval(int reviewer, std::vector<int>& counts) {
    if (reviewer == matrix_.reviewers())
      return terminal_paper_gain(counts, config_);
    const std::uint64_t key = pack_counts(counts, cap_);
    auto& level = memo_[reviewer];
    if (auto it = level.find(key); it != level.end()) return it->second;

    const auto row = matrix_.row(reviewer);
    const BidState state(counts);
    double value = 0.0;
    for (const auto& branch : policy_.branches(reviewer, state)) {
      const double rgain =
          branch.expected_reviewer_gain
              ? *branch.expected_reviewer_gain
              : reviewer_gain_of(branch.ordering, row, config_);
      const double cont = expect_over_bids(
          branch.ordering, row, config_, counts,
          [&](std::vector<int>& next) { return eval(reviewer + 1, next); });
      value += branch.prob * (config_.lambda * rgain + cont);
    }
    level.emplace(key, value);
    return value;
  }

  const SimilarityMatrix& matrix_;
  const OrderingPolicy& policy_;
  const ModelConfig& config_;
  int cap_;
  std::vector<std::unordered_map<std::uint64_t, double>> memo_;
};

class OptimumEvaluator {
 public:
  OptimumEvaluator(const SimilarityMatrix& matrix, const ModelConfig& config)
      : matrix_(matrix),
        config_(config),
        top_only_(bid_position_one_only(config.bid)),
        memo_(matrix.reviewers()) {}

  double value() {
    std::vector<int> counts(matrix_.papers(), 0);
    return eval(0, counts);
  }

 private:
  // Candidate orderings for one reviewer. When only the top position can
  // draw a bid, the choice space collapses to "which paper is first"; the
  // rest are sorted by descending similarity, which maximizes the reviewer
  // gain independently of the bid transition.
  std::vector<PaperOrdering> candidates(int reviewer) const {
    const auto row = matrix_.row(reviewer);
    const int d = static_cast<int>(row.size());
    std::vector<PaperOrdering> out;
    if (top_only_) {
      std::vector<int> by_sim(d);
      std::iota(by_sim.begin(), by_sim.end(), 0);
      std::sort(by_sim.begin(), by_sim.end(), [&](int a, int b) {
        if (row[a] != row[b]) return row[a] > row[b];
        return a < b;
      });
      for (int first = 0; first < d; ++first) {
        std::vector<int> papers;
        papers.reserve(d);
        papers.push_back(first);
        for (int j : by_sim)
          if (j != first) papers.push_back(j);
        out.push_back(PaperOrdering::from_display(papers));
      }
    } else {
      for_each_display_order(d, [&](const std::vector<int>& papers) {
        out.push_back(PaperOrdering::from_display(papers));
      });
    }
    return out;
  }

  double eval(int reviewer, std::vector<int>& counts) {
    if (reviewer == matrix_.reviewers())
      return terminal_paper_gain(counts, config_);
    const std::uint64_t key = pack_counts(counts, 15);
    auto& level = memo_[reviewer];
    if (auto it = level.find(key); it != level.end()) return it->second;

    const auto row = matrix_.row(reviewer);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& ordering : candidates(reviewer)) {
      const double rgain = reviewer_gain_of(ordering, row, config_);
      const double cont = expect_over_bids(
          ordering, row, config_, counts,
          [&](std::vector<int>& next) { return eval(reviewer + 1, next); });
      best = std::max(best, config_.lambda * rgain + cont);
    }
    level.emplace(key, best);
    return best;
  }

  const SimilarityMatrix& matrix_;
  const ModelConfig& config_;
  bool top_only_;
  std::vector<std::unordered_map<std::uint64_t, double>> memo_;
};

}  // namespace

SuperStarPolicy::SuperStarPolicy(const SimilarityMatrix& matrix,
                                 ModelConfig config, OrderPath path)
    : matrix_(&matrix), config_(std::move(config)), path_(path) {
  const int n = matrix.reviewers();
  heuristics_.reserve(n);
  SuperState scratch(matrix, config_);
  std::vector<std::uint8_t> no_bids(matrix.papers(), 0);
  for (int i = 0; i < n; ++i) {
    heuristics_.push_back(config_.heuristic == HeuristicKind::Mean
                              ? mean_heuristic(scratch, i)
                              : zero_heuristic(scratch, i));
    scratch.record_arrival(i, no_bids);
  }
}

std::vector<OrderingPolicy::Branch> SuperStarPolicy::branches(
    int reviewer, const BidState& bids) const {
  auto ordering = order_papers(matrix_->row(reviewer), bids,
                               heuristics_[reviewer], config_, path_);
  return {{1.0, std::move(ordering), std::nullopt}};
}

std::optional<int> SuperStarPolicy::count_saturation() const {
  switch (config_.paper_gain.kind) {
    case PaperGainKind::Capped:
      return config_.paper_gain.cap;
    case PaperGainKind::Linear:
      return 0;  // marginal is constant, decisions never read the counts
    case PaperGainKind::Sqrt:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<OrderingPolicy::Branch> SimPolicy::branches(
    int reviewer, const BidState& bids) const {
  return {{1.0, sim_order_deterministic(matrix_->row(reviewer), bids),
           std::nullopt}};
}

std::vector<OrderingPolicy::Branch> BidPolicy::branches(
    int reviewer, const BidState& bids) const {
  return {{1.0, bid_order_deterministic(bids, matrix_->row(reviewer)),
           std::nullopt}};
}

UniformRandPolicy::UniformRandPolicy(const SimilarityMatrix& matrix,
                                     ModelConfig config)
    : matrix_(&matrix), config_(std::move(config)) {}

std::vector<OrderingPolicy::Branch> UniformRandPolicy::branches(
    int reviewer, const BidState& /*bids*/) const {
  const auto row = matrix_->row(reviewer);
  const int d = static_cast<int>(row.size());
  std::vector<Branch> out;

  if (bid_position_one_only(config_.bid) && d >= 2) {
    // Condition on the top paper; the other papers are exchangeable across
    // positions 2..d, so their expected reviewer gain averages exactly.
    double tail_total = 0.0;
    std::vector<double> tail(d, 0.0);
    for (int j = 0; j < d; ++j) {
      for (int k = 2; k <= d; ++k)
        tail[j] += reviewer_gain(config_.reviewer_gain, k, row[j]);
      tail_total += tail[j];
    }
    const double prob = 1.0 / d;
    for (int first = 0; first < d; ++first) {
      std::vector<int> papers;
      papers.reserve(d);
      papers.push_back(first);
      for (int j = 0; j < d; ++j)
        if (j != first) papers.push_back(j);
      const double rgain =
          reviewer_gain(config_.reviewer_gain, 1, row[first]) +
          (tail_total - tail[first]) / (d - 1);
      out.push_back(
          {prob, PaperOrdering::from_display(papers), rgain});
    }
    return out;
  }

  long long factorial = 1;
  for (int k = 2; k <= d; ++k) factorial *= k;
  const double prob = 1.0 / static_cast<double>(factorial);
  for_each_display_order(d, [&](const std::vector<int>& papers) {
    out.push_back({prob, PaperOrdering::from_display(papers), std::nullopt});
  });
  return out;
}

double policy_value_exact(const SimilarityMatrix& matrix,
                          const OrderingPolicy& policy,
                          const ModelConfig& config) {
  check_dp_size(matrix, config);
  return PolicyEvaluator(matrix, policy, config).value();
}

double global_optimum_exact(const SimilarityMatrix& matrix,
                            const ModelConfig& config) {
  check_dp_size(matrix, config);
  return OptimumEvaluator(matrix, config).value();
}

double community_optimum_analytic(const CommunityConfig& cfg, double lambda) {
  cfg.validate();
  if (cfg.xi > 0.0) throw NoiselessOnlyError();
  const double size = static_cast<double>(cfg.size());
  double positional = 0.0;
  for (int k = 1; k <= cfg.q; ++k) positional += 1.0 / std::log2(k + 1.0);
  return size + lambda * size * (std::exp2(cfg.s) - 1.0) * positional;
}

}  // namespace superbid
