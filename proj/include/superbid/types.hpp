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
#ifndef SUPERBID_TYPES_HPP_
#define SUPERBID_TYPES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "superbid/errors.hpp"

namespace superbid {

/// Reviewer-by-paper similarity scores, all in [0, 1]. Row-major storage.
class SimilarityMatrix {
 public:
  SimilarityMatrix(int n, int d, std::vector<double> scores);

  int reviewers() const { return n_; }
  int papers() const { return d_; }
  double at(int reviewer, int paper) const {
    return scores_[static_cast<size_t>(reviewer) * d_ + paper];
  }
  std::span<const double> row(int reviewer) const {
    return {scores_.data() + static_cast<size_t>(reviewer) * d_,
            static_cast<size_t>(d_)};
  }
  const std::vector<double>& scores() const { return scores_; }

  /// Copy with rows rearranged so that row i of the result is row
  /// `row_order[i]` of this matrix (used to randomize arrival order).
  SimilarityMatrix permuted_rows(const std::vector<int>& row_order) const;

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  int n_;
  int d_;
  std::vector<double> scores_;
};

/// Validates a rectangular array of scores and wraps it as a matrix.
/// Throws EmptyMatrixError or OutOfRangeError.
SimilarityMatrix validate_matrix(const std::vector<std::vector<double>>& raw);

/// A permutation of the d papers. position(j) is the 1-based display
/// rank of paper j (papers are indexed from 0 internally).
class PaperOrdering {
 public:
  /// `positions[j]` = 1-based rank of paper j; must be a bijection onto 1..d.
  explicit PaperOrdering(std::vector<int> positions);

  static PaperOrdering identity(int d);
  /// Builds from the display list: `papers[k]` is the paper shown at rank k+1.
  static PaperOrdering from_display(const std::vector<int>& papers);

  int size() const { return static_cast<int>(positions_.size()); }
  int position(int paper) const { return positions_[paper]; }
  const std::vector<int>& positions() const { return positions_; }
  /// Inverse view: element k is the paper shown at rank k+1.
  std::vector<int> display_order() const;

  bool operator==(const PaperOrdering&) const = default;

 private:
  std::vector<int> positions_;
};

/// Per-paper bid counts accumulated over reviewer arrivals.
class BidState {
 public:
  explicit BidState(int d) : counts_(d, 0) {}
  explicit BidState(std::vector<int> counts);

  int papers() const { return static_cast<int>(counts_.size()); }
  int count(int paper) const { return counts_[paper]; }
  const std::vector<int>& counts() const { return counts_; }

  /// Adds one reviewer's 0/1 bid vector.
  void apply(std::span<const std::uint8_t> bids);

  bool operator==(const BidState&) const = default;

 private:
  std::vector<int> counts_;
};

/// Estimated future bids per paper, fed to the ordering subroutines.
using HeuristicVector = std::vector<double>;

/// Tabulated (position, similarity) -> value function, evaluated by exact
/// lookup on its grid. Escape hatch for models outside the built-in kinds.
struct TabulatedFn {
  std::vector<int> positions;    // ascending
  std::vector<double> sims;      // ascending
  std::vector<double> values;    // positions.size() x sims.size(), row-major

  double at(int position, double s) const;
};

enum class PaperGainKind { Sqrt, Capped, Linear };

struct PaperGainFn {
  PaperGainKind kind = PaperGainKind::Sqrt;
  int cap = 6;         // Capped
  double slope = 1.0;  // Linear

  static PaperGainFn sqrt_gain() { return {PaperGainKind::Sqrt, 0, 0.0}; }
  static PaperGainFn capped(int r) { return {PaperGainKind::Capped, r, 0.0}; }
  static PaperGainFn linear(double slope) {
    return {PaperGainKind::Linear, 0, slope};
  }
  bool operator==(const PaperGainFn&) const = default;
};

enum class ReviewerGainKind { DcgLog, DcgSqrtPos, ThresholdIndicator, Tabulated };

struct ReviewerGainFn {
  ReviewerGainKind kind = ReviewerGainKind::DcgLog;
  double threshold_s = 1.0;  // ThresholdIndicator block value
  std::shared_ptr<const TabulatedFn> table;

  static ReviewerGainFn dcg_log() { return {ReviewerGainKind::DcgLog, 0.0, {}}; }
  static ReviewerGainFn dcg_sqrt_pos() {
    return {ReviewerGainKind::DcgSqrtPos, 0.0, {}};
  }
  static ReviewerGainFn threshold(double s) {
    return {ReviewerGainKind::ThresholdIndicator, s, {}};
  }
};

enum class BidKind { LogPosition, SqrtPosition, ThresholdIndicator, Tabulated };

struct BidFn {
  BidKind kind = BidKind::LogPosition;
  double threshold_s = 1.0;  // ThresholdIndicator block value, in [0.01, 1]
  std::shared_ptr<const TabulatedFn> table;

  static BidFn log_position() { return {BidKind::LogPosition, 0.0, {}}; }
  static BidFn sqrt_position() { return {BidKind::SqrtPosition, 0.0, {}}; }
  static BidFn threshold(double s) {
    return {BidKind::ThresholdIndicator, s, {}};
  }
};

enum class HeuristicKind { Zero, Mean };

/// Everything that pins down one model: both gain functions, the bidding
/// model, the trade-off weight, and which heuristic the ordering policy uses.
struct ModelConfig {
  PaperGainFn paper_gain = PaperGainFn::capped(6);
  ReviewerGainFn reviewer_gain = ReviewerGainFn::dcg_log();
  BidFn bid = BidFn::log_position();
  double lambda = 0.8;
  HeuristicKind heuristic = HeuristicKind::Zero;

  /// Throws Error on invalid parameters (lambda < 0, cap < 1, threshold
  /// outside [0.01, 1]).
  void validate() const;
};

/// One (ordering shown, bids observed) pair per arrived reviewer.
struct HistoryEntry {
  PaperOrdering ordering;
  std::vector<std::uint8_t> bids;

  bool operator==(const HistoryEntry&) const = default;
};

using History = std::vector<HistoryEntry>;

/// Bid-count histogram over the intervals {0-2}, {3-5}, {6-8}, {9+} by
/// default; `bounds` holds the inclusive upper edge of the first three bins.
std::array<long long, 4> histogram(const BidState& bids,
                                   std::array<int, 3> bounds = {2, 5, 8});

struct SimulationResult {
  double total_gain = 0.0;
  double paper_gain = 0.0;
  double reviewer_gain = 0.0;
  BidState final_bids{1};
  std::array<long long, 4> bid_histogram{0, 0, 0, 0};
  History history;

  bool operator==(const SimulationResult&) const = default;
};

}  // namespace superbid

#endif  // SUPERBID_TYPES_HPP_
