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
#ifndef SUPERBID_GAINS_HPP_
#define SUPERBID_GAINS_HPP_

#include <optional>

#include "superbid/types.hpp"

namespace superbid {

/// Paper-side gain of holding `g` bids. Accepts real g so that heuristic
/// offsets (fractional under the mean heuristic) evaluate directly.
double paper_gain(const PaperGainFn& fn, double g);

/// paper_gain(g + 1) - paper_gain(g). Nonincreasing in g for the concave
/// kinds, constant for Linear.
double marginal_paper_gain(const PaperGainFn& fn, double g);

/// Reviewer-side gain of showing a paper of similarity s at a 1-based
/// position. Nonincreasing in position, nondecreasing in s.
double reviewer_gain(const ReviewerGainFn& fn, int position, double s);

/// Probability that a reviewer bids on a paper of similarity s shown at a
/// 1-based position. Always in [0, 1].
double bid_probability(const BidFn& fn, int position, double s);

/// Factored form f(position, s) = f_s(s) * f_pi(position) shared by the
/// bidding model and the reviewer gain, when one exists. Present exactly for
/// LogPosition+DcgLog and SqrtPosition+DcgSqrtPos; absent otherwise, which
/// forces the general assignment-based ordering path.
struct Decomposition {
  BidKind position_kind;

  double f_s(double s) const { return s; }
  double f_pi(int position) const;
  /// Similarity factor of the reviewer gain under the shared f_pi.
  double reviewer_gain_s(double s) const;
};

std::optional<Decomposition> decompose(const ModelConfig& config);

/// True when the bidding model gives positions past the first a bid
/// probability of exactly zero (the threshold indicator family).
bool bid_position_one_only(const BidFn& fn);

}  // namespace superbid

#endif  // SUPERBID_GAINS_HPP_
