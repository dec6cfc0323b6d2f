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
#include "superbid/gains.hpp"

#include <algorithm>
#include <cmath>

namespace superbid {

double paper_gain(const PaperGainFn& fn, double g) {
  switch (fn.kind) {
    case PaperGainKind::Sqrt:
      return std::sqrt(g);
    case PaperGainKind::Capped:
      return std::min(g, static_cast<double>(fn.cap));
    case PaperGainKind::Linear:
      return fn.slope * g;
  }
  return 0.0;
}

double marginal_paper_gain(const PaperGainFn& fn, double g) {
  return paper_gain(fn, g + 1.0) - paper_gain(fn, g);
}

double reviewer_gain(const ReviewerGainFn& fn, int position, double s) {
  switch (fn.kind) {
    case ReviewerGainKind::DcgLog:
      return (std::exp2(s) - 1.0) / std::log2(position + 1.0);
    case ReviewerGainKind::DcgSqrtPos:
      return (std::exp2(s) - 1.0) / std::sqrt(static_cast<double>(position));
    case ReviewerGainKind::ThresholdIndicator:
      return (position == 1 && s > fn.threshold_s / 2.0) ? 1.0 : 0.0;
    case ReviewerGainKind::Tabulated:
      return fn.table->at(position, s);
  }
  return 0.0;
}

double bid_probability(const BidFn& fn, int position, double s) {
  switch (fn.kind) {
    case BidKind::LogPosition:
      return s / std::log2(position + 1.0);
    case BidKind::SqrtPosition:
      return s / std::sqrt(static_cast<double>(position));
    case BidKind::ThresholdIndicator:
      return (position == 1 && s > fn.threshold_s / 2.0) ? 1.0 : 0.0;
    case BidKind::Tabulated:
      return fn.table->at(position, s);
  }
  return 0.0;
}

double Decomposition::f_pi(int position) const {
  if (position_kind == BidKind::LogPosition)
    return 1.0 / std::log2(position + 1.0);
  return 1.0 / std::sqrt(static_cast<double>(position));
}

double Decomposition::reviewer_gain_s(double s) const {
  return std::exp2(s) - 1.0;
}

std::optional<Decomposition> decompose(const ModelConfig& config) {
  if (config.bid.kind == BidKind::LogPosition &&
      config.reviewer_gain.kind == ReviewerGainKind::DcgLog)
    return Decomposition{BidKind::LogPosition};
  if (config.bid.kind == BidKind::SqrtPosition &&
      config.reviewer_gain.kind == ReviewerGainKind::DcgSqrtPos)
    return Decomposition{BidKind::SqrtPosition};
  return std::nullopt;
}

bool bid_position_one_only(const BidFn& fn) {
  return fn.kind == BidKind::ThresholdIndicator;
}

}  // namespace superbid
