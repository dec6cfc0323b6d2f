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
#include <doctest.h>

#include <cmath>

#include "superbid/gains.hpp"

using namespace superbid;

TEST_CASE("paper gain values") {
  CHECK(paper_gain(PaperGainFn::sqrt_gain(), 4.0) == 2.0);
  CHECK(paper_gain(PaperGainFn::capped(6), 7.0) == 6.0);
  CHECK(paper_gain(PaperGainFn::linear(1.0), 0.0) == 0.0);
  CHECK(paper_gain(PaperGainFn::linear(2.5), 3.0) == 7.5);
}

TEST_CASE("marginal paper gain values") {
  CHECK(marginal_paper_gain(PaperGainFn::sqrt_gain(), 0.0) == 1.0);
  CHECK(marginal_paper_gain(PaperGainFn::sqrt_gain(), 1.0) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
  CHECK(marginal_paper_gain(PaperGainFn::capped(6), 6.0) == 0.0);
  // Fractional arguments land between the integer marginals.
  CHECK(marginal_paper_gain(PaperGainFn::capped(6), 5.5) == 0.5);
}

TEST_CASE("marginal equals the forward difference exactly") {
  const PaperGainFn kinds[] = {PaperGainFn::sqrt_gain(), PaperGainFn::capped(6),
                               PaperGainFn::capped(1), PaperGainFn::linear(0.7)};
  for (const auto& fn : kinds) {
    for (int g = 0; g <= 20; ++g) {
      CHECK(marginal_paper_gain(fn, g) ==
            paper_gain(fn, g + 1.0) - paper_gain(fn, g));
    }
  }
}

TEST_CASE("reviewer gain values") {
  const auto dcg = ReviewerGainFn::dcg_log();
  CHECK(reviewer_gain(dcg, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reviewer_gain(dcg, 3, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(reviewer_gain(dcg, 1, 0.0) == 0.0);
  const auto sq = ReviewerGainFn::dcg_sqrt_pos();
  CHECK(reviewer_gain(sq, 4, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  const auto th = ReviewerGainFn::threshold(0.7);
  CHECK(reviewer_gain(th, 1, 0.7) == 1.0);
  CHECK(reviewer_gain(th, 2, 0.7) == 0.0);
  CHECK(reviewer_gain(th, 1, 0.3) == 0.0);
}

TEST_CASE("bid probability values") {
  const auto log_pos = BidFn::log_position();
  CHECK(bid_probability(log_pos, 1, 0.5) == 0.5);
  CHECK(bid_probability(log_pos, 3, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  const auto th = BidFn::threshold(0.7);
  CHECK(bid_probability(th, 1, 0.7) == 1.0);  // 0.7 > 0.35
  CHECK(bid_probability(th, 2, 0.7) == 0.0);
  CHECK(bid_probability(th, 1, 0.34) == 0.0);
}

TEST_CASE("monotonicity sweep over positions and similarities") {
  const ReviewerGainFn rg[] = {ReviewerGainFn::dcg_log(),
                               ReviewerGainFn::dcg_sqrt_pos(),
                               ReviewerGainFn::threshold(0.5)};
  const BidFn bf[] = {BidFn::log_position(), BidFn::sqrt_position(),
                      BidFn::threshold(0.5)};
  for (const auto& fn : bf) {
    for (int si = 0; si <= 10; ++si) {
      const double s = si / 10.0;
      for (int k = 1; k < 50; ++k) {
        CHECK(bid_probability(fn, k, s) >= bid_probability(fn, k + 1, s));
        CHECK(bid_probability(fn, k, s) >= 0.0);
        CHECK(bid_probability(fn, k, s) <= 1.0);
      }
    }
    for (int k = 1; k <= 50; ++k) {
      for (int si = 0; si < 10; ++si) {
        CHECK(bid_probability(fn, k, si / 10.0) <=
              bid_probability(fn, k, (si + 1) / 10.0));
      }
    }
  }
  for (const auto& fn : rg) {
    for (int si = 0; si <= 10; ++si) {
      const double s = si / 10.0;
      for (int k = 1; k < 50; ++k)
        CHECK(reviewer_gain(fn, k, s) >= reviewer_gain(fn, k + 1, s));
    }
    for (int k = 1; k <= 50; ++k) {
      for (int si = 0; si < 10; ++si)
        CHECK(reviewer_gain(fn, k, si / 10.0) <=
              reviewer_gain(fn, k, (si + 1) / 10.0));
    }
  }
}

TEST_CASE("decomposition exists exactly for the matched pairs") {
  ModelConfig cfg;
  cfg.bid = BidFn::log_position();
  cfg.reviewer_gain = ReviewerGainFn::dcg_log();
  auto dec = decompose(cfg);
  REQUIRE(dec.has_value());
  CHECK(dec->f_pi(2) == doctest::Approx(1.0 / std::log2(3.0)).epsilon(1e-15));

  cfg.bid = BidFn::sqrt_position();
  cfg.reviewer_gain = ReviewerGainFn::dcg_sqrt_pos();
  dec = decompose(cfg);
  REQUIRE(dec.has_value());
  CHECK(dec->f_pi(4) == 0.5);

  cfg.bid = BidFn::threshold(0.7);
  cfg.reviewer_gain = ReviewerGainFn::dcg_log();
  CHECK(!decompose(cfg).has_value());
  cfg.bid = BidFn::log_position();
  cfg.reviewer_gain = ReviewerGainFn::dcg_sqrt_pos();
  CHECK(!decompose(cfg).has_value());
}

TEST_CASE("decomposition factors reproduce the bid probability") {
  for (auto kind : {BidKind::LogPosition, BidKind::SqrtPosition}) {
    ModelConfig cfg;
    cfg.bid = kind == BidKind::LogPosition ? BidFn::log_position()
                                           : BidFn::sqrt_position();
    cfg.reviewer_gain = kind == BidKind::LogPosition
                            ? ReviewerGainFn::dcg_log()
                            : ReviewerGainFn::dcg_sqrt_pos();
    const auto dec = decompose(cfg);
    REQUIRE(dec.has_value());
    for (int k = 1; k <= 50; ++k) {
      for (int si = 0; si <= 10; ++si) {
        const double s = si / 10.0;
        CHECK(dec->f_s(s) * dec->f_pi(k) ==
              doctest::Approx(bid_probability(cfg.bid, k, s)).epsilon(1e-12));
        CHECK(dec->reviewer_gain_s(s) * dec->f_pi(k) ==
              doctest::Approx(reviewer_gain(cfg.reviewer_gain, k, s))
                  .epsilon(1e-12));
      }
    }
  }
}
