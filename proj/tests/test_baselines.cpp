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
#include <map>

#include "superbid/baselines.hpp"
#include "superbid/gains.hpp"
#include "superbid/rng.hpp"
#include "superbid/superstar.hpp"

using namespace superbid;

namespace {

// 3-sigma band around the expected count of a multinomial cell.
void check_uniform_over_permutations(
    const std::map<std::vector<int>, int>& counts, int draws, int cells) {
  CHECK(static_cast<int>(counts.size()) == cells);
  const double p = 1.0 / cells;
  const double sigma = std::sqrt(draws * p * (1.0 - p));
  for (const auto& [perm, count] : counts) {
    CHECK(std::abs(count - draws * p) <= 3.0 * sigma);
  }
}

}  // namespace

TEST_CASE("rand_order basics") {
  auto rng = named_stream(3, "rand-order");
  CHECK(rand_order(1, rng) == PaperOrdering::identity(1));

  auto a = named_stream(9, "rand-seeded");
  auto b = named_stream(9, "rand-seeded");
  for (int i = 0; i < 10; ++i) CHECK(rand_order(5, a) == rand_order(5, b));
}

TEST_CASE("rand_order is uniform over the six 3-permutations") {
  auto rng = named_stream(13, "rand-uniform");
  std::map<std::vector<int>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) counts[rand_order(3, rng).positions()]++;
  check_uniform_over_permutations(counts, draws, 6);
}

TEST_CASE("sim_order sorts by similarity with bid-count ties") {
  auto rng = named_stream(19, "sim-order");
  const std::vector<double> row{0.9, 0.9, 0.1};
  const BidState bids(std::vector<int>{5, 0, 0});
  const auto ordering = sim_order(row, bids, rng);
  CHECK(ordering.position(1) == 1);  // fewer bids wins the similarity tie
  CHECK(ordering.position(0) == 2);
  CHECK(ordering.position(2) == 3);

  const auto strict = sim_order(std::vector<double>{0.9, 0.5, 0.1},
                                BidState(std::vector<int>{7, 7, 7}), rng);
  CHECK(strict == PaperOrdering::identity(3));
}

TEST_CASE("sim_order full ties are uniform") {
  auto rng = named_stream(29, "sim-uniform");
  const std::vector<double> row{0.4, 0.4, 0.4};
  const BidState bids(std::vector<int>{2, 2, 2});
  std::map<std::vector<int>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i)
    counts[sim_order(row, bids, rng).positions()]++;
  check_uniform_over_permutations(counts, draws, 6);
}

TEST_CASE("bid_order sorts by count with similarity ties") {
  auto rng = named_stream(31, "bid-order");
  {
    const auto ordering = bid_order(BidState(std::vector<int>{2, 0, 1}),
                                    std::vector<double>{0.5, 0.5, 0.5}, rng);
    CHECK(ordering.position(1) == 1);
    CHECK(ordering.position(2) == 2);
    CHECK(ordering.position(0) == 3);
  }
  {
    const auto ordering = bid_order(BidState(std::vector<int>{3, 3}),
                                    std::vector<double>{0.1, 0.9}, rng);
    CHECK(ordering.position(1) == 1);  // higher similarity wins the tie
  }
}

TEST_CASE("bid_order full ties are uniform") {
  auto rng = named_stream(37, "bid-uniform");
  std::map<std::vector<int>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i)
    counts[bid_order(BidState(std::vector<int>{1, 1, 1}),
                     std::vector<double>{0.2, 0.2, 0.2}, rng)
               .positions()]++;
  check_uniform_over_permutations(counts, draws, 6);
}

TEST_CASE("sorted-output invariants on random instances") {
  auto rng = named_stream(41, "sorted");
  std::uniform_real_distribution<double> sim(0.0, 1.0);
  std::uniform_int_distribution<int> count(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 8);
    std::vector<double> row(d);
    for (auto& v : row) v = sim(rng);
    std::vector<int> counts(d);
    for (auto& v : counts) v = count(rng);
    const BidState bids(counts);

    const auto by_sim = sim_order(row, bids, rng).display_order();
    for (size_t k = 0; k + 1 < by_sim.size(); ++k)
      CHECK(row[by_sim[k]] >= row[by_sim[k + 1]]);

    const auto by_bid = bid_order(bids, row, rng).display_order();
    for (size_t k = 0; k + 1 < by_bid.size(); ++k)
      CHECK(bids.count(by_bid[k]) <= bids.count(by_bid[k + 1]));
  }
}

TEST_CASE("similarity ordering maximizes the exact reviewer-side gain") {
  auto rng = named_stream(43, "sim-dominance");
  std::uniform_real_distribution<double> sim(0.0, 1.0);
  std::uniform_int_distribution<int> count(0, 4);
  ModelConfig cfg;
  cfg.paper_gain = PaperGainFn::sqrt_gain();
  cfg.reviewer_gain = ReviewerGainFn::dcg_log();
  cfg.bid = BidFn::log_position();
  cfg.lambda = 0.8;

  auto reviewer_side = [&](const PaperOrdering& ordering,
                           const std::vector<double>& row) {
    double total = 0.0;
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      total += reviewer_gain(cfg.reviewer_gain, ordering.position(j), row[j]);
    return total;
  };

  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 6);
    std::vector<double> row(d);
    for (auto& v : row) v = sim(rng);
    std::vector<int> counts(d);
    for (auto& v : counts) v = count(rng);
    const BidState bids(counts);

    const double best = reviewer_side(sim_order(row, bids, rng), row);
    CHECK(best + 1e-12 >=
          reviewer_side(bid_order(bids, row, rng), row));
    CHECK(best + 1e-12 >= reviewer_side(rand_order(d, rng), row));
    CHECK(best + 1e-12 >=
          reviewer_side(
              order_papers(row, bids, HeuristicVector(d, 0.0), cfg), row));
  }
}
