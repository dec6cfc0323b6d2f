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

#include <algorithm>
#include <cmath>
#include <set>

#include "superbid/baselines.hpp"
#include "superbid/generators.hpp"
#include "superbid/oracle.hpp"
#include "superbid/rng.hpp"
#include "superbid/superstar.hpp"

using namespace superbid;

namespace {

// Rank by Gaussian elimination with partial pivoting.
int numerical_rank(std::vector<std::vector<double>> rows, double tol) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int pivot = -1;
    double best = tol;
    for (int i = rank; i < r; ++i) {
      if (std::abs(rows[i][col]) > best) {
        best = std::abs(rows[i][col]);
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < r; ++i) {
      const double f = rows[i][col] / rows[rank][col];
      for (int k = col; k < c; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

ModelConfig sqrt_log(double lambda) {
  ModelConfig cfg;
  cfg.paper_gain = PaperGainFn::sqrt_gain();
  cfg.reviewer_gain = ReviewerGainFn::dcg_log();
  cfg.bid = BidFn::log_position();
  cfg.lambda = lambda;
  return cfg;
}

}  // namespace

TEST_CASE("homogeneous Beta(1,15) matches its analytic mean") {
  auto rng = named_stream(51, "beta-mean");
  const auto m = gen_homogeneous(1000, 1000, 1.0, 15.0, rng);
  double sum = 0.0;
  for (double v : m.scores()) sum += v;
  const double mean = sum / m.scores().size();
  CHECK(mean == doctest::Approx(0.0625).epsilon(0.016));  // +-0.001 absolute
  CHECK(std::abs(mean - 0.0625) <= 0.001);
}

TEST_CASE("Beta(1,1) entries look uniform (KS test)") {
  auto rng = named_stream(53, "beta-uniform");
  const auto m = gen_homogeneous(400, 250, 1.0, 1.0, rng);
  std::vector<double> xs(m.scores());
  std::sort(xs.begin(), xs.end());
  double dmax = 0.0;
  const double n = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    dmax = std::max(dmax, std::abs((i + 1) / n - xs[i]));
    dmax = std::max(dmax, std::abs(xs[i] - i / n));
  }
  CHECK(dmax < 1.63 / std::sqrt(n));  // 1% critical value
}

TEST_CASE("generators are seed-reproducible") {
  auto a = named_stream(55, "gen-repro");
  auto b = named_stream(55, "gen-repro");
  CHECK(gen_homogeneous(20, 30, 1.0, 15.0, a) ==
        gen_homogeneous(20, 30, 1.0, 15.0, b));
  CHECK(gen_community(CommunityConfig{2, 3, 0.5, 1e-3}, a).matrix ==
        gen_community(CommunityConfig{2, 3, 0.5, 1e-3}, b).matrix);
}

TEST_CASE("low-rank structure: identical rows per block, rank at most 10") {
  auto rng = named_stream(57, "lowrank");
  const int n = 100, d = 20000;
  const auto m = gen_lowrank(n, d, rng);
  CHECK(std::equal(m.row(0).begin(), m.row(0).end(), m.row(1).begin()));
  CHECK(std::equal(m.row(0).begin(), m.row(0).end(), m.row(9).begin()));

  std::vector<std::vector<double>> distinct;
  for (int block = 0; block < 10; ++block) {
    const auto row = m.row(block * (n / 10));
    distinct.emplace_back(row.begin(), row.end());
  }
  CHECK(numerical_rank(distinct, 1e-9) <= 10);

  for (int block = 0; block < 10; ++block) {
    const auto row = m.row(block * (n / 10));
    double sum = 0.0;
    for (double v : row) sum += v;
    const double expected = (block + 1.0) / (block + 1.0 + 60.0);
    CHECK(sum / d == doctest::Approx(expected).epsilon(0.08));
  }

  CHECK_THROWS_AS(gen_lowrank(99, 50, rng), DivisibilityError);
}

TEST_CASE("noiseless community rows hold q block entries exactly") {
  auto rng = named_stream(59, "community");
  const CommunityConfig cfg{2, 2, 0.7, 0.0};
  const auto inst = gen_community(cfg, rng);
  const auto& m = inst.matrix;
  REQUIRE(m.reviewers() == 4);
  REQUIRE(m.papers() == 4);
  for (int i = 0; i < 4; ++i) {
    int on_block = 0;
    double repeated = 0.0;
    double row_sum = 0.0;
    for (int j = 0; j < 4; ++j) {
      row_sum += m.at(i, j);
      if (m.at(i, j) == 0.7) {
        ++on_block;
        repeated += 0.7;
      } else {
        CHECK(m.at(i, j) == 0.0);
      }
    }
    CHECK(on_block == cfg.q);
    CHECK(row_sum == repeated);  // q*s assembled the same way the row sums
  }

  // Ground-truth labels reconstruct the block-diagonal form.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK((m.at(i, j) == 0.7) ==
            (inst.reviewer_block[i] == inst.paper_block[j]));
}

TEST_CASE("noisy community keeps entries inside the noise bands") {
  auto rng = named_stream(61, "community-noisy");
  const double xi = 1e-4;
  const CommunityConfig cfg{3, 2, 0.7, xi};
  const auto inst = gen_community(cfg, rng);
  for (int i = 0; i < inst.matrix.reviewers(); ++i) {
    for (int j = 0; j < inst.matrix.papers(); ++j) {
      const double v = inst.matrix.at(i, j);
      if (inst.reviewer_block[i] == inst.paper_block[j]) {
        CHECK(v > 0.7 - xi);
        CHECK(v < 0.7);
      } else {
        CHECK(v > 0.0);
        CHECK(v < xi);
      }
    }
  }
}

TEST_CASE("additive-noise community preset stays block structured") {
  auto rng = named_stream(63, "community-additive");
  const auto inst = gen_community_synthetic(10, 25, 0.7, 0.05, rng);
  REQUIRE(inst.matrix.reviewers() == 250);
  for (int i = 0; i < 250; i += 37) {
    for (int j = 0; j < 250; j += 41) {
      const double v = inst.matrix.at(i, j);
      if (inst.reviewer_block[i] == inst.paper_block[j]) {
        CHECK(v >= 0.7);
        CHECK(v < 0.75);
      } else {
        CHECK(v >= 0.0);
        CHECK(v < 0.05);
      }
    }
  }
}

TEST_CASE("interdisciplinary groups carry the stated constants") {
  const auto inst = gen_interdisciplinary(10, 10);
  const auto& m = inst.matrix;
  // 40/40/20 split: papers 0..3, 4..7, 8..9.
  CHECK(m.at(0, 0) == 0.17);
  CHECK(m.at(0, 4) == 0.005);
  CHECK(m.at(0, 8) == 0.085);
  CHECK(m.at(9, 0) == 0.005);
  CHECK(m.at(9, 4) == 0.17);
  CHECK(m.at(9, 8) == 0.085);
  CHECK(inst.paper_group ==
        std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2, 2});
  CHECK_THROWS_AS(gen_interdisciplinary(9, 10), DivisibilityError);
  CHECK_THROWS_AS(gen_interdisciplinary(10, 12), DivisibilityError);
}

TEST_CASE("worst-case similarity instance layout") {
  const WorstCaseConfig cfg{2, 0.0};
  CHECK(cfg.epsilon() == doctest::Approx(3814279.1047602).epsilon(1e-9));
  const auto inst = gen_worstcase_sim(cfg);
  CHECK(inst.row[0] == 1.0 - 1.0 / cfg.epsilon());
  CHECK(inst.row[1] == 1.0 - 1.0 / (2.0 * cfg.epsilon()));
  CHECK(inst.bids.counts() == std::vector<int>{0, 1});

  const auto odd = gen_worstcase_sim({5, 1.0});
  CHECK(odd.row[4] == 0.0);
  CHECK(odd.bids.count(4) == 1);
  CHECK(odd.bids.counts() == std::vector<int>{0, 0, 1, 1, 1});
}

TEST_CASE("worst-case bid instance layout") {
  const auto inst = gen_worstcase_bid(4);
  CHECK(inst.row == std::vector<double>{1.0, 1.0, 0.0, 0.0});
  CHECK(inst.bids.counts() == std::vector<int>{1, 1, 0, 0});

  const auto odd = gen_worstcase_bid(5);
  CHECK(odd.row == std::vector<double>{1.0, 1.0, 0.0, 0.0, 0.0});
  CHECK(odd.bids.counts() == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("exact gap values on the d=2 adversarial instances") {
  const ModelConfig cfg = sqrt_log(0.0);
  {
    const auto inst = gen_worstcase_sim({2, 0.0});
    const auto mine =
        order_papers(inst.row, inst.bids, HeuristicVector(2, 0.0), cfg);
    const double gap =
        expected_immediate_gain(mine, inst.row, inst.bids, cfg) -
        expected_immediate_gain(sim_order_deterministic(inst.row, inst.bids),
                                inst.row, inst.bids, cfg);
    CHECK(gap == doctest::Approx(0.216).epsilon(2e-3));
    CHECK(gap >= 2.0 / 64.0);
  }
  {
    const auto inst = gen_worstcase_bid(2);
    const auto mine =
        order_papers(inst.row, inst.bids, HeuristicVector(2, 0.0), cfg);
    const double gap =
        expected_immediate_gain(mine, inst.row, inst.bids, cfg) -
        expected_immediate_gain(bid_order_deterministic(inst.bids, inst.row),
                                inst.row, inst.bids, cfg);
    const double expected =
        (std::sqrt(2.0) - 1.0) * (1.0 - 1.0 / std::log2(3.0));
    CHECK(gap == doctest::Approx(expected).epsilon(1e-12));
    CHECK(gap >= 2.0 / 96.0);
  }
}

TEST_CASE("optimal orderings on the adversarial instances match closed forms") {
  for (int d : {4, 8, 16}) {
    const double lambda = 1.0;
    const ModelConfig cfg = sqrt_log(lambda);
    {
      const auto inst = gen_worstcase_sim({d, lambda});
      const auto mine =
          order_papers(inst.row, inst.bids, HeuristicVector(d, 0.0), cfg);
      for (int j = 0; j < d / 2; ++j)
        CHECK(mine.position(j) == d / 2 - j);  // 0-based j: d/2 - j + 1
      for (int j = d / 2; j < d; ++j)
        CHECK(mine.position(j) == d + d / 2 - j);
    }
    {
      const auto inst = gen_worstcase_bid(d);
      const auto mine =
          order_papers(inst.row, inst.bids, HeuristicVector(d, 0.0), cfg);
      for (int j = 0; j < d / 2; ++j) CHECK(mine.position(j) == j + 1);
    }
  }
}

TEST_CASE("generator outputs always validate") {
  auto rng = named_stream(67, "gen-validate");
  CHECK_NOTHROW(gen_homogeneous(15, 7, 2.0, 3.0, rng));
  CHECK_NOTHROW(gen_lowrank(20, 9, rng));
  CHECK_NOTHROW(gen_community(CommunityConfig{2, 2, 0.01, 1e-6}, rng));
  CHECK_NOTHROW(gen_interdisciplinary(4, 5));
  const auto wc = gen_worstcase_sim({7, 2.0});
  for (double v : wc.row) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}
