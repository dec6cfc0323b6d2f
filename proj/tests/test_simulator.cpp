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
#include <numeric>
#include <sstream>

#include "superbid/gains.hpp"
#include "superbid/generators.hpp"
#include "superbid/oracle.hpp"
#include "superbid/rng.hpp"
#include "superbid/simulator.hpp"

using namespace superbid;

namespace {

ModelConfig sqrt_log(double lambda) {
  ModelConfig cfg;
  cfg.paper_gain = PaperGainFn::sqrt_gain();
  cfg.reviewer_gain = ReviewerGainFn::dcg_log();
  cfg.bid = BidFn::log_position();
  cfg.lambda = lambda;
  return cfg;
}

SimilarityMatrix random_matrix(int n, int d, std::uint64_t seed) {
  auto rng = named_stream(seed, "sim-matrix");
  std::uniform_real_distribution<double> sim(0.0, 1.0);
  std::vector<double> scores(static_cast<size_t>(n) * d);
  for (auto& v : scores) v = sim(rng);
  return SimilarityMatrix(n, d, scores);
}

}  // namespace

TEST_CASE("scenario parameter validation") {
  CHECK_THROWS_AS(ScenarioConfig::partial_arrival(0.0).validate(),
                  InvalidScenarioError);
  CHECK_THROWS_AS(ScenarioConfig::partial_arrival(1.5).validate(),
                  InvalidScenarioError);
  CHECK_THROWS_AS(ScenarioConfig::similarity_noise(-1.0).validate(),
                  InvalidScenarioError);
  CHECK_THROWS_AS(ScenarioConfig::concurrent_poisson(0.0).validate(),
                  InvalidScenarioError);
  CHECK_NOTHROW(ScenarioConfig::search_subset(1.0).validate());
}

TEST_CASE("bid sampling respects deterministic probabilities") {
  auto rng = named_stream(71, "bids");
  {
    // Top-position paper above the block threshold always draws the bid.
    const std::vector<double> row{0.7, 0.7, 0.0};
    const auto bits = sample_bids(PaperOrdering({1, 2, 3}), row,
                                  BidFn::threshold(0.7), rng);
    CHECK(bits == std::vector<std::uint8_t>{1, 0, 0});
  }
  {
    const std::vector<double> row{0.0, 0.0};
    for (int rep = 0; rep < 20; ++rep)
      CHECK(sample_bids(PaperOrdering({1, 2}), row, BidFn::log_position(),
                        rng) == std::vector<std::uint8_t>{0, 0});
  }
  {
    const std::vector<double> row{1.0, 0.3};
    for (int rep = 0; rep < 20; ++rep)
      CHECK(sample_bids(PaperOrdering({1, 2}), row, BidFn::log_position(),
                        rng)[0] == 1);
  }
}

TEST_CASE("single-reviewer run earns the deterministic unit gain") {
  const SimilarityMatrix m(1, 2, {1.0, 0.0});
  const ModelConfig cfg = sqrt_log(0.0);
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    RunStreams streams{91, static_cast<std::uint64_t>(k)};
    const auto res = run_simulation(m, Algorithm::SuperZero, cfg, streams);
    CHECK(res.total_gain == 1.0);
    sum += res.total_gain;
  }
  CHECK(sum / 200 == 1.0);
}

TEST_CASE("noiseless community run is exactly optimal every time") {
  auto rng = named_stream(73, "community-run");
  const CommunityConfig cc{2, 2, 0.7, 0.0};
  const auto inst = gen_community(cc, rng);
  ModelConfig cfg = sqrt_log(0.0);
  cfg.bid = BidFn::threshold(0.7);

  for (int k = 0; k < 10; ++k) {
    RunStreams streams{17, static_cast<std::uint64_t>(k)};
    const auto res = run_simulation(inst.matrix, Algorithm::SuperZero, cfg, streams);
    CHECK(res.paper_gain == 4.0);
    CHECK(res.final_bids.counts() == std::vector<int>(4, 1));
  }

  cfg.lambda = 1.0;
  RunStreams streams{17, 3};
  const auto res = run_simulation(inst.matrix, Algorithm::SuperZero, cfg, streams);
  const double expected = community_optimum_analytic(cc, 1.0);
  CHECK(res.total_gain == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(8.0741).epsilon(1e-4));
}

TEST_CASE("gain accounting identity against the logged history") {
  const auto m = random_matrix(6, 4, 77);
  const ModelConfig cfg = sqrt_log(0.8);
  for (Algorithm algo : {Algorithm::SuperZero, Algorithm::SuperMean,
                         Algorithm::Sim, Algorithm::Bid, Algorithm::Rand}) {
    RunStreams streams{5, 1};
    const auto res = run_simulation(m, algo, cfg, streams);
    REQUIRE(res.history.size() == 6);

    BidState recount(4);
    double reviewer_total = 0.0;
    for (int i = 0; i < 6; ++i) {
      const auto& entry = res.history[i];
      recount.apply(entry.bids);
      for (int j = 0; j < 4; ++j)
        reviewer_total += reviewer_gain(cfg.reviewer_gain,
                                        entry.ordering.position(j), m.at(i, j));
    }
    CHECK(recount == res.final_bids);
    double paper_total = 0.0;
    for (int j = 0; j < 4; ++j)
      paper_total += paper_gain(cfg.paper_gain, recount.count(j));
    CHECK(res.total_gain == doctest::Approx(paper_total +
                                            cfg.lambda * reviewer_total)
                                .epsilon(1e-9));
    CHECK(res.total_gain ==
          doctest::Approx(res.paper_gain + cfg.lambda * res.reviewer_gain)
              .epsilon(1e-12));
  }
}

TEST_CASE("bid counts grow by at most one per arrival") {
  const auto m = random_matrix(8, 3, 79);
  const ModelConfig cfg = sqrt_log(0.8);
  RunStreams streams{11, 0};
  const auto res = run_simulation(m, Algorithm::Sim, cfg, streams);
  BidState running(3);
  for (const auto& entry : res.history) {
    const auto before = running.counts();
    running.apply(entry.bids);
    for (int j = 0; j < 3; ++j) {
      const int diff = running.count(j) - before[j];
      CHECK(diff >= 0);
      CHECK(diff <= 1);
    }
  }
  for (int j = 0; j < 3; ++j) CHECK(res.final_bids.count(j) <= m.reviewers());
}

TEST_CASE("equal seeds reproduce runs bit-for-bit") {
  const auto m = random_matrix(5, 4, 83);
  const ModelConfig cfg = sqrt_log(0.8);
  for (Algorithm algo : {Algorithm::SuperMean, Algorithm::Bid, Algorithm::Rand}) {
    RunStreams streams{29, 4};
    const auto a = run_simulation(m, algo, cfg, streams);
    const auto b = run_simulation(m, algo, cfg, streams);
    CHECK(a == b);
  }
}

TEST_CASE("degenerate scenarios reduce to the faithful run") {
  const auto m = random_matrix(7, 5, 87);
  const ModelConfig cfg = sqrt_log(0.8);
  for (Algorithm algo : {Algorithm::SuperZero, Algorithm::Sim}) {
    RunStreams streams{31, 2};
    const auto faithful = run_simulation(m, algo, cfg, streams);

    const auto subset_all = run_scenario(
        m, algo, ScenarioConfig::search_subset(1.0), cfg, streams);
    CHECK(subset_all.total_gain == faithful.total_gain);
    CHECK(subset_all.final_bids == faithful.final_bids);

    const auto no_noise = run_scenario(
        m, algo, ScenarioConfig::similarity_noise(0.0), cfg, streams);
    CHECK(no_noise == faithful);

    const auto single_batches =
        run_scenario(m, algo, ScenarioConfig::concurrent_poisson(1.0), cfg,
                     streams, [](std::mt19937_64&) { return 1; });
    CHECK(single_batches == faithful);
  }
}

TEST_CASE("partial arrival truncates the process") {
  const auto m = random_matrix(8, 3, 89);
  const ModelConfig cfg = sqrt_log(0.8);
  RunStreams streams{37, 0};
  const auto res = run_scenario(m, Algorithm::SuperMean,
                                ScenarioConfig::partial_arrival(0.75), cfg,
                                streams);
  CHECK(res.history.size() == 6);  // ceil(0.75 * 8)
  long long total = std::accumulate(res.final_bids.counts().begin(),
                                    res.final_bids.counts().end(), 0LL);
  CHECK(total <= 6 * 3);
}

TEST_CASE("bid-model mismatch samples from the actual model") {
  // Actual model bids deterministically on the top paper only.
  const auto m = random_matrix(6, 4, 93);
  std::vector<double> high(m.scores());
  for (auto& v : high) v = 0.9;
  const SimilarityMatrix bright(6, 4, high);
  const ModelConfig cfg = sqrt_log(0.8);
  RunStreams streams{41, 0};
  const auto res = run_scenario(
      bright, Algorithm::SuperZero,
      ScenarioConfig::bid_mismatch(BidFn::threshold(0.7)), cfg, streams);
  long long total = std::accumulate(res.final_bids.counts().begin(),
                                    res.final_bids.counts().end(), 0LL);
  CHECK(total == 6);  // exactly one bid per reviewer
}

TEST_CASE("search subset caps per-reviewer bids at the subset size") {
  std::vector<double> ones(8 * 8, 1.0);
  const SimilarityMatrix m(8, 8, ones);
  const ModelConfig cfg = sqrt_log(0.8);
  RunStreams streams{43, 0};
  const auto res = run_scenario(m, Algorithm::SuperZero,
                                ScenarioConfig::search_subset(0.25), cfg,
                                streams);
  for (const auto& entry : res.history) {
    const int bids_placed =
        std::accumulate(entry.bids.begin(), entry.bids.end(), 0);
    CHECK(bids_placed <= 2);  // ceil(0.25 * 8)
  }
}

TEST_CASE("experiment report shapes, pairing, and serialization") {
  const MatrixSource source = MatrixSource::from_generator(
      [](std::mt19937_64& rng) { return gen_homogeneous(12, 10, 1.0, 15.0, rng); });
  const std::vector<Algorithm> algos = {Algorithm::SuperZero, Algorithm::Sim};
  const ModelConfig cfg;  // defaults
  const auto report = run_experiment(source, algos, ScenarioConfig::faithful(),
                                     cfg, {0.4, 0.8}, 3, 99);
  CHECK(report.runs.size() == 2 * 2 * 3);
  CHECK(report.aggregates.size() == 2 * 2);

  const auto again = run_experiment(source, algos, ScenarioConfig::faithful(),
                                    cfg, {0.4, 0.8}, 3, 99);
  std::ostringstream a, b;
  write_runs_csv(report, a);
  write_runs_csv(again, b);
  CHECK(a.str() == b.str());
  std::ostringstream ja, jb;
  write_aggregate_json(report, ja);
  write_aggregate_json(again, jb);
  CHECK(ja.str() == jb.str());
}

TEST_CASE("SEM of identical runs is zero") {
  // One reviewer, deterministic bid: every run is the same trajectory.
  const SimilarityMatrix m(1, 2, {1.0, 0.0});
  const MatrixSource source = MatrixSource::fixed(m);
  const ModelConfig cfg = sqrt_log(0.0);
  const auto report =
      run_experiment(source, {Algorithm::SuperZero},
                     ScenarioConfig::faithful(), cfg, {0.0}, 5, 123);
  REQUIRE(report.aggregates.size() == 1);
  CHECK(report.aggregates[0].sem_total_gain == 0.0);
  CHECK(report.aggregates[0].mean_total_gain == 1.0);
}

TEST_CASE("algorithms share arrival order and bid randomness per slot") {
  // With everyone ordering identically (single paper), the bid outcomes
  // must agree bit-for-bit across algorithms under one seed.
  const auto m = random_matrix(10, 1, 101);
  const ModelConfig cfg = sqrt_log(0.8);
  RunStreams streams{59, 6};
  const auto a = run_simulation(m, Algorithm::SuperZero, cfg, streams);
  const auto b = run_simulation(m, Algorithm::Rand, cfg, streams);
  CHECK(a.final_bids == b.final_bids);
  for (size_t i = 0; i < a.history.size(); ++i)
    CHECK(a.history[i].bids == b.history[i].bids);
}
