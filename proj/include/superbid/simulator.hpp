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
#ifndef SUPERBID_SIMULATOR_HPP_
#define SUPERBID_SIMULATOR_HPP_

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superbid/rng.hpp"
#include "superbid/types.hpp"

namespace superbid {

enum class Algorithm { SuperZero, SuperMean, Sim, Bid, Rand };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

/// Deviations from the faithful sequential-arrival model used in the
/// robustness studies.
struct ScenarioConfig {
  enum class Kind {
    Faithful,
    BidModelMismatch,   // orderings assume `bid`, reviewers follow actual_bid
    SimilarityNoise,    // bid prob = clamp((S + N(0, sigma^2)) / denom, 0, 1)
    PartialArrival,     // only the first ceil(fraction * n) reviewers arrive
    ConcurrentPoisson,  // Poisson(rate)-sized batches see the same state
    SearchSubset        // each reviewer bids within ceil(fraction * d) papers
  };

  Kind kind = Kind::Faithful;
  BidFn actual_bid = BidFn::log_position();
  double sigma = 0.0;
  double fraction = 1.0;
  double rate = 1.0;

  static ScenarioConfig faithful() { return {}; }
  static ScenarioConfig bid_mismatch(BidFn actual);
  static ScenarioConfig similarity_noise(double sigma);
  static ScenarioConfig partial_arrival(double fraction);
  static ScenarioConfig concurrent_poisson(double rate);
  static ScenarioConfig search_subset(double fraction);

  /// Throws InvalidScenarioError on out-of-range parameters.
  void validate() const;
};

/// Named random streams for one run. Algorithms compared under the same
/// (master, run) pair face identical arrival shuffles, matrix draws, and
/// per-arrival-slot bid randomness.
struct RunStreams {
  std::uint64_t master = 0;
  std::uint64_t run = 0;

  std::mt19937_64 arrival() const { return named_stream(master, "arrival", run); }
  std::mt19937_64 matrix_draw() const { return named_stream(master, "matrix", run); }
  std::mt19937_64 batches() const { return named_stream(master, "batches", run); }
  std::mt19937_64 bids(int slot) const {
    return named_stream(master, "bids", run, static_cast<std::uint64_t>(slot));
  }
  std::mt19937_64 ties(int slot) const {
    return named_stream(master, "ties", run, static_cast<std::uint64_t>(slot));
  }
  std::mt19937_64 scenario(int slot) const {
    return named_stream(master, "scenario", run,
                        static_cast<std::uint64_t>(slot));
  }
};

/// Independent Bernoulli bid per paper with success probability
/// f(position(j), S_j). One uniform is drawn per paper in index order, so
/// orderings compared under a shared generator state see common randomness.
std::vector<std::uint8_t> sample_bids(const PaperOrdering& ordering,
                                      std::span<const double> row,
                                      const BidFn& bid, std::mt19937_64& rng);

/// Sequential bidding process on a matrix whose rows are already in arrival
/// order. Reviewer gain accumulates online; paper gain is computed from the
/// final counts.
SimulationResult run_simulation(const SimilarityMatrix& matrix, Algorithm algo,
                                const ModelConfig& config,
                                const RunStreams& streams);

/// run_simulation under one of the robustness scenarios.
SimulationResult run_scenario(const SimilarityMatrix& matrix, Algorithm algo,
                              const ScenarioConfig& scenario,
                              const ModelConfig& config,
                              const RunStreams& streams);

/// Same, with an injected batch-size sampler. The ConcurrentPoisson scenario
/// normally draws Poisson(rate); a constant-one sampler reduces it to the
/// sequential process.
SimulationResult run_scenario(const SimilarityMatrix& matrix, Algorithm algo,
                              const ScenarioConfig& scenario,
                              const ModelConfig& config,
                              const RunStreams& streams,
                              std::function<int(std::mt19937_64&)> batch_sampler);

/// A fixed matrix or a distribution over matrices; stochastic sources are
/// redrawn once per run.
struct MatrixSource {
  std::function<SimilarityMatrix(std::mt19937_64&)> draw;
  bool stochastic = false;

  static MatrixSource fixed(SimilarityMatrix m);
  static MatrixSource from_generator(
      std::function<SimilarityMatrix(std::mt19937_64&)> g);
};

struct RunRecord {
  Algorithm algorithm;
  double lambda;
  int run;
  double total_gain;
  double paper_gain;
  double reviewer_gain;
  std::array<long long, 4> bid_histogram;
};

struct AggregateRecord {
  Algorithm algorithm;
  double lambda;
  int runs;
  double mean_total_gain;
  double sem_total_gain;
  double mean_paper_gain;
  double mean_reviewer_gain;
  std::array<double, 4> mean_histogram;
};

struct ExperimentReport {
  std::vector<RunRecord> runs;
  std::vector<AggregateRecord> aggregates;
};

/// Repeated-run protocol: per run, a fresh matrix draw (when the source is
/// stochastic) and a fresh arrival shuffle, shared across every algorithm
/// and lambda in the grid.
ExperimentReport run_experiment(const MatrixSource& source,
                                const std::vector<Algorithm>& algorithms,
                                const ScenarioConfig& scenario,
                                const ModelConfig& base_config,
                                const std::vector<double>& lambda_grid,
                                int n_runs, std::uint64_t base_seed);

/// CSV columns: algorithm, lambda, run, total_gain, paper_gain,
/// reviewer_gain, hist_0_2, hist_3_5, hist_6_8, hist_9_plus.
void write_runs_csv(const ExperimentReport& report, std::ostream& out);
/// JSON aggregate: means, SEMs, and mean histograms per (algorithm, lambda).
void write_aggregate_json(const ExperimentReport& report, std::ostream& out);

}  // namespace superbid

#endif  // SUPERBID_SIMULATOR_HPP_
