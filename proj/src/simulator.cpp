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
#include "superbid/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "superbid/baselines.hpp"
#include "superbid/gains.hpp"
#include "superbid/superstar.hpp"

namespace superbid {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::SuperZero: return "super-zero";
    case Algorithm::SuperMean: return "super-mean";
    case Algorithm::Sim: return "sim";
    case Algorithm::Bid: return "bid";
    case Algorithm::Rand: return "rand";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "super-zero") return Algorithm::SuperZero;
  if (name == "super-mean") return Algorithm::SuperMean;
  if (name == "sim") return Algorithm::Sim;
  if (name == "bid") return Algorithm::Bid;
  if (name == "rand") return Algorithm::Rand;
  return std::nullopt;
}

ScenarioConfig ScenarioConfig::bid_mismatch(BidFn actual) {
  ScenarioConfig s;
  s.kind = Kind::BidModelMismatch;
  s.actual_bid = std::move(actual);
  return s;
}

ScenarioConfig ScenarioConfig::similarity_noise(double sigma) {
  ScenarioConfig s;
  s.kind = Kind::SimilarityNoise;
  s.sigma = sigma;
  return s;
}

ScenarioConfig ScenarioConfig::partial_arrival(double fraction) {
  ScenarioConfig s;
  s.kind = Kind::PartialArrival;
  s.fraction = fraction;
  return s;
}

ScenarioConfig ScenarioConfig::concurrent_poisson(double rate) {
  ScenarioConfig s;
  s.kind = Kind::ConcurrentPoisson;
  s.rate = rate;
  return s;
}

ScenarioConfig ScenarioConfig::search_subset(double fraction) {
  ScenarioConfig s;
  s.kind = Kind::SearchSubset;
  s.fraction = fraction;
  return s;
}

void ScenarioConfig::validate() const {
  switch (kind) {
    case Kind::SimilarityNoise:
      if (sigma < 0.0) throw InvalidScenarioError("sigma must be >= 0");
      break;
    case Kind::PartialArrival:
    case Kind::SearchSubset:
      if (!(fraction > 0.0 && fraction <= 1.0))
        throw InvalidScenarioError("fraction must lie in (0, 1]");
      break;
    case Kind::ConcurrentPoisson:
      if (!(rate > 0.0)) throw InvalidScenarioError("rate must be > 0");
      break;
    case Kind::Faithful:
    case Kind::BidModelMismatch:
      break;
  }
}

std::vector<std::uint8_t> sample_bids(const PaperOrdering& ordering,
                                      std::span<const double> row,
                                      const BidFn& bid, std::mt19937_64& rng) {
  const int d = static_cast<int>(row.size());
  std::vector<std::uint8_t> bits(d, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int j = 0; j < d; ++j) {
    const double p = bid_probability(bid, ordering.position(j), row[j]);
    bits[j] = u(rng) < p ? 1 : 0;
  }
  return bits;
}

namespace {

// Bid probability evaluated at a similarity that noise may have pushed out
// of [0, 1]; the probability itself is what gets clipped.
double noisy_bid_probability(const BidFn& fn, int position, double noisy_s) {
  switch (fn.kind) {
    case BidKind::LogPosition:
      return std::clamp(noisy_s / std::log2(position + 1.0), 0.0, 1.0);
    case BidKind::SqrtPosition:
      return std::clamp(noisy_s / std::sqrt(static_cast<double>(position)),
                        0.0, 1.0);
    case BidKind::ThresholdIndicator:
      return (position == 1 && noisy_s > fn.threshold_s / 2.0) ? 1.0 : 0.0;
    case BidKind::Tabulated:
      return std::clamp(
          bid_probability(fn, position, std::clamp(noisy_s, 0.0, 1.0)), 0.0,
          1.0);
  }
  return 0.0;
}

PaperOrdering embed_subset_order(const PaperOrdering& sub,
                                 const std::vector<int>& subset, int d) {
  std::vector<int> positions(d, 0);
  const int k = static_cast<int>(subset.size());
  for (int idx = 0; idx < k; ++idx)
    positions[subset[idx]] = sub.position(idx);
  int next = k + 1;
  for (int j = 0; j < d; ++j)
    if (positions[j] == 0) positions[j] = next++;
  return PaperOrdering(std::move(positions));
}

struct ReviewerDecision {
  PaperOrdering ordering;
  std::vector<std::uint8_t> active;  // papers eligible for bids and gain
};

class SimulationEngine {
 public:
  SimulationEngine(const SimilarityMatrix& matrix, Algorithm algo,
                   const ScenarioConfig& scenario, const ModelConfig& config,
                   const RunStreams& streams)
      : matrix_(matrix),
        algo_(algo),
        scenario_(scenario),
        streams_(streams),
        state_(matrix, with_heuristic(config, algo)) {}

  SimulationResult run(std::function<int(std::mt19937_64&)> batch_size) {
    const int n = matrix_.reviewers();
    const int d = matrix_.papers();
    int arrivals = n;
    if (scenario_.kind == ScenarioConfig::Kind::PartialArrival)
      arrivals = static_cast<int>(std::ceil(scenario_.fraction * n));

    SimulationResult result;
    result.final_bids = BidState(d);
    auto batch_rng = streams_.batches();

    double reviewer_gain_total = 0.0;
    int next = 0;
    while (next < arrivals) {
      int size = 1;
      if (scenario_.kind == ScenarioConfig::Kind::ConcurrentPoisson)
        size = batch_size(batch_rng);
      size = std::min(size, arrivals - next);
      if (size == 0) continue;

      // All orderings in the batch are computed from the pre-batch state.
      std::vector<ReviewerDecision> decisions;
      decisions.reserve(size);
      for (int b = 0; b < size; ++b)
        decisions.push_back(decide(next + b));

      for (int b = 0; b < size; ++b) {
        const int r = next + b;
        const auto& dec = decisions[b];
        const auto row = matrix_.row(r);
        for (int j = 0; j < d; ++j) {
          if (!dec.active[j]) continue;
          reviewer_gain_total += reviewer_gain(
              state_.config().reviewer_gain, dec.ordering.position(j), row[j]);
        }
        auto bits = sample(r, dec);
        result.history.push_back({dec.ordering, bits});
        state_.record_arrival(r, bits);
      }
      next += size;
    }

    result.final_bids = state_.bids();
    result.bid_histogram = histogram(result.final_bids);
    double paper_total = 0.0;
    for (int j = 0; j < d; ++j)
      paper_total +=
          paper_gain(state_.config().paper_gain, result.final_bids.count(j));
    result.paper_gain = paper_total;
    result.reviewer_gain = reviewer_gain_total;
    result.total_gain =
        paper_total + state_.config().lambda * reviewer_gain_total;
    return result;
  }

 private:
  static ModelConfig with_heuristic(ModelConfig config, Algorithm algo) {
    config.heuristic = algo == Algorithm::SuperMean ? HeuristicKind::Mean
                                                    : HeuristicKind::Zero;
    return config;
  }

  ReviewerDecision decide(int reviewer) {
    const int d = matrix_.papers();
    std::vector<int> subset(d);
    std::iota(subset.begin(), subset.end(), 0);
    if (scenario_.kind == ScenarioConfig::Kind::SearchSubset) {
      const int k = static_cast<int>(std::ceil(scenario_.fraction * d));
      auto rng = streams_.scenario(reviewer);
      std::shuffle(subset.begin(), subset.end(), rng);
      subset.resize(k);
      std::sort(subset.begin(), subset.end());
    }

    std::vector<std::uint8_t> active(d, 0);
    for (int j : subset) active[j] = 1;
    auto ordering = order_for(reviewer, subset);
    return {std::move(ordering), std::move(active)};
  }

  PaperOrdering order_for(int reviewer, const std::vector<int>& subset) {
    const int d = matrix_.papers();
    const int k = static_cast<int>(subset.size());
    const auto row = matrix_.row(reviewer);

    std::vector<double> sub_row(k);
    std::vector<int> sub_counts(k);
    for (int idx = 0; idx < k; ++idx) {
      sub_row[idx] = row[subset[idx]];
      sub_counts[idx] = state_.bids().count(subset[idx]);
    }
    const BidState sub_bids(sub_counts);
    auto ties = streams_.ties(reviewer);

    PaperOrdering sub = PaperOrdering::identity(std::max(k, 1));
    switch (algo_) {
      case Algorithm::SuperZero:
      case Algorithm::SuperMean: {
        HeuristicVector h = state_.config().heuristic == HeuristicKind::Mean
                                ? mean_heuristic(state_, reviewer)
                                : zero_heuristic(state_, reviewer);
        HeuristicVector sub_h(k);
        for (int idx = 0; idx < k; ++idx) sub_h[idx] = h[subset[idx]];
        sub = order_papers(sub_row, sub_bids, sub_h, state_.config());
        break;
      }
      case Algorithm::Sim:
        sub = sim_order(sub_row, sub_bids, ties);
        break;
      case Algorithm::Bid:
        sub = bid_order(sub_bids, sub_row, ties);
        break;
      case Algorithm::Rand:
        sub = rand_order(k, ties);
        break;
    }
    if (k == d) return sub;
    return embed_subset_order(sub, subset, d);
  }

  std::vector<std::uint8_t> sample(int reviewer, const ReviewerDecision& dec) {
    const int d = matrix_.papers();
    const auto row = matrix_.row(reviewer);
    auto rng = streams_.bids(reviewer);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    std::vector<double> prob(d, 0.0);
    switch (scenario_.kind) {
      case ScenarioConfig::Kind::BidModelMismatch:
        for (int j = 0; j < d; ++j)
          prob[j] = bid_probability(scenario_.actual_bid,
                                    dec.ordering.position(j), row[j]);
        break;
      case ScenarioConfig::Kind::SimilarityNoise: {
        auto noise_rng = streams_.scenario(reviewer);
        std::normal_distribution<double> gauss(0.0, scenario_.sigma);
        for (int j = 0; j < d; ++j) {
          const double noisy =
              scenario_.sigma > 0.0 ? row[j] + gauss(noise_rng) : row[j];
          prob[j] = noisy_bid_probability(state_.config().bid,
                                          dec.ordering.position(j), noisy);
        }
        break;
      }
      default:
        for (int j = 0; j < d; ++j)
          prob[j] = bid_probability(state_.config().bid,
                                    dec.ordering.position(j), row[j]);
        break;
    }

    std::vector<std::uint8_t> bits(d, 0);
    for (int j = 0; j < d; ++j) {
      const double roll = u(rng);  // one uniform per paper, always
      bits[j] = dec.active[j] && roll < prob[j] ? 1 : 0;
    }
    return bits;
  }

  const SimilarityMatrix& matrix_;
  Algorithm algo_;
  ScenarioConfig scenario_;
  RunStreams streams_;
  SuperState state_;
};

}  // namespace

SimulationResult run_simulation(const SimilarityMatrix& matrix, Algorithm algo,
                                const ModelConfig& config,
                                const RunStreams& streams) {
  return run_scenario(matrix, algo, ScenarioConfig::faithful(), config,
                      streams);
}

SimulationResult run_scenario(const SimilarityMatrix& matrix, Algorithm algo,
                              const ScenarioConfig& scenario,
                              const ModelConfig& config,
                              const RunStreams& streams) {
  const double rate = scenario.rate;
  return run_scenario(matrix, algo, scenario, config, streams,
                      [rate](std::mt19937_64& rng) {
                        std::poisson_distribution<int> poisson(rate);
                        return poisson(rng);
                      });
}

SimulationResult run_scenario(const SimilarityMatrix& matrix, Algorithm algo,
                              const ScenarioConfig& scenario,
                              const ModelConfig& config,
                              const RunStreams& streams,
                              std::function<int(std::mt19937_64&)> batch_sampler) {
  scenario.validate();
  config.validate();
  SimulationEngine engine(matrix, algo, scenario, config, streams);
  return engine.run(std::move(batch_sampler));
}

MatrixSource MatrixSource::fixed(SimilarityMatrix m) {
  auto shared = std::make_shared<SimilarityMatrix>(std::move(m));
  return {[shared](std::mt19937_64&) { return *shared; }, false};
}

MatrixSource MatrixSource::from_generator(
    std::function<SimilarityMatrix(std::mt19937_64&)> g) {
  return {std::move(g), true};
}

ExperimentReport run_experiment(const MatrixSource& source,
                                const std::vector<Algorithm>& algorithms,
                                const ScenarioConfig& scenario,
                                const ModelConfig& base_config,
                                const std::vector<double>& lambda_grid,
                                int n_runs, std::uint64_t base_seed) {
  if (n_runs < 1) throw Error("run_experiment requires at least one run");
  const size_t cells = algorithms.size() * lambda_grid.size();
  std::vector<std::vector<RunRecord>> by_cell(cells);

  for (int run = 0; run < n_runs; ++run) {
    RunStreams streams{base_seed, static_cast<std::uint64_t>(run)};
    auto matrix_rng = streams.matrix_draw();
    SimilarityMatrix drawn = source.draw(matrix_rng);

    auto arrival_rng = streams.arrival();
    std::vector<int> row_order(drawn.reviewers());
    std::iota(row_order.begin(), row_order.end(), 0);
    std::shuffle(row_order.begin(), row_order.end(), arrival_rng);
    const SimilarityMatrix shuffled = drawn.permuted_rows(row_order);

    for (size_t li = 0; li < lambda_grid.size(); ++li) {
      ModelConfig config = base_config;
      config.lambda = lambda_grid[li];
      for (size_t ai = 0; ai < algorithms.size(); ++ai) {
        const auto result =
            run_scenario(shuffled, algorithms[ai], scenario, config, streams);
        by_cell[ai * lambda_grid.size() + li].push_back(
            {algorithms[ai], config.lambda, run, result.total_gain,
             result.paper_gain, result.reviewer_gain, result.bid_histogram});
      }
    }
  }

  ExperimentReport report;
  for (size_t ai = 0; ai < algorithms.size(); ++ai) {
    for (size_t li = 0; li < lambda_grid.size(); ++li) {
      const auto& cell = by_cell[ai * lambda_grid.size() + li];
      double sum = 0.0, sum_paper = 0.0, sum_reviewer = 0.0;
      std::array<double, 4> hist_sum{0, 0, 0, 0};
      for (const auto& rec : cell) {
        sum += rec.total_gain;
        sum_paper += rec.paper_gain;
        sum_reviewer += rec.reviewer_gain;
        for (int b = 0; b < 4; ++b)
          hist_sum[b] += static_cast<double>(rec.bid_histogram[b]);
        report.runs.push_back(rec);
      }
      const double k = static_cast<double>(cell.size());
      const double mean = sum / k;
      double sem = 0.0;
      if (cell.size() >= 2) {
        double ss = 0.0;
        for (const auto& rec : cell)
          ss += (rec.total_gain - mean) * (rec.total_gain - mean);
        sem = std::sqrt(ss / (k - 1.0)) / std::sqrt(k);
      }
      AggregateRecord agg;
      agg.algorithm = algorithms[ai];
      agg.lambda = lambda_grid[li];
      agg.runs = static_cast<int>(cell.size());
      agg.mean_total_gain = mean;
      agg.sem_total_gain = sem;
      agg.mean_paper_gain = sum_paper / k;
      agg.mean_reviewer_gain = sum_reviewer / k;
      for (int b = 0; b < 4; ++b) agg.mean_histogram[b] = hist_sum[b] / k;
      report.aggregates.push_back(agg);
    }
  }
  return report;
}

void write_runs_csv(const ExperimentReport& report, std::ostream& out) {
  out << "algorithm,lambda,run,total_gain,paper_gain,reviewer_gain,"
         "hist_0_2,hist_3_5,hist_6_8,hist_9_plus\n";
  char buf[256];
  for (const auto& rec : report.runs) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%d,%.17g,%.17g,%.17g",
                  algorithm_name(rec.algorithm).c_str(), rec.lambda, rec.run,
                  rec.total_gain, rec.paper_gain, rec.reviewer_gain);
    out << buf;
    for (int b = 0; b < 4; ++b) out << ',' << rec.bid_histogram[b];
    out << '\n';
  }
}

void write_aggregate_json(const ExperimentReport& report, std::ostream& out) {
  nlohmann::json doc;
  doc["aggregates"] = nlohmann::json::array();
  for (const auto& agg : report.aggregates) {
    nlohmann::json item;
    item["algorithm"] = algorithm_name(agg.algorithm);
    item["lambda"] = agg.lambda;
    item["runs"] = agg.runs;
    item["mean_total_gain"] = agg.mean_total_gain;
    item["sem_total_gain"] = agg.sem_total_gain;
    item["mean_paper_gain"] = agg.mean_paper_gain;
    item["mean_reviewer_gain"] = agg.mean_reviewer_gain;
    item["mean_histogram"] = agg.mean_histogram;
    doc["aggregates"].push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace superbid
