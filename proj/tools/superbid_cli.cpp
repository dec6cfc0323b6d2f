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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "superbid/baselines.hpp"
#include "superbid/csv.hpp"
#include "superbid/generators.hpp"
#include "superbid/oracle.hpp"
#include "superbid/rng.hpp"
#include "superbid/simulator.hpp"
#include "superbid/superstar.hpp"
#include "superbid/verify.hpp"

namespace {

using namespace superbid;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct ModelFlags {
  std::string paper_gain = "capped";
  int cap = 6;
  double slope = 1.0;
  std::string reviewer_gain = "dcg-log";
  std::string bid_model = "log";
  double threshold_s = 0.7;
  double lambda = 0.8;

  void attach(CLI::App* app) {
    app->add_option("--paper-gain", paper_gain, "sqrt|capped|linear")
        ->check(CLI::IsMember({"sqrt", "capped", "linear"}));
    app->add_option("--cap", cap, "cap for the capped paper gain");
    app->add_option("--slope", slope, "slope for the linear paper gain");
    app->add_option("--reviewer-gain", reviewer_gain,
                    "dcg-log|dcg-sqrt|threshold")
        ->check(CLI::IsMember({"dcg-log", "dcg-sqrt", "threshold"}));
    app->add_option("--bid-model", bid_model, "log|sqrt|threshold")
        ->check(CLI::IsMember({"log", "sqrt", "threshold"}));
    app->add_option("--threshold-s", threshold_s,
                    "block similarity for the threshold models");
    app->add_option("--lambda", lambda, "trade-off weight");
  }

  ModelConfig build() const {
    ModelConfig cfg;
    if (paper_gain == "sqrt") cfg.paper_gain = PaperGainFn::sqrt_gain();
    if (paper_gain == "capped") cfg.paper_gain = PaperGainFn::capped(cap);
    if (paper_gain == "linear") cfg.paper_gain = PaperGainFn::linear(slope);
    if (reviewer_gain == "dcg-log") cfg.reviewer_gain = ReviewerGainFn::dcg_log();
    if (reviewer_gain == "dcg-sqrt")
      cfg.reviewer_gain = ReviewerGainFn::dcg_sqrt_pos();
    if (reviewer_gain == "threshold")
      cfg.reviewer_gain = ReviewerGainFn::threshold(threshold_s);
    if (bid_model == "log") cfg.bid = BidFn::log_position();
    if (bid_model == "sqrt") cfg.bid = BidFn::sqrt_position();
    if (bid_model == "threshold") cfg.bid = BidFn::threshold(threshold_s);
    cfg.lambda = lambda;
    cfg.validate();
    return cfg;
  }
};

BidFn bid_fn_from_name(const std::string& name, double threshold_s) {
  if (name == "log") return BidFn::log_position();
  if (name == "sqrt") return BidFn::sqrt_position();
  if (name == "threshold") return BidFn::threshold(threshold_s);
  throw Error("unknown bid model: " + name);
}

std::string label_path_for(const std::string& matrix_path) {
  std::filesystem::path p(matrix_path);
  p.replace_extension("");
  return p.string() + ".labels.csv";
}

std::string bids_path_for(const std::string& matrix_path) {
  std::filesystem::path p(matrix_path);
  p.replace_extension("");
  return p.string() + ".bids.csv";
}

int cmd_generate(const std::string& kind, int n, int d, double alpha,
                 double beta, int m, int q, double s, double xi,
                 double additive_noise, double lambda, std::uint64_t seed,
                 const std::string& out) {
  auto rng = named_stream(seed, "generate");
  if (kind == "homogeneous") {
    const auto matrix = gen_homogeneous(n, d, alpha, beta, rng);
    write_similarity_csv_file(matrix, out);
    std::printf("%d x %d -> %s\n", matrix.reviewers(), matrix.papers(),
                out.c_str());
    return kExitOk;
  }
  if (kind == "lowrank") {
    const auto matrix = gen_lowrank(n, d, rng);
    write_similarity_csv_file(matrix, out);
    std::printf("%d x %d -> %s\n", matrix.reviewers(), matrix.papers(),
                out.c_str());
    return kExitOk;
  }
  if (kind == "community") {
    const CommunityInstance inst =
        additive_noise > 0.0
            ? gen_community_synthetic(m, q, s, additive_noise, rng)
            : gen_community(CommunityConfig{m, q, s, xi}, rng);
    write_similarity_csv_file(inst.matrix, out);
    write_labels_csv_file(inst.paper_block, label_path_for(out));
    std::printf("%d x %d -> %s (labels: %s)\n", inst.matrix.reviewers(),
                inst.matrix.papers(), out.c_str(), label_path_for(out).c_str());
    return kExitOk;
  }
  if (kind == "interdisciplinary") {
    const auto inst = gen_interdisciplinary(n, d);
    write_similarity_csv_file(inst.matrix, out);
    write_labels_csv_file(inst.paper_group, label_path_for(out));
    std::printf("%d x %d -> %s (labels: %s)\n", inst.matrix.reviewers(),
                inst.matrix.papers(), out.c_str(), label_path_for(out).c_str());
    return kExitOk;
  }
  if (kind == "worstcase-sim" || kind == "worstcase-bid") {
    const WorstCaseInstance inst = kind == "worstcase-sim"
                                       ? gen_worstcase_sim({d, lambda})
                                       : gen_worstcase_bid(d);
    const SimilarityMatrix matrix(1, d, inst.row);
    write_similarity_csv_file(matrix, out);
    write_bids_csv_file(inst.bids, bids_path_for(out));
    std::printf("1 x %d -> %s (bids: %s)\n", d, out.c_str(),
                bids_path_for(out).c_str());
    return kExitOk;
  }
  std::fprintf(stderr, "unknown generator kind: %s\n", kind.c_str());
  return kExitUsage;
}

int cmd_order(const std::string& matrix_path, int reviewer_1based,
              const std::string& bids_path, const std::string& algorithm,
              const ModelFlags& flags, const std::string& path_name,
              std::optional<std::uint64_t> seed, bool print_gain) {
  const auto matrix = load_similarity_csv(matrix_path);
  const int d = matrix.papers();
  const int reviewer = reviewer_1based - 1;
  if (reviewer < 0 || reviewer >= matrix.reviewers()) {
    std::fprintf(stderr, "reviewer index out of range\n");
    return kExitUsage;
  }
  BidState bids = bids_path.empty() ? BidState(d)
                                    : read_bids_csv_file(bids_path);
  if (bids.papers() != d) {
    std::fprintf(stderr, "bid vector length %d does not match d=%d\n",
                 bids.papers(), d);
    return kExitUsage;
  }
  ModelConfig cfg = flags.build();

  OrderPath path = OrderPath::Auto;
  if (path_name == "general") path = OrderPath::General;
  if (path_name == "efficient") path = OrderPath::Efficient;

  std::optional<PaperOrdering> ordering;
  if (algorithm == "super-zero" || algorithm == "super-mean") {
    cfg.heuristic = algorithm == "super-mean" ? HeuristicKind::Mean
                                              : HeuristicKind::Zero;
    SuperState state(matrix, cfg);
    std::vector<std::uint8_t> none(d, 0);
    for (int r = 0; r < reviewer; ++r) state.record_arrival(r, none);
    const HeuristicVector h = cfg.heuristic == HeuristicKind::Mean
                                  ? mean_heuristic(state, reviewer)
                                  : zero_heuristic(state, reviewer);
    ordering = order_papers(matrix.row(reviewer), bids, h, cfg, path);
  } else {
    if (!seed) {
      std::fprintf(stderr, "--seed is required for randomized algorithms\n");
      return kExitUsage;
    }
    auto rng = named_stream(*seed, "order");
    if (algorithm == "sim")
      ordering = sim_order(matrix.row(reviewer), bids, rng);
    else if (algorithm == "bid")
      ordering = bid_order(bids, matrix.row(reviewer), rng);
    else if (algorithm == "rand")
      ordering = rand_order(d, rng);
    else {
      std::fprintf(stderr, "unknown algorithm: %s\n", algorithm.c_str());
      return kExitUsage;
    }
  }

  std::string line;
  for (int j = 0; j < d; ++j) {
    if (j) line += ',';
    line += std::to_string(ordering->position(j));
  }
  std::printf("%s\n", line.c_str());
  if (print_gain) {
    const double gain =
        expected_immediate_gain(*ordering, matrix.row(reviewer), bids, cfg);
    std::printf("expected_immediate_gain=%.12g\n", gain);
  }
  return kExitOk;
}

int cmd_experiment(const std::string& matrix_path, const std::string& generator,
                   int n, int d, double alpha, double beta, int m, int q,
                   double s, double xi, double additive_noise,
                   const std::vector<std::string>& algorithm_names,
                   const std::string& scenario_name,
                   const std::string& actual_bid_model, double sigma,
                   double fraction, double rate,
                   const std::vector<double>& lambdas, int runs,
                   std::uint64_t seed, const std::string& out_dir,
                   const ModelFlags& flags, const std::string& format) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : algorithm_names) {
    const auto a = algorithm_from_name(name);
    if (!a) {
      std::fprintf(stderr, "unknown algorithm: %s\n", name.c_str());
      return kExitUsage;
    }
    algorithms.push_back(*a);
  }
  if (algorithms.empty()) {
    std::fprintf(stderr, "no algorithms selected\n");
    return kExitUsage;
  }

  MatrixSource source = MatrixSource::fixed(SimilarityMatrix(1, 1, {0.0}));
  if (!matrix_path.empty()) {
    source = MatrixSource::fixed(load_similarity_csv(matrix_path));
  } else if (generator == "homogeneous") {
    source = MatrixSource::from_generator([=](std::mt19937_64& rng) {
      return gen_homogeneous(n, d, alpha, beta, rng);
    });
  } else if (generator == "lowrank") {
    source = MatrixSource::from_generator(
        [=](std::mt19937_64& rng) { return gen_lowrank(n, d, rng); });
  } else if (generator == "community") {
    source = MatrixSource::from_generator([=](std::mt19937_64& rng) {
      if (additive_noise > 0.0)
        return gen_community_synthetic(m, q, s, additive_noise, rng).matrix;
      return gen_community(CommunityConfig{m, q, s, xi}, rng).matrix;
    });
  } else if (generator == "interdisciplinary") {
    source = MatrixSource::fixed(gen_interdisciplinary(n, d).matrix);
  } else {
    std::fprintf(stderr, "need --matrix or a known --generator\n");
    return kExitUsage;
  }

  ScenarioConfig scenario;
  if (scenario_name == "faithful") {
    scenario = ScenarioConfig::faithful();
  } else if (scenario_name == "bid-mismatch") {
    scenario = ScenarioConfig::bid_mismatch(
        bid_fn_from_name(actual_bid_model, flags.threshold_s));
  } else if (scenario_name == "similarity-noise") {
    scenario = ScenarioConfig::similarity_noise(sigma);
  } else if (scenario_name == "partial-arrival") {
    scenario = ScenarioConfig::partial_arrival(fraction);
  } else if (scenario_name == "concurrent-poisson") {
    scenario = ScenarioConfig::concurrent_poisson(rate);
  } else if (scenario_name == "search-subset") {
    scenario = ScenarioConfig::search_subset(fraction);
  } else {
    std::fprintf(stderr, "unknown scenario: %s\n", scenario_name.c_str());
    return kExitUsage;
  }

  const auto report = run_experiment(source, algorithms, scenario,
                                     flags.build(), lambdas, runs, seed);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream csv(out_dir + "/runs.csv");
    if (!csv) throw IoError("cannot write " + out_dir + "/runs.csv");
    write_runs_csv(report, csv);
  }
  {
    std::ofstream json(out_dir + "/aggregate.json");
    if (!json) throw IoError("cannot write " + out_dir + "/aggregate.json");
    write_aggregate_json(report, json);
  }

  if (format == "json") {
    write_aggregate_json(report, std::cout);
  } else {
    std::printf("algorithm,lambda,mean_total_gain,sem_total_gain\n");
    for (const auto& agg : report.aggregates)
      std::printf("%s,%.6g,%.6f,%.6f\n", algorithm_name(agg.algorithm).c_str(),
                  agg.lambda, agg.mean_total_gain, agg.sem_total_gain);
  }
  std::fprintf(stderr, "wrote %s/runs.csv and %s/aggregate.json\n",
               out_dir.c_str(), out_dir.c_str());
  return kExitOk;
}

int cmd_verify(const std::string& suite, int cases, int dmax, int realizations,
               int runs, std::uint64_t seed) {
  std::vector<verify::CheckResult> results;
  if (suite == "local-opt") {
    results.push_back(verify::check_local_optimality(cases, seed));
  } else if (suite == "path-equiv") {
    results.push_back(verify::check_path_equivalence(cases, seed));
    results.push_back(verify::check_path_benchmark());
  } else if (suite == "worstcase-gaps") {
    results.push_back(verify::check_worstcase_gaps(dmax));
  } else if (suite == "community") {
    results.push_back(verify::check_community_exact(seed));
    results.push_back(verify::check_noisy_community(realizations, seed));
  } else if (suite == "linear-gain") {
    results.push_back(verify::check_linear_gain(cases, seed));
  } else if (suite == "all") {
    results = verify::run_all(seed);
    (void)runs;
  } else {
    std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
    return kExitUsage;
  }

  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%-28s %s  %s  (%.1fs)\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::vector<int>& d_list, int general_max,
              std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  auto rng = named_stream(seed, "bench");
  ModelFlags flags;
  const ModelConfig cfg = flags.build();
  std::uniform_real_distribution<double> sim(0.0, 1.0);
  std::uniform_int_distribution<int> bid(0, 5);

  std::printf("%8s %18s %18s\n", "d", "general (ms)", "efficient (ms)");
  std::vector<std::pair<int, double>> efficient_times;
  for (int d : d_list) {
    std::vector<double> row(d);
    std::vector<int> counts(d);
    for (auto& v : row) v = sim(rng);
    for (auto& c : counts) c = bid(rng);
    const BidState bids(counts);
    const HeuristicVector h(d, 0.0);

    auto time_once = [&](OrderPath path) {
      double best = 1e300;
      for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        auto ordering = order_papers(row, bids, h, cfg, path);
        const double t = std::chrono::duration<double>(Clock::now() - t0).count();
        best = std::min(best, t);
        if (ordering.size() != d) return -1.0;
      }
      return best;
    };

    const double te = time_once(OrderPath::Efficient);
    efficient_times.emplace_back(d, te);
    if (d <= general_max) {
      const double tg = time_once(OrderPath::General);
      std::printf("%8d %18.3f %18.3f\n", d, tg * 1e3, te * 1e3);
    } else {
      std::printf("%8d %18s %18.3f\n", d, "(skipped)", te * 1e3);
    }
  }

  if (efficient_times.size() >= 2) {
    const auto [d0, t0] = efficient_times.front();
    const auto [d1, t1] = efficient_times.back();
    if (d1 > d0 && t0 > 0.0 && t1 > 0.0) {
      const double slope = std::log(t1 / t0) / std::log(double(d1) / d0);
      const bool subquadratic = slope < 2.0;
      std::printf("efficient-path growth exponent %.2f -> %s\n", slope,
                  subquadratic ? "subquadratic" : "NOT subquadratic");
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paper-ordering policies for peer-review bidding"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a similarity matrix CSV");
  std::string gen_kind, gen_out = "matrix.csv";
  int gen_n = 100, gen_d = 100, gen_m = 2, gen_q = 2;
  double gen_alpha = 1.0, gen_beta = 15.0, gen_s = 0.7, gen_xi = 0.0;
  double gen_additive = 0.0, gen_lambda = 0.0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind,
                  "homogeneous|lowrank|community|interdisciplinary|"
                  "worstcase-sim|worstcase-bid")
      ->required();
  gen->add_option("--n", gen_n, "reviewers");
  gen->add_option("--d", gen_d, "papers");
  gen->add_option("--alpha", gen_alpha, "Beta alpha");
  gen->add_option("--beta", gen_beta, "Beta beta");
  gen->add_option("--m", gen_m, "community blocks");
  gen->add_option("--q", gen_q, "community block size");
  gen->add_option("--s", gen_s, "block similarity");
  gen->add_option("--xi", gen_xi, "community noise bound");
  gen->add_option("--additive-noise", gen_additive,
                  "additive U[0,x) noise variant for community");
  gen->add_option("--lambda", gen_lambda, "lambda for worstcase-sim");
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "output CSV path");

  // order
  auto* order = app.add_subcommand("order", "one-shot paper ordering");
  std::string ord_matrix, ord_bids, ord_algo = "super-zero", ord_path = "auto";
  int ord_reviewer = 1;
  bool ord_print_gain = false;
  std::optional<std::uint64_t> ord_seed;
  ModelFlags ord_flags;
  order->add_option("--matrix", ord_matrix, "similarity CSV")->required();
  order->add_option("--reviewer", ord_reviewer, "1-based row index");
  order->add_option("--bids", ord_bids, "bid-count CSV (defaults to zeros)");
  order->add_option("--algorithm", ord_algo,
                    "super-zero|super-mean|sim|bid|rand");
  order->add_option("--path", ord_path, "auto|general|efficient")
      ->check(CLI::IsMember({"auto", "general", "efficient"}));
  order->add_flag("--print-gain", ord_print_gain,
                  "also print the exact expected immediate gain");
  order->add_option("--seed", ord_seed, "seed for randomized algorithms");
  ord_flags.attach(order);

  // experiment
  auto* exp = app.add_subcommand("experiment", "repeated-run simulation");
  std::string exp_matrix, exp_generator, exp_scenario = "faithful";
  std::string exp_actual_bid = "sqrt", exp_out = "experiment-out";
  std::string exp_format = "csv";
  std::vector<std::string> exp_algos = {"super-zero", "super-mean", "sim",
                                        "bid", "rand"};
  std::vector<double> exp_lambdas = {0.8};
  int exp_n = 250, exp_d = 250, exp_m = 10, exp_q = 25, exp_runs = 20;
  double exp_alpha = 1.0, exp_beta = 15.0, exp_s = 0.7, exp_xi = 0.0;
  double exp_additive = 0.0, exp_sigma = 0.01, exp_fraction = 0.75,
         exp_rate = 1.0;
  std::uint64_t exp_seed = 0;
  ModelFlags exp_flags;
  exp->add_option("--matrix", exp_matrix, "similarity CSV (fixed source)");
  exp->add_option("--generator", exp_generator,
                  "homogeneous|lowrank|community|interdisciplinary");
  exp->add_option("--n", exp_n, "reviewers");
  exp->add_option("--d", exp_d, "papers");
  exp->add_option("--alpha", exp_alpha, "Beta alpha");
  exp->add_option("--beta", exp_beta, "Beta beta");
  exp->add_option("--m", exp_m, "community blocks");
  exp->add_option("--q", exp_q, "community block size");
  exp->add_option("--s", exp_s, "block similarity");
  exp->add_option("--xi", exp_xi, "community noise bound");
  exp->add_option("--additive-noise", exp_additive,
                  "additive community noise");
  exp->add_option("--algorithms", exp_algos, "algorithms to compare")
      ->delimiter(',');
  exp->add_option("--scenario", exp_scenario,
                  "faithful|bid-mismatch|similarity-noise|partial-arrival|"
                  "concurrent-poisson|search-subset");
  exp->add_option("--actual-bid-model", exp_actual_bid,
                  "true bid model for bid-mismatch");
  exp->add_option("--sigma", exp_sigma, "similarity-noise sigma");
  exp->add_option("--fraction", exp_fraction,
                  "fraction for partial-arrival/search-subset");
  exp->add_option("--rate", exp_rate, "Poisson batch rate");
  exp->add_option("--lambdas", exp_lambdas, "lambda grid")->delimiter(',');
  exp->add_option("--runs", exp_runs, "repetitions")->check(CLI::PositiveNumber);
  exp->add_option("--seed", exp_seed, "base seed")->required();
  exp->add_option("--out", exp_out, "output directory");
  exp->add_option("--format", exp_format, "stdout summary format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  exp_flags.attach(exp);

  // verify
  auto* ver = app.add_subcommand("verify", "numeric verification suites");
  std::string ver_suite = "all";
  int ver_cases = 200, ver_dmax = 64, ver_realizations = 1000, ver_runs = 20;
  std::uint64_t ver_seed = 1;
  ver->add_option("--suite", ver_suite,
                  "local-opt|path-equiv|worstcase-gaps|community|linear-gain|"
                  "all");
  ver->add_option("--cases", ver_cases, "random instances");
  ver->add_option("--dmax", ver_dmax, "largest d for worstcase-gaps");
  ver->add_option("--realizations", ver_realizations,
                  "noise draws for the community suite");
  ver->add_option("--runs", ver_runs, "runs for statistical suites");
  ver->add_option("--seed", ver_seed, "RNG seed");

  // bench
  auto* bench = app.add_subcommand("bench", "ordering-path timings");
  std::vector<int> bench_d = {100, 500, 1000, 5000, 10000};
  int bench_general_max = 1000;
  std::uint64_t bench_seed = 1;
  bench->add_option("--d-list", bench_d, "paper counts")->delimiter(',');
  bench->add_option("--general-max", bench_general_max,
                    "largest d to run through the assignment path");
  bench->add_option("--seed", bench_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_kind, gen_n, gen_d, gen_alpha, gen_beta, gen_m,
                          gen_q, gen_s, gen_xi, gen_additive, gen_lambda,
                          gen_seed, gen_out);
    if (order->parsed())
      return cmd_order(ord_matrix, ord_reviewer, ord_bids, ord_algo, ord_flags,
                       ord_path, ord_seed, ord_print_gain);
    if (exp->parsed())
      return cmd_experiment(exp_matrix, exp_generator, exp_n, exp_d, exp_alpha,
                            exp_beta, exp_m, exp_q, exp_s, exp_xi,
                            exp_additive, exp_algos, exp_scenario,
                            exp_actual_bid, exp_sigma, exp_fraction, exp_rate,
                            exp_lambdas, exp_runs, exp_seed, exp_out,
                            exp_flags, exp_format);
    if (ver->parsed())
      return cmd_verify(ver_suite, ver_cases, ver_dmax, ver_realizations,
                        ver_runs, ver_seed);
    if (bench->parsed())
      return cmd_bench(bench_d, bench_general_max, bench_seed);
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
