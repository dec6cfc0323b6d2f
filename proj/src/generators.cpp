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
#include "superbid/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "superbid/csv.hpp"

namespace superbid {

namespace {

double beta_draw(double alpha, double beta, std::mt19937_64& rng) {
  std::gamma_distribution<double> ga(alpha, 1.0), gb(beta, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  const double v = x / (x + y);
  // Guard the closed interval; gamma draws of exactly zero are possible at
  // the resolution of the generator.
  return std::clamp(v, 0.0, 1.0);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Uniform on the open interval (0, hi); rejects endpoint draws.
double open_uniform(double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, hi);
  double v = u(rng);
  while (v == 0.0) v = u(rng);
  return v;
}

}  // namespace

void CommunityConfig::validate() const {
  if (m < 2 || q < 2) throw Error("community model requires m >= 2 and q >= 2");
  if (s < 0.01 || s > 1.0)
    throw Error("block similarity must lie in [0.01, 1]");
  if (xi < 0.0) throw Error("noise bound must be nonnegative");
}

double WorstCaseConfig::epsilon() const {
  return (1.0 + lambda) * std::exp(std::exp(std::exp(1.0)));
}

SimilarityMatrix gen_homogeneous(int n, int d, double alpha, double beta,
                                 std::mt19937_64& rng) {
  if (alpha <= 0.0 || beta <= 0.0)
    throw Error("Beta parameters must be positive");
  std::vector<double> scores(static_cast<size_t>(n) * d);
  for (auto& v : scores) v = beta_draw(alpha, beta, rng);
  return SimilarityMatrix(n, d, std::move(scores));
}

SimilarityMatrix gen_lowrank(int n, int d, std::mt19937_64& rng) {
  constexpr int kBlocks = 10;
  if (n % kBlocks != 0)
    throw DivisibilityError("low-rank generator requires n divisible by 10");
  std::vector<double> scores(static_cast<size_t>(n) * d);
  const int rows_per_block = n / kBlocks;
  for (int block = 0; block < kBlocks; ++block) {
    std::vector<double> v(d);
    for (int j = 0; j < d; ++j) v[j] = beta_draw(block + 1.0, 60.0, rng);
    for (int r = 0; r < rows_per_block; ++r) {
      const int i = block * rows_per_block + r;
      std::copy(v.begin(), v.end(),
                scores.begin() + static_cast<size_t>(i) * d);
    }
  }
  return SimilarityMatrix(n, d, std::move(scores));
}

CommunityInstance gen_community(const CommunityConfig& cfg,
                                std::mt19937_64& rng) {
  cfg.validate();
  const int size = cfg.size();
  const auto row_perm = random_permutation(size, rng);
  const auto col_perm = random_permutation(size, rng);

  std::vector<double> scores(static_cast<size_t>(size) * size, 0.0);
  std::vector<int> reviewer_block(size), paper_block(size);
  for (int i = 0; i < size; ++i) reviewer_block[i] = row_perm[i] / cfg.q;
  for (int j = 0; j < size; ++j) paper_block[j] = col_perm[j] / cfg.q;

  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const bool on_block = reviewer_block[i] == paper_block[j];
      double v = on_block ? cfg.s : 0.0;
      if (cfg.xi > 0.0) {
        const double nu = open_uniform(cfg.xi, rng);
        v = on_block ? cfg.s - nu : nu;
      }
      scores[static_cast<size_t>(i) * size + j] = v;
    }
  }
  return {SimilarityMatrix(size, size, std::move(scores)),
          std::move(reviewer_block), std::move(paper_block)};
}

CommunityInstance gen_community_synthetic(int m, int q, double s,
                                          double noise_hi,
                                          std::mt19937_64& rng) {
  CommunityConfig cfg{m, q, s, 0.0};
  cfg.validate();
  if (noise_hi < 0.0 || s + noise_hi > 1.0)
    throw Error("additive noise must keep scores within [0, 1]");
  const int size = cfg.size();
  std::vector<double> scores(static_cast<size_t>(size) * size);
  std::vector<int> reviewer_block(size), paper_block(size);
  std::uniform_real_distribution<double> u(0.0, noise_hi);
  for (int i = 0; i < size; ++i) reviewer_block[i] = i / q;
  for (int j = 0; j < size; ++j) paper_block[j] = j / q;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const double base = reviewer_block[i] == paper_block[j] ? s : 0.0;
      scores[static_cast<size_t>(i) * size + j] =
          base + (noise_hi > 0.0 ? u(rng) : 0.0);
    }
  }
  return {SimilarityMatrix(size, size, std::move(scores)),
          std::move(reviewer_block), std::move(paper_block)};
}

GroupedInstance gen_interdisciplinary(int n, int d) {
  if (n % 2 != 0)
    throw DivisibilityError("interdisciplinary generator requires n even");
  if (d % 5 != 0)
    throw DivisibilityError(
        "interdisciplinary generator requires d divisible by 5 for the "
        "40/40/20 paper split");
  const int g1 = d * 2 / 5;
  const int g2 = d * 2 / 5;
  std::vector<int> paper_group(d);
  for (int j = 0; j < d; ++j) paper_group[j] = j < g1 ? 0 : (j < g1 + g2 ? 1 : 2);

  // Reviewer group r against paper group g.
  const double score[2][3] = {{0.17, 0.005, 0.085}, {0.005, 0.17, 0.085}};
  std::vector<double> scores(static_cast<size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    const int rg = i < n / 2 ? 0 : 1;
    for (int j = 0; j < d; ++j)
      scores[static_cast<size_t>(i) * d + j] = score[rg][paper_group[j]];
  }
  return {SimilarityMatrix(n, d, std::move(scores)), std::move(paper_group)};
}

WorstCaseInstance gen_worstcase_sim(const WorstCaseConfig& cfg) {
  if (cfg.d < 2) throw Error("worst-case instances require d >= 2");
  const int d = cfg.d;
  const int core = d % 2 == 0 ? d : d - 1;
  const double eps = cfg.epsilon();
  std::vector<double> row(d, 0.0);
  std::vector<int> bids(d, 0);
  for (int j = 0; j < core; ++j) {
    row[j] = 1.0 - 1.0 / ((j + 1) * eps);
    bids[j] = j < core / 2 ? 0 : 1;
  }
  if (core < d) {
    row[d - 1] = 0.0;
    bids[d - 1] = 1;
  }
  return {std::move(row), BidState(std::move(bids))};
}

WorstCaseInstance gen_worstcase_bid(int d) {
  if (d < 2) throw Error("worst-case instances require d >= 2");
  const int core = d % 2 == 0 ? d : d - 1;
  std::vector<double> row(d, 0.0);
  std::vector<int> bids(d, 0);
  for (int j = 0; j < core; ++j) {
    row[j] = j < core / 2 ? 1.0 : 0.0;
    bids[j] = j < core / 2 ? 1 : 0;
  }
  if (core < d) {
    row[d - 1] = 0.0;
    bids[d - 1] = 1;
  }
  return {std::move(row), BidState(std::move(bids))};
}

SimilarityMatrix load_similarity_csv(const std::string& path) {
  return read_similarity_csv_file(path);
}

}  // namespace superbid
