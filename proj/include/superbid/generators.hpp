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
#ifndef SUPERBID_GENERATORS_HPP_
#define SUPERBID_GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "superbid/types.hpp"

namespace superbid {

/// Block-structured similarity class: m blocks of q reviewers and q papers,
/// on-block similarity s, off-block 0. xi > 0 perturbs entries by U(0, xi)
/// noise (subtracted on-block, added off-block).
struct CommunityConfig {
  int m = 2;          // blocks, >= 2
  int q = 2;          // block size, >= 2
  double s = 0.7;     // block similarity in [0.01, 1]
  double xi = 0.0;    // noise bound, 0 = noiseless

  int size() const { return m * q; }  // n = d = m*q
  void validate() const;
};

/// Single-reviewer adversarial instance parameters. epsilon is derived:
/// (1 + lambda) * e^(e^e).
struct WorstCaseConfig {
  int d = 2;
  double lambda = 0.0;

  double epsilon() const;
};

struct CommunityInstance {
  SimilarityMatrix matrix;
  std::vector<int> reviewer_block;  // length n, 0-based block labels
  std::vector<int> paper_block;     // length d
};

struct GroupedInstance {
  SimilarityMatrix matrix;
  std::vector<int> paper_group;  // length d, 0-based group labels
};

/// One similarity row plus the prior bid counts for a single-reviewer
/// worst-case instance.
struct WorstCaseInstance {
  std::vector<double> row;
  BidState bids;
};

/// I.i.d. Beta(alpha, beta) entries.
SimilarityMatrix gen_homogeneous(int n, int d, double alpha, double beta,
                                 std::mt19937_64& rng);

/// Ten reviewer blocks of identical rows; block l draws its paper scores
/// from Beta(l, 60). Requires n divisible by 10.
SimilarityMatrix gen_lowrank(int n, int d, std::mt19937_64& rng);

/// Community matrix with uniformly random row and column permutations,
/// together with the ground-truth block labels.
CommunityInstance gen_community(const CommunityConfig& cfg,
                                std::mt19937_64& rng);

/// Block-diagonal variant with additive U[0, noise_hi) noise on every entry
/// (on-block included) and no permutation scrambling.
CommunityInstance gen_community_synthetic(int m, int q, double s,
                                          double noise_hi,
                                          std::mt19937_64& rng);

/// Two equal reviewer groups crossed with three paper groups (40/40/20
/// split) at constant scores 0.17 / 0.005 / 0.085. Requires n even and d
/// divisible by 5.
GroupedInstance gen_interdisciplinary(int n, int d);

/// Final-reviewer instance on which the similarity-greedy baseline pays an
/// ordering penalty: scores 1 - 1/(j * epsilon), bids 0 on the first half
/// and 1 on the second. Odd d appends a zero-similarity one-bid paper.
WorstCaseInstance gen_worstcase_sim(const WorstCaseConfig& cfg);

/// Final-reviewer instance punishing bid-count-greedy and random orderings:
/// first half similarity 1 with one bid, second half similarity 0 with none.
/// Odd d appends a zero-similarity one-bid paper.
WorstCaseInstance gen_worstcase_bid(int d);

/// Reads and validates a similarity CSV file. Throws ParseError,
/// RaggedRowsError, OutOfRangeError, or EmptyMatrixError.
SimilarityMatrix load_similarity_csv(const std::string& path);

}  // namespace superbid

#endif  // SUPERBID_GENERATORS_HPP_
