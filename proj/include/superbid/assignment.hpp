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
#ifndef SUPERBID_ASSIGNMENT_HPP_
#define SUPERBID_ASSIGNMENT_HPP_

#include <utility>
#include <vector>

#include "superbid/types.hpp"

namespace superbid {

/// Square weight matrix for the ordering subproblem: w(j, k) is the value of
/// placing paper j at 1-based position k+... (both indices 0-based here).
class WeightMatrix {
 public:
  explicit WeightMatrix(int d) : d_(d), w_(static_cast<size_t>(d) * d, 0.0) {}

  int size() const { return d_; }
  double& at(int paper, int position_index) {
    return w_[static_cast<size_t>(paper) * d_ + position_index];
  }
  double at(int paper, int position_index) const {
    return w_[static_cast<size_t>(paper) * d_ + position_index];
  }

 private:
  int d_;
  std::vector<double> w_;
};

/// Maximizes sum_j w(j, pi(j)) over permutations pi via shortest augmenting
/// paths in O(d^3). Output is a pure function of the input; on ties any
/// maximizer may be returned but repeated calls agree. Throws NonFiniteError
/// on NaN or infinite entries.
std::pair<PaperOrdering, double> solve_assignment(const WeightMatrix& w);

}  // namespace superbid

#endif  // SUPERBID_ASSIGNMENT_HPP_
