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
#include "superbid/assignment.hpp"

#include <cmath>
#include <limits>

namespace superbid {

// Shortest-augmenting-path assignment with dual potentials. Internally
// minimizes the negated weights; rows are inserted one at a time and each
// insertion runs a Dijkstra-like scan over columns.
std::pair<PaperOrdering, double> solve_assignment(const WeightMatrix& w) {
  const int d = w.size();
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (!std::isfinite(w.at(j, k))) throw NonFiniteError();

  const double kInf = std::numeric_limits<double>::infinity();
  auto cost = [&](int row, int col) { return -w.at(row, col); };

  // 1-based with a virtual 0 slot, as is conventional for this scheme.
  std::vector<double> u(d + 1, 0.0), v(d + 1, 0.0);
  std::vector<int> match(d + 1, 0);  // match[col] = row occupying col
  std::vector<int> way(d + 1, 0);

  for (int row = 1; row <= d; ++row) {
    match[0] = row;
    int col0 = 0;
    std::vector<double> min_slack(d + 1, kInf);
    std::vector<char> used(d + 1, 0);
    do {
      used[col0] = 1;
      const int row0 = match[col0];
      double delta = kInf;
      int col1 = -1;
      for (int col = 1; col <= d; ++col) {
        if (used[col]) continue;
        const double cur = cost(row0 - 1, col - 1) - u[row0] - v[col];
        if (cur < min_slack[col]) {
          min_slack[col] = cur;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= d; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0);
  }

  std::vector<int> positions(d, 0);
  for (int col = 1; col <= d; ++col) positions[match[col] - 1] = col;
  double value = 0.0;
  for (int j = 0; j < d; ++j) value += w.at(j, positions[j] - 1);
  return {PaperOrdering(std::move(positions)), value};
}

}  // namespace superbid
