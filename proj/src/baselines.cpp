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
#include "superbid/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace superbid {

namespace {

// Stable three-key sort: primary and secondary comparators, then a per-call
// random jitter key for the leftover ties.
template <typename Less>
PaperOrdering ordered_by(int d, Less less, std::mt19937_64* rng) {
  std::vector<std::uint64_t> jitter;
  if (rng) {
    jitter.resize(d);
    for (auto& x : jitter) x = (*rng)();
  }
  std::vector<int> papers(d);
  std::iota(papers.begin(), papers.end(), 0);
  std::sort(papers.begin(), papers.end(), [&](int a, int b) {
    if (auto c = less(a, b); c != 0) return c > 0;
    if (rng) return jitter[a] < jitter[b];
    return a < b;
  });
  return PaperOrdering::from_display(papers);
}

// Returns >0 when a precedes b, <0 when b precedes a, 0 on a full tie.
int sim_compare(std::span<const double> row, const BidState& bids, int a,
                int b) {
  if (row[a] != row[b]) return row[a] > row[b] ? 1 : -1;
  if (bids.count(a) != bids.count(b))
    return bids.count(a) < bids.count(b) ? 1 : -1;
  return 0;
}

int bid_compare(const BidState& bids, std::span<const double> row, int a,
                int b) {
  if (bids.count(a) != bids.count(b))
    return bids.count(a) < bids.count(b) ? 1 : -1;
  if (row[a] != row[b]) return row[a] > row[b] ? 1 : -1;
  return 0;
}

}  // namespace

PaperOrdering rand_order(int d, std::mt19937_64& rng) {
  std::vector<int> papers(d);
  std::iota(papers.begin(), papers.end(), 0);
  std::shuffle(papers.begin(), papers.end(), rng);
  return PaperOrdering::from_display(papers);
}

PaperOrdering sim_order(std::span<const double> row, const BidState& bids,
                        std::mt19937_64& rng) {
  return ordered_by(static_cast<int>(row.size()),
                    [&](int a, int b) { return sim_compare(row, bids, a, b); },
                    &rng);
}

PaperOrdering bid_order(const BidState& bids, std::span<const double> row,
                        std::mt19937_64& rng) {
  return ordered_by(static_cast<int>(row.size()),
                    [&](int a, int b) { return bid_compare(bids, row, a, b); },
                    &rng);
}

PaperOrdering sim_order_deterministic(std::span<const double> row,
                                      const BidState& bids) {
  return ordered_by(static_cast<int>(row.size()),
                    [&](int a, int b) { return sim_compare(row, bids, a, b); },
                    nullptr);
}

PaperOrdering bid_order_deterministic(const BidState& bids,
                                      std::span<const double> row) {
  return ordered_by(static_cast<int>(row.size()),
                    [&](int a, int b) { return bid_compare(bids, row, a, b); },
                    nullptr);
}

}  // namespace superbid
