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
#ifndef SUPERBID_BASELINES_HPP_
#define SUPERBID_BASELINES_HPP_

#include <random>
#include <span>

#include "superbid/types.hpp"

namespace superbid {

/// Uniformly random permutation of the d papers.
PaperOrdering rand_order(int d, std::mt19937_64& rng);

/// Papers by nonincreasing similarity; equal similarities resolved by
/// ascending bid count, remaining ties uniformly at random.
PaperOrdering sim_order(std::span<const double> row, const BidState& bids,
                        std::mt19937_64& rng);

/// Papers by nondecreasing bid count; equal counts resolved by descending
/// similarity, remaining ties uniformly at random.
PaperOrdering bid_order(const BidState& bids, std::span<const double> row,
                        std::mt19937_64& rng);

// Deterministic variants resolve any remaining tie by ascending paper index.
// Exact-expectation computations use these; on instances where the leftover
// ties are between exchangeable papers the expected gain is unchanged.
PaperOrdering sim_order_deterministic(std::span<const double> row,
                                      const BidState& bids);
PaperOrdering bid_order_deterministic(const BidState& bids,
                                      std::span<const double> row);

}  // namespace superbid

#endif  // SUPERBID_BASELINES_HPP_
