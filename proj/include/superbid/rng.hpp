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
#ifndef SUPERBID_RNG_HPP_
#define SUPERBID_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace superbid {

/// splitmix64 finalizer; good avalanche for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic named substream: the same (master, name, a, b) always
/// yields the same generator, and distinct names or indices yield
/// independent-looking streams.
inline std::mt19937_64 named_stream(std::uint64_t master, std::string_view name,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the stream name
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t seed = mix64(master ^ mix64(h) ^ mix64(a * 0x9e3779b97f4a7c15ULL + b));
  return std::mt19937_64(seed);
}

}  // namespace superbid

#endif  // SUPERBID_RNG_HPP_
