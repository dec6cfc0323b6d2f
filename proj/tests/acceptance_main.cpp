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

// Acceptance gate: every guarantee the library claims, checked end to end at
// its stated tolerance, one line per criterion. Exits nonzero on any failure.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "superbid/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;

  struct Limit {
    const char* name;
    double seconds;  // 0 = no stated budget
  };
  const std::vector<Limit> limits = {
      {"local-optimality", 30.0},
      {"path-equivalence+benchmark", 0.0},
      {"worstcase-gaps", 10.0},
      {"community-exact", 60.0},
      {"noisy-community", 300.0},
      {"synthetic-reproduction", 600.0},
      {"linear-gain", 120.0},
      {"simulator-soundness", 0.0},
  };

  const auto results = superbid::verify::run_all(seed);
  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    bool pass = r.pass;
    std::string note;
    if (i < limits.size() && limits[i].seconds > 0.0 &&
        r.seconds > limits[i].seconds) {
      pass = false;
      note = " [OVER TIME BUDGET " + std::to_string(limits[i].seconds) + "s]";
    }
    std::printf("[%zu/%zu] %s %-27s %s%s (%.1fs)\n", i + 1, results.size(),
                pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                note.c_str(), r.seconds);
    if (!pass) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
