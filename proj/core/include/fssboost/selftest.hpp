/*
 * Copyright 2026 The fssboost Authors.
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

// Exhaustive small-ring oracles (ell = 8) plus a randomized full-ring check,
// runnable from the command line.

#ifndef FSSBOOST_SELFTEST_HPP_
#define FSSBOOST_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace fssboost {

struct SelfCheck {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  double seconds = 0.0;

  bool ok() const { return passed == total; }
};

std::vector<SelfCheck> run_selftests(std::uint64_t seed = 1);

}  // namespace fssboost

#endif  // FSSBOOST_SELFTEST_HPP_
