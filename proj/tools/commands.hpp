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

#ifndef FSSBOOST_TOOLS_COMMANDS_HPP_
#define FSSBOOST_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fssboost/config.hpp"

namespace fssboost::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // an oracle or meter check failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSetup = 3;
inline constexpr int kExitParse = 4;
inline constexpr int kExitProtocol = 5;

struct TrainOptions {
  std::string dataset;
  std::string label_col;
  std::string split_cols;
  int depth = 4;
  int trees = 5;
  int buckets = 8;
  int segments = 12;
  double gamma = 1.0;
  double eta = 1.0;
  int ring_bits = 64;
  int frac_bits = 16;
  std::uint64_t seed = 1;
  double train_ratio = 0.8;
  std::string net_profile = "both";
  std::string mode = "secure";
  std::string out;

  TrainConfig config() const;
};

struct SweepOptions : TrainOptions {
  int min_segments = 4;
  int max_segments = 16;
  int splits = 10;
};

struct PredictOptions {
  std::vector<std::string> models;
  std::string dataset;
  std::string label_col;
  std::string net_profile = "both";
  std::string out;
};

struct BenchOptions {
  std::size_t n = 10000;
  int ring_bits = 64;
  int frac_bits = 16;
  int segments = 12;
  std::uint64_t seed = 1;
  std::string net_profile = "both";
  std::string out;
};

// train --out names a directory (report.json, model.json and, for secure
// runs, party0.json / party1.json); the other commands write one file.
int cmd_train(const TrainOptions& o);
int cmd_predict(const PredictOptions& o);
int cmd_bench_agg(const BenchOptions& o);
int cmd_bench_micro(const BenchOptions& o);
int cmd_sweep_segments(const SweepOptions& o);
int cmd_selftest(std::uint64_t seed);

}  // namespace fssboost::cli

#endif  // FSSBOOST_TOOLS_COMMANDS_HPP_
