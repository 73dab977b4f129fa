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

// fssboost: two-party gradient boosting with function secret sharing.

#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fssboost/errors.hpp"

namespace {

using namespace fssboost::cli;

void add_data_flags(CLI::App& cmd, TrainOptions& o) {
  cmd.add_option("--dataset", o.dataset, "CSV file with a header row")->required()->check(CLI::ExistingFile);
  cmd.add_option("--label-col", o.label_col, "label column name or index (default: last)");
  cmd.add_option("--split-cols", o.split_cols,
                 "party 0 columns: a split point or a comma-separated list (default: even)");
  cmd.add_option("--depth", o.depth, "tree depth")->capture_default_str();
  cmd.add_option("--trees", o.trees, "number of trees")->capture_default_str();
  cmd.add_option("--buckets", o.buckets, "buckets per feature")->capture_default_str();
  cmd.add_option("--segments", o.segments, "lookup table segments")->capture_default_str();
  cmd.add_option("--gamma", o.gamma, "L2 regularization")->capture_default_str();
  cmd.add_option("--eta", o.eta, "learning rate")->capture_default_str();
  cmd.add_option("--ring-bits", o.ring_bits, "ring bit length")->capture_default_str();
  cmd.add_option("--frac-bits", o.frac_bits, "fixed-point fraction bits")->capture_default_str();
  cmd.add_option("--seed", o.seed, "seed for the split and the correlated randomness")
      ->capture_default_str();
  cmd.add_option("--train-ratio", o.train_ratio, "training share of the rows")->capture_default_str();
  cmd.add_option("--net-profile", o.net_profile, "time estimates to report")
      ->check(CLI::IsMember({"lan", "wan", "both", "none"}))
      ->capture_default_str();
}

void add_bench_flags(CLI::App& cmd, BenchOptions& o, std::size_t default_n) {
  o.n = default_n;
  cmd.add_option("--n", o.n, "elements per protocol")->capture_default_str();
  cmd.add_option("--ring-bits", o.ring_bits, "ring bit length")->capture_default_str();
  cmd.add_option("--frac-bits", o.frac_bits, "fixed-point fraction bits")->capture_default_str();
  cmd.add_option("--segments", o.segments, "lookup table segments")->capture_default_str();
  cmd.add_option("--seed", o.seed, "randomness seed")->capture_default_str();
  cmd.add_option("--net-profile", o.net_profile, "time estimates to report")
      ->check(CLI::IsMember({"lan", "wan", "both", "none"}))
      ->capture_default_str();
  cmd.add_option("--out", o.out, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-party gradient boosted trees over vertically partitioned data"};
  app.require_subcommand(1);

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "train a model and report cost and accuracy");
  add_data_flags(*train_cmd, train);
  train_cmd->add_option("--mode", train.mode, "secure protocol or a plaintext oracle")
      ->check(CLI::IsMember({"secure", "mirror", "exact"}))
      ->capture_default_str();
  train_cmd->add_option("--out", train.out,
                        "directory for report.json, model.json and the party documents");

  PredictOptions predict;
  auto* predict_cmd = app.add_subcommand("predict", "score a labelled CSV with a trained model");
  predict_cmd->add_option("--model", predict.models, "model.json, or party0.json and party1.json")
      ->required()
      ->expected(1, 2)
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--dataset", predict.dataset, "CSV file with a header row")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--label-col", predict.label_col, "label column name or index");
  predict_cmd->add_option("--net-profile", predict.net_profile, "time estimates to report")
      ->check(CLI::IsMember({"lan", "wan", "both", "none"}))
      ->capture_default_str();
  predict_cmd->add_option("--out", predict.out, "write the JSON report here instead of stdout");

  BenchOptions agg;
  auto* agg_cmd = app.add_subcommand("bench-agg", "meter the compressed aggregation");
  add_bench_flags(*agg_cmd, agg, 10000);

  BenchOptions micro;
  auto* micro_cmd = app.add_subcommand("bench-micro", "meter and time each online protocol");
  add_bench_flags(*micro_cmd, micro, 1000);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-segments", "test accuracy for a range of segment counts");
  add_data_flags(*sweep_cmd, sweep);
  sweep.mode = "mirror";
  sweep_cmd->add_option("--mode", sweep.mode, "secure or mirror (bit-identical results)")
      ->check(CLI::IsMember({"secure", "mirror", "exact"}))
      ->capture_default_str();
  sweep_cmd->add_option("--min-segments", sweep.min_segments)->capture_default_str();
  sweep_cmd->add_option("--max-segments", sweep.max_segments)->capture_default_str();
  sweep_cmd->add_option("--splits", sweep.splits, "train/test splits averaged per point")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "write the CSV here instead of stdout");

  std::uint64_t selftest_seed = 1;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the exhaustive small-ring oracles");
  selftest_cmd->add_option("--seed", selftest_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*train_cmd) return cmd_train(train);
    if (*predict_cmd) return cmd_predict(predict);
    if (*agg_cmd) return cmd_bench_agg(agg);
    if (*micro_cmd) return cmd_bench_micro(micro);
    if (*sweep_cmd) return cmd_sweep_segments(sweep);
    if (*selftest_cmd) return cmd_selftest(selftest_seed);
  } catch (const fssboost::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const fssboost::SetupError& e) {
    std::fprintf(stderr, "setup error: %s\n", e.what());
    return kExitSetup;
  } catch (const fssboost::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const fssboost::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitProtocol;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitProtocol;
  }
  return kExitUsage;
}
