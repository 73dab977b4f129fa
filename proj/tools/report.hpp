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

// JSON fragments shared by the command implementations.

#ifndef FSSBOOST_TOOLS_REPORT_HPP_
#define FSSBOOST_TOOLS_REPORT_HPP_

#include <string>
#include <vector>

#include "fssboost/config.hpp"
#include "fssboost/data.hpp"
#include "fssboost/dealer.hpp"
#include "fssboost/transport.hpp"
#include "json.hpp"

namespace fssboost::cli {

using nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

ordered_json meter_json(const Meter& m);
ordered_json config_json(const TrainConfig& cfg);
ordered_json dealer_json(const DealerCounters& c);
// {"lan": s, "wan": s} restricted to the chosen profile ("both", "lan",
// "wan" or "none").
ordered_json estimates_json(const Meter& m, const std::string& profile);

// Reorders columns so that party 0's features come first. An empty value
// splits evenly, a number is the split point, anything else is a
// comma-separated list of party-0 columns (names or 0-based indices).
std::pair<Dataset, VerticalPartition> apply_split(const Dataset& ds, const std::string& flag);
// Columns of ds in the given name order. Throws UsageError on a missing name.
Dataset select_columns(const Dataset& ds, const std::vector<std::string>& names);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace fssboost::cli

#endif  // FSSBOOST_TOOLS_REPORT_HPP_
