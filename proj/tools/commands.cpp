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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "fssboost/aggregate.hpp"
#include "fssboost/compare.hpp"
#include "fssboost/data.hpp"
#include "fssboost/errors.hpp"
#include "fssboost/gain.hpp"
#include "fssboost/lut.hpp"
#include "fssboost/model_io.hpp"
#include "fssboost/mpc.hpp"
#include "fssboost/reference.hpp"
#include "fssboost/selftest.hpp"
#include "fssboost/trainer.hpp"
#include "report.hpp"

namespace fssboost::cli {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

ordered_json report_header(const char* command) {
  return {{"schema", kReportSchema}, {"command", command}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
  } else {
    write_text(path, text);
  }
}

ordered_json accuracy_json(std::span<const double> margins, std::span<const int> labels) {
  if (labels.empty()) return nullptr;
  return accuracy(margins, labels);
}

std::array<Shares, 2> split_shares(std::span<const Word> xs, const RingConfig& cfg, CtrPrg& rng) {
  std::array<Shares, 2> out;
  for (Word x : xs) {
    const Word r = rng.next_bits(cfg.ell);
    out[0].push_back(cfg.sub(x, r));
    out[1].push_back(r);
  }
  return out;
}

Word random_fixed(CtrPrg& rng, const RingConfig& cfg, int int_bits) {
  const std::uint64_t span = std::uint64_t{1} << (cfg.ell_f + int_bits + 1);
  return cfg.from_signed(static_cast<std::int64_t>(rng.uniform(span)) -
                         static_cast<std::int64_t>(span / 2));
}

}  // namespace

TrainConfig TrainOptions::config() const {
  TrainConfig cfg;
  cfg.trees = trees;
  cfg.depth = depth;
  cfg.buckets = buckets;
  cfg.segments = segments;
  cfg.gamma = gamma;
  cfg.eta = eta;
  cfg.ring = RingConfig{ring_bits, frac_bits};
  cfg.seed = seed;
  return cfg;
}

int cmd_train(const TrainOptions& o) {
  TrainConfig cfg = o.config();
  cfg.ring.validate();
  cfg.validate();
  const Dataset raw = load_csv(o.dataset, o.label_col);
  const auto [ds, part] = apply_split(raw, o.split_cols);
  const auto [train, test] = split_train_test(ds, o.train_ratio, cfg.seed);
  const BucketMatrix bins = bin_features(train, cfg.buckets);
  if (o.mode != "exact") cfg.gain_bits = cfg.resolve_gain_bits(train.size());

  ordered_json report = report_header("train");
  report["mode"] = o.mode;
  report["config"] = config_json(cfg);
  report["dataset"] = {{"path", o.dataset},
                       {"rows", ds.size()},
                       {"features", ds.features()},
                       {"train_rows", train.size()},
                       {"test_rows", test.size()},
                       {"train_ratio", o.train_ratio},
                       {"party0_features", std::vector<std::string>(
                                               ds.feature_names.begin(),
                                               ds.feature_names.begin() +
                                                   static_cast<std::ptrdiff_t>(part.split))},
                       {"party1_features", std::vector<std::string>(
                                               ds.feature_names.begin() +
                                                   static_cast<std::ptrdiff_t>(part.split),
                                               ds.feature_names.end())}};

  PlainModel model;
  std::vector<PartyModel> halves;
  const auto start = Clock::now();
  if (o.mode == "secure") {
    const SecureRun run = train_model(train, bins, part, cfg, &test);
    model = run.model;
    const auto& p0 = run.parties[0];
    const auto& p1 = run.parties[1];
    ordered_json trees = ordered_json::array();
    for (std::size_t t = 0; t < p0.stats.size(); ++t) {
      trees.push_back({{"index", t},
                       {"seconds", std::max(p0.stats[t].seconds, p1.stats[t].seconds)},
                       {"party0", meter_json(p0.stats[t].meter)},
                       {"party1", meter_json(p1.stats[t].meter)}});
    }
    report["trees"] = trees;
    ordered_json meters = ordered_json::object();
    for (int b = 0; b < 2; ++b) {
      ordered_json m = meter_json(run.meters[b]);
      m["estimated_seconds"] = estimates_json(run.meters[b], o.net_profile);
      meters["party" + std::to_string(b)] = m;
    }
    report["meter"] = meters;
    report["correlations"] = dealer_json(p0.dealer);

    std::vector<double> train_margins;
    for (std::size_t i = 0; i < train.size(); ++i) {
      train_margins.push_back(decode(cfg.ring.add(p0.margins_after_tree.back()[i],
                                                   p1.margins_after_tree.back()[i]),
                                     cfg.ring));
    }
    report["accuracy"] = {{"train", accuracy_json(train_margins, train.labels)},
                          {"test", accuracy_json(run.test_margins, test.labels)}};
    for (int b = 0; b < 2; ++b) {
      halves.push_back({b, cfg, part, ds.feature_names, run.parties[b].trees});
    }
  } else {
    const OracleMode mode = o.mode == "mirror" ? OracleMode::kMirror : OracleMode::kExact;
    const ReferenceRun run = plain_train(train, bins, cfg, mode);
    model = run.model;
    report["accuracy"] = {{"train", accuracy_json(model.margins(train), train.labels)},
                          {"test", accuracy_json(model.margins(test), test.labels)}};
  }
  report["seconds"] = since(start);

  if (o.out.empty()) {
    emit(report.dump(2), "");
    return kExitOk;
  }
  const std::filesystem::path dir(o.out);
  std::filesystem::create_directories(dir);
  write_text((dir / "report.json").string(), report.dump(2));
  write_text((dir / "model.json").string(), write_plain_model(model, cfg, ds.feature_names));
  for (const auto& h : halves) {
    write_text((dir / ("party" + std::to_string(h.party) + ".json")).string(),
               write_party_model(h));
  }
  return kExitOk;
}

int cmd_predict(const PredictOptions& o) {
  if (o.models.empty() || o.models.size() > 2) {
    throw UsageError("predict takes one plain model or two party documents");
  }
  std::vector<std::string> texts;
  for (const auto& path : o.models) texts.push_back(read_text(path));
  ordered_json names;
  std::string kind;
  try {
    const auto j = ordered_json::parse(texts[0]);
    names = j.at("feature_names");
    kind = j.value("kind", "");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(o.models[0] + ": " + e.what());
  }
  const Dataset ds =
      select_columns(load_csv(o.dataset, o.label_col), names.get<std::vector<std::string>>());

  ordered_json report = report_header("predict");
  report["rows"] = ds.size();
  std::vector<double> margins;
  if (o.models.size() == 1) {
    if (kind != "plain") throw UsageError("a single model must be a plain document");
    const PlainModel model = read_plain_model(texts[0]);
    report["mode"] = "plain";
    margins = model.margins(ds);
  } else {
    const PartyModel a = read_party_model(texts[0]);
    const PartyModel b = read_party_model(texts[1]);
    const PlainModel combined = combine_party_models(a, b);  // validates the pair
    const std::array<const PartyModel*, 2> docs = {a.party == 0 ? &a : &b,
                                                   a.party == 0 ? &b : &a};
    const TrainConfig& cfg = docs[0]->config;
    BucketMatrix no_bins;
    no_bins.buckets = cfg.buckets;
    no_bins.thresholds.assign(ds.features(), {});
    const std::array<PartyData, 2> views = {
        PartyData::view(0, ds, no_bins, docs[0]->partition),
        PartyData::view(1, ds, no_bins, docs[1]->partition)};
    const auto start = Clock::now();
    auto res = run_two_party(
        [&](Session& s) {
          return secure_predict(s, docs[s.index()]->trees, views[s.index()]);
        },
        cfg.session_seed(), cfg.ring, cfg.dcf_mode);
    report["mode"] = "secure";
    report["seconds"] = since(start);
    bool same = true;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const Word w = cfg.ring.add(res.outputs[0][i], res.outputs[1][i]);
      same = same && w == combined.margin_fixed(ds.rows[i]);
      margins.push_back(decode(w, cfg.ring));
    }
    report["matches_combined_model"] = same;
    ordered_json meters = ordered_json::object();
    for (int p = 0; p < 2; ++p) {
      ordered_json m = meter_json(res.meters[p]);
      m["estimated_seconds"] = estimates_json(res.meters[p], o.net_profile);
      meters["party" + std::to_string(p)] = m;
    }
    report["meter"] = meters;
  }
  report["accuracy"] = accuracy_json(margins, ds.labels);
  report["margins"] = margins;
  emit(report.dump(2), o.out);
  return kExitOk;
}

int cmd_bench_agg(const BenchOptions& o) {
  const RingConfig cfg{o.ring_bits, o.frac_bits};
  cfg.validate();
  if (o.n == 0) throw UsageError("--n must be positive");
  CtrPrg rng(Block{o.seed, 0xa66}, Block{});
  Shares s(o.n), g(o.n);
  for (std::size_t i = 0; i < o.n; ++i) {
    s[i] = static_cast<Word>(rng.next_bit());
    g[i] = random_fixed(rng, cfg, 0);  // |g| <= 1
  }
  const auto ss = split_shares(s, cfg, rng);
  const auto gs = split_shares(g, cfg, rng);
  const auto start = Clock::now();
  auto res = run_two_party([&](Session& x) { return agg_online(x, ss[x.index()], gs[x.index()]); },
                           Block{o.seed, 0xa66}, cfg);
  const double seconds = since(start);

  const std::uint64_t per_elem = static_cast<std::uint64_t>(cfg.ell_f + 3);
  const std::uint64_t formula = o.n * per_elem;
  const bool correct = cfg.add(res.outputs[0], res.outputs[1]) == brute::dot(s, g, cfg);
  bool matches = true;
  ordered_json report = report_header("bench-agg");
  report["n"] = o.n;
  report["ring_bits"] = cfg.ell;
  report["frac_bits"] = cfg.ell_f;
  report["formula"] = {{"bits_per_element", per_elem},
                       {"bits", formula},
                       {"rounds", 1},
                       {"saving_vs_masked_open_bits", cfg.ell - cfg.ell_f - 2}};
  for (int b = 0; b < 2; ++b) {
    const Meter& m = res.meters[b];
    matches = matches && m.bits == formula && m.rounds == 1;
    ordered_json mj = meter_json(m);
    mj["estimated_seconds"] = estimates_json(m, o.net_profile);
    report["party" + std::to_string(b)] = mj;
  }
  report["matches_formula"] = matches;
  report["correct"] = correct;
  report["seconds"] = seconds;
  emit(report.dump(2), o.out);
  return matches && correct ? kExitOk : kExitMismatch;
}

int cmd_bench_micro(const BenchOptions& o) {
  const RingConfig cfg{o.ring_bits, o.frac_bits};
  cfg.validate();
  if (o.n == 0) throw UsageError("--n must be positive");
  const std::size_t n = o.n;
  const std::uint64_t ell = static_cast<std::uint64_t>(cfg.ell);
  CtrPrg rng(Block{o.seed, 0x3c0}, Block{});

  Shares x(n), y(n), bits(n), G(n), H(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = random_fixed(rng, cfg, 3);
    y[i] = random_fixed(rng, cfg, 3);
    bits[i] = static_cast<Word>(rng.next_bit());
    G[i] = random_fixed(rng, cfg, 6);
    H[i] = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(std::uint64_t{32} << cfg.ell_f)));
  }
  const auto xs = split_shares(x, cfg, rng), ys = split_shares(y, cfg, rng);
  const auto bs = split_shares(bits, cfg, rng);
  const auto Gs = split_shares(G, cfg, rng), Hs = split_shares(H, cfg, rng);
  const SigmoidTable sig = SigmoidTable::build(o.segments, cfg);
  const LeafWeightTable leaf = LeafWeightTable::build(o.segments, 1.0, cfg);
  const Word gamma = encode(1.0, cfg).value;

  struct Case {
    const char* name;
    std::function<Shares(Session&)> body;
    std::optional<std::uint64_t> rounds;  // declared budgets, per party
    std::optional<std::uint64_t> bits;
  };
  const std::vector<Case> cases = {
      {"mul", [&](Session& s) { return mul(s, xs[s.index()], ys[s.index()]); }, 1, 2 * ell * n},
      {"lt_gate", [&](Session& s) { return lt_gate(s, xs[s.index()], 0); }, 1, ell * n},
      {"aggregate",
       [&](Session& s) { return Shares{agg_online(s, bs[s.index()], xs[s.index()])}; }, 1,
       static_cast<std::uint64_t>(cfg.ell_f + 3) * n},
      {"sigmoid_online", [&](Session& s) { return sigmoid_online(s, xs[s.index()], sig); }, 1,
       static_cast<std::uint64_t>(o.segments) * ell * n},
      {"leafweight_online",
       [&](Session& s) { return leafweight_online(s, Gs[s.index()], Hs[s.index()], gamma, leaf); },
       std::nullopt, std::nullopt},
      {"gain_online",
       [&](Session& s) {
         AggregateShares a{xs[s.index()], ys[s.index()], bs[s.index()], bs[s.index()],
                           Shares(n, s.constant(2))};
         return gain_online(s, a, Word{1} << 4);
       },
       5, 9 * ell * n},
  };

  ordered_json report = report_header("bench-micro");
  report["n"] = n;
  report["ring_bits"] = cfg.ell;
  report["frac_bits"] = cfg.ell_f;
  report["segments"] = o.segments;
  bool ok = true;
  ordered_json out = ordered_json::object();
  for (const auto& c : cases) {
    const auto start = Clock::now();
    auto res = run_two_party(c.body, Block{o.seed, 0x3c1}, cfg);
    const double seconds = since(start);
    const Meter& m = res.meters[0];
    ordered_json j = {{"seconds", seconds},
                      {"rounds", m.rounds},
                      {"bits", m.bits},
                      {"bytes", m.bytes},
                      {"bits_per_element", static_cast<double>(m.bits) / static_cast<double>(n)}};
    j["budget"] = {{"rounds", c.rounds ? ordered_json(*c.rounds) : ordered_json(nullptr)},
                   {"bits", c.bits ? ordered_json(*c.bits) : ordered_json(nullptr)}};
    const bool within = (!c.rounds || m.rounds <= *c.rounds) && (!c.bits || m.bits <= *c.bits);
    j["within_budget"] = within;
    j["estimated_seconds"] = estimates_json(m, o.net_profile);
    ok = ok && within;
    out[c.name] = j;
  }
  report["protocols"] = out;
  emit(report.dump(2), o.out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_sweep_segments(const SweepOptions& o) {
  if (o.mode == "exact") throw UsageError("sweep-segments needs --mode mirror or secure");
  if (o.min_segments < 1 || o.max_segments < o.min_segments) {
    throw UsageError("need 1 <= --min-segments <= --max-segments");
  }
  if (o.splits < 1) throw UsageError("--splits must be positive");
  const Dataset raw = load_csv(o.dataset, o.label_col);
  const auto [ds, part] = apply_split(raw, o.split_cols);
  struct Split {
    Dataset train, test;
    BucketMatrix bins;
  };
  std::vector<Split> splits;
  for (int k = 0; k < o.splits; ++k) {
    auto [train, test] = split_train_test(ds, o.train_ratio, o.seed + static_cast<std::uint64_t>(k));
    Split s{std::move(train), std::move(test), {}};
    s.bins = bin_features(s.train, o.buckets);
    splits.push_back(std::move(s));
  }
  std::ostringstream csv;
  csv << "n,accuracy,min,max\n";
  for (int n = o.min_segments; n <= o.max_segments; ++n) {
    TrainOptions one = o;
    one.segments = n;
    double sum = 0, lo = 1, hi = 0;
    for (int k = 0; k < o.splits; ++k) {
      const Split& s = splits[static_cast<std::size_t>(k)];
      TrainConfig cfg = one.config();
      cfg.seed = o.seed + static_cast<std::uint64_t>(k);
      double acc = 0;
      if (o.mode == "secure") {
        const auto run = train_model(s.train, s.bins, part, cfg, &s.test);
        acc = accuracy(run.test_margins, s.test.labels);
      } else {
        const auto run = plain_train(s.train, s.bins, cfg, OracleMode::kMirror);
        acc = accuracy(run.model.margins(s.test), s.test.labels);
      }
      sum += acc;
      lo = std::min(lo, acc);
      hi = std::max(hi, acc);
    }
    char line[96];
    std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f\n", n, sum / o.splits, lo, hi);
    csv << line;
  }
  const std::string text = csv.str();
  emit(text.substr(0, text.size() - 1), o.out);
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed) {
  bool ok = true;
  for (const auto& c : run_selftests(seed)) {
    std::printf("%s  %-48s %llu/%llu  (%.2fs)\n", c.ok() ? "PASS" : "FAIL", c.name.c_str(),
                static_cast<unsigned long long>(c.passed), static_cast<unsigned long long>(c.total),
                c.seconds);
    ok = ok && c.ok();
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace fssboost::cli
