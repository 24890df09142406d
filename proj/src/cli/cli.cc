// Copyright 2026 The cushLEPOR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cushlepor/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cushlepor/corpus.h"
#include "cushlepor/errors.h"
#include "cushlepor/kv_file.h"
#include "cushlepor/objective.h"
#include "cushlepor/presets.h"
#include "cushlepor/report.h"
#include "cushlepor/scoring.h"
#include "json.hpp"

namespace cushlepor::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string_view KindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return "usage";
    case ErrorKind::kData:
      return "data";
    case ErrorKind::kRuntime:
      return "runtime";
  }
  return "runtime";
}

int ExitFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kData:
      return kExitData;
    case ErrorKind::kRuntime:
      return kExitRuntime;
  }
  return kExitRuntime;
}

void Diagnose(std::ostream& err, std::string_view kind, std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  err << "cushlepor: error[" << kind << "]: " << message << "\n";
}

template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    Diagnose(err, KindName(e.kind()), e.what());
    return ExitFor(e.kind());
  } catch (const std::exception& e) {
    Diagnose(err, "runtime", e.what());
    return kExitRuntime;
  }
}

TokenizeMode ParseTokenize(std::string_view name) {
  if (name == "standard") return TokenizeMode::kStandard;
  if (name == "whitespace") return TokenizeMode::kWhitespace;
  throw UsageError("unknown tokenizer '" + std::string(name) +
                   "'; expected standard or whitespace");
}

Corpus LoadCorpus(const RunConfig& config,
                  std::vector<std::string> gold_columns, std::ostream& err) {
  if (config.input.empty()) throw UsageError("--input is required");
  IngestOptions options;
  options.format = config.format.empty() ? CorpusFormatFromPath(config.input)
                                         : ParseCorpusFormat(config.format);
  options.columns = ParseColumnMap(config.columns);
  options.strict = config.strict;
  options.tokenize = ParseTokenize(config.tokenize);
  options.gold_columns = std::move(gold_columns);

  IngestResult result = Ingest(config.input, options);
  if (!config.quiet) {
    for (const IngestIssue& w : result.warnings) {
      err << "cushlepor: warning: " << config.input << ":" << w.line << ": "
          << w.message << "\n";
    }
  }
  if (result.corpus.empty()) {
    throw DataError("no usable segments in '" + config.input + "'");
  }
  return std::move(result.corpus);
}

struct ResolvedParams {
  HLeporParams params;
  std::string source;
};

ResolvedParams ResolveParams(const RunConfig& config) {
  const bool any_inline = config.alpha || config.beta || config.n ||
                          config.weight_elp || config.weight_pos ||
                          config.weight_pr;
  const int sources = static_cast<int>(config.preset.has_value()) +
                      static_cast<int>(config.params_file.has_value()) +
                      static_cast<int>(any_inline);
  if (sources != 1) {
    throw UsageError(
        "exactly one parameter source is required: --preset, --params-file, "
        "or all six of --alpha --beta --n --weight-elp --weight-pos "
        "--weight-pr");
  }
  ResolvedParams out;
  if (config.preset) {
    const Preset& p = LookupPreset(*config.preset);
    out.params = p.params;
    out.source = "preset:" + PresetName(p);
  } else if (config.params_file) {
    out.params = LoadPresetFile(*config.params_file).params;
    out.source = "file:" + *config.params_file;
  } else {
    if (!(config.alpha && config.beta && config.n && config.weight_elp &&
          config.weight_pos && config.weight_pr)) {
      throw UsageError(
          "inline parameters need all six of --alpha --beta --n --weight-elp "
          "--weight-pos --weight-pr");
    }
    out.params = {*config.alpha,      *config.beta,       *config.n,
                  *config.weight_elp, *config.weight_pos, *config.weight_pr};
    out.source = "inline";
  }
  ValidateParams(out.params);
  return out;
}

void EnsureDirectory(const fs::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) {
    throw IoError("cannot create directory '" + dir.string() + "'");
  }
}

int ScoreOrReport(const RunConfig& config, bool report_mode, std::ostream& out,
                  std::ostream& err) {
  return Guarded(err, [&] {
    if (report_mode && !config.gold) {
      throw UsageError("report needs --gold");
    }
    const ResolvedParams resolved = ResolveParams(config);
    const GoldScale scale = ParseGoldScale(config.gold_scale);
    const ReportFormat format = ParseReportFormat(config.report_format);
    if (format == ReportFormat::kCsv && config.out.empty()) {
      throw UsageError("--report-format csv needs --out DIR");
    }

    std::vector<std::string> gold_columns;
    if (config.gold) {
      gold_columns.push_back(*config.gold);
      for (const auto& c : config.compare_columns) gold_columns.push_back(c);
    }
    const Corpus corpus = LoadCorpus(config, gold_columns, err);

    ScoreOptions options;
    options.tokenize = ParseTokenize(config.tokenize);
    options.threads = config.threads;
    CorpusScores scores = ScoreCorpus(corpus, resolved.params, options);
    if (config.gold) {
      scores.agreement.push_back(
          ComputeAgreement(corpus, scores, *config.gold, scale));
      for (const auto& column : config.compare_columns) {
        scores.agreement.push_back(
            ComputeColumnAgreement(corpus, column, *config.gold, scale));
      }
    }

    ReportMeta meta;
    meta.params = resolved.params;
    meta.params_source = resolved.source;
    meta.seed = config.seed;
    meta.input = config.input;

    if (config.out.empty()) {
      out << RenderJsonReport(scores, meta);
    } else {
      const fs::path path(config.out);
      EnsureDirectory(format == ReportFormat::kCsv ? path : path.parent_path());
      WriteReport(scores, meta, path, format);
    }
    if (!config.quiet) {
      err << "cushlepor: scored " << scores.segments.size() << " segments, "
          << scores.systems.size() << " systems with " << resolved.source
          << " " << ToString(resolved.params) << "\n";
      for (const Agreement& a : scores.agreement) {
        err << "cushlepor: " << a.metric << " vs " << a.column
            << ": rmse=" << FormatReal(a.rmse) << " pearson="
            << (a.pearson ? FormatReal(*a.pearson) : "undefined") << " over "
            << a.segments << " segments\n";
      }
    }
    return static_cast<int>(kExitOk);
  });
}

ordered_json ParamsJson(const HLeporParams& p) {
  return {{"alpha", p.alpha},           {"beta", p.beta},
          {"n", p.n},                   {"weight_elp", p.weight_elp},
          {"weight_pos", p.weight_pos}, {"weight_pr", p.weight_pr}};
}

std::uint64_t GenerateSeed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

RealRange ParseRealRange(std::string_view text, std::string_view what) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError(std::string(what) + " expects LOW:HIGH");
  }
  try {
    return {ParseReal(text.substr(0, colon), what),
            ParseReal(text.substr(colon + 1), what)};
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

IntRange ParseIntRange(std::string_view text, std::string_view what) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError(std::string(what) + " expects LOW:HIGH");
  }
  try {
    return {static_cast<int>(ParseInteger(text.substr(0, colon), what)),
            static_cast<int>(ParseInteger(text.substr(colon + 1), what))};
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int CmdScore(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return ScoreOrReport(config, false, out, err);
}

int CmdReport(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return ScoreOrReport(config, true, out, err);
}

int CmdTune(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (!config.gold) throw UsageError("tune needs --gold COLUMN");
    if (config.tuner != "tpe" && config.tuner != "random") {
      throw UsageError("unknown tuner '" + config.tuner +
                       "'; expected tpe or random");
    }
    if (config.tpe.budget < 1) {
      throw UsageError("--budget must be >= 1, got " +
                       std::to_string(config.tpe.budget));
    }
    ValidateSpace(config.space);
    ValidateTpeConfig(config.tpe);
    const GoldScale scale = ParseGoldScale(config.gold_scale);
    const HLeporParams baseline = LookupPreset(config.baseline_preset).params;
    const TokenizeMode mode = ParseTokenize(config.tokenize);

    const Corpus corpus = LoadCorpus(config, {*config.gold}, err);
    const auto columns = corpus.GoldColumns();
    if (std::find(columns.begin(), columns.end(), *config.gold) ==
        columns.end()) {
      throw DataError("gold column '" + *config.gold + "' not found in '" +
                      config.input + "'");
    }

    std::uint64_t seed = 0;
    if (config.seed) {
      seed = *config.seed;
    } else {
      seed = GenerateSeed();
      err << "cushlepor: seed = " << seed << "\n";
    }

    Corpus train = corpus;
    Corpus heldout;
    if (config.split_holdout) {
      CorpusSplit split = SplitBySegmentHash(corpus, config.holdout_fraction);
      train = std::move(split.train);
      heldout = std::move(split.heldout);
    }
    const CorpusObjective objective(train, *config.gold, scale, config.space.n,
                                    mode);

    TuneOptions options;
    options.record_timing = config.record_timing;
    options.threads = config.threads;
    TuneResult result;
    if (config.tuner == "tpe") {
      TpeConfig tpe = config.tpe;
      tpe.seed = seed;
      result = TuneTpe(std::cref(objective), config.space, tpe, options);
    } else {
      result = TuneRandom(std::cref(objective), config.space, config.tpe.budget,
                          seed, options);
    }

    const double baseline_train = objective(baseline);
    std::optional<double> baseline_heldout;
    std::optional<double> tuned_heldout;
    bool heldout_has_gold = false;
    for (const auto& r : heldout.records) {
      if (r.gold.count(*config.gold) != 0) heldout_has_gold = true;
    }
    if (heldout_has_gold) {
      const CorpusObjective held(heldout, *config.gold, scale, config.space.n,
                                 mode);
      baseline_heldout = held(baseline);
      tuned_heldout = held(result.best.params);
    }

    const fs::path dir(config.out.empty() ? "cushlepor-tune" : config.out);
    EnsureDirectory(dir);
    const std::string sha = CorpusSha256(corpus);
    ExportParams(result.best,
                 {seed, config.tpe.budget, *config.gold, sha},
                 dir / "best.preset");
    WriteTrialLog(result.trials, dir / "trials.jsonl");

    auto optional_json = [](const std::optional<double>& v) {
      return v ? ordered_json(*v) : ordered_json();
    };
    ordered_json summary;
    summary["tuner"] = config.tuner;
    summary["budget"] = config.tpe.budget;
    summary["seed"] = seed;
    if (config.tuner == "tpe") {
      summary["tpe"] = {{"n_startup", config.tpe.n_startup},
                        {"gamma", config.tpe.gamma},
                        {"n_candidates", config.tpe.n_candidates},
                        {"prior_weight", config.tpe.prior_weight}};
    }
    summary["gold_column"] = *config.gold;
    summary["gold_scale"] = {{"name", scale.name},
                             {"min", scale.min},
                             {"max", scale.max},
                             {"inverted", scale.inverted}};
    summary["corpus_sha256"] = sha;
    summary["segments_train"] = objective.segments();
    summary["segments_excluded"] = objective.excluded();
    summary["segments_heldout"] = heldout.size();
    summary["baseline"] = {{"preset", config.baseline_preset},
                           {"params", ParamsJson(baseline)},
                           {"rmse_train", baseline_train},
                           {"rmse_heldout", optional_json(baseline_heldout)}};
    summary["tuned"] = {{"best_trial", result.best.index},
                        {"params", ParamsJson(result.best.params)},
                        {"rmse_train", result.best.objective},
                        {"rmse_heldout", optional_json(tuned_heldout)}};
    summary["version"] = std::string(kVersion);
    {
      std::ofstream file(dir / "summary.json", std::ios::binary | std::ios::trunc);
      if (!file || !(file << summary.dump(2) << "\n") || !file.flush()) {
        throw IoError("cannot write '" + (dir / "summary.json").string() + "'");
      }
    }

    if (config.verbose) {
      double running = result.trials.front().objective;
      for (const Trial& t : result.trials) {
        running = std::min(running, t.objective);
        err << "cushlepor: trial " << t.index << " rmse="
            << FormatReal(t.objective) << " best=" << FormatReal(running)
            << "\n";
      }
    }
    if (!config.quiet) {
      auto held_text = [](const std::optional<double>& v) {
        return v ? "  heldout RMSE " + FormatReal(*v) : std::string();
      };
      out << "baseline " << config.baseline_preset << " "
          << ToString(baseline) << "\n  train RMSE "
          << FormatReal(baseline_train) << held_text(baseline_heldout) << "\n";
      out << "tuned (" << config.tuner << ", " << config.tpe.budget
          << " trials, seed " << seed << ") " << ToString(result.best.params)
          << "\n  train RMSE " << FormatReal(result.best.objective)
          << held_text(tuned_heldout) << "\n";
      out << "wrote " << (dir / "best.preset").string() << ", "
          << (dir / "trials.jsonl").string() << ", "
          << (dir / "summary.json").string() << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int CmdPresets(const RunConfig& /*config*/, std::ostream& out,
               std::ostream& err) {
  return Guarded(err, [&] {
    out << std::left << std::setw(22) << "preset" << std::setw(7) << "alpha"
        << std::setw(7) << "beta" << std::setw(3) << "n" << std::setw(11)
        << "weight_elp" << std::setw(11) << "weight_pos" << std::setw(10)
        << "weight_pr"
        << "provenance\n";
    for (const Preset& p : BuiltinPresets()) {
      out << std::left << std::setw(22) << PresetName(p) << std::setw(7)
          << FormatReal(p.params.alpha) << std::setw(7)
          << FormatReal(p.params.beta) << std::setw(3) << p.params.n
          << std::setw(11) << FormatReal(p.params.weight_elp) << std::setw(11)
          << FormatReal(p.params.weight_pos) << std::setw(10)
          << FormatReal(p.params.weight_pr) << p.provenance << "\n";
    }
    out << BuiltinPresets().size() << " presets\n";
    return static_cast<int>(kExitOk);
  });
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"hLEPOR scoring and automatic parameter tuning", "cushlepor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig config;
  std::string config_file;
  std::string real_range;
  std::string n_range;

  auto* score = app.add_subcommand("score", "Score a corpus and write a report");
  auto* report = app.add_subcommand(
      "report", "Score a corpus and report agreement with a gold column");
  auto* tune = app.add_subcommand(
      "tune", "Tune the six parameters against a gold column");
  auto* presets = app.add_subcommand("presets", "List the built-in presets");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--config", config_file,
                    "Flat key = value file; command-line flags win");
    sub->add_option("--input", config.input, "Corpus file (TSV or JSONL)");
    sub->add_option("--format", config.format, "tsv or jsonl (default: by extension)");
    sub->add_option("--columns", config.columns,
                    "Column map, e.g. hypothesis=target,reference=ref");
    sub->add_flag("--strict", config.strict,
                  "Fail on any invalid row instead of skipping it");
    sub->add_option("--tokenize", config.tokenize, "standard or whitespace");
    sub->add_option("--threads", config.threads, "Worker threads");
    sub->add_option("--gold", config.gold, "Gold score column");
    sub->add_option("--gold-scale", config.gold_scale,
                    "psqm, unit, mqm or LOW:HIGH[:inverted]");
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--out", config.out, "Output path");
    sub->add_flag("--quiet", config.quiet, "Only print errors");
    sub->add_flag("--verbose", config.verbose, "Print more progress detail");
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--preset", config.preset,
                    "Built-in preset, e.g. en-de or en-de:cushlepor_lm");
    sub->add_option("--params-file", config.params_file, "Preset file");
    sub->add_option("--alpha", config.alpha);
    sub->add_option("--beta", config.beta);
    sub->add_option("--n", config.n);
    sub->add_option("--weight-elp", config.weight_elp);
    sub->add_option("--weight-pos", config.weight_pos);
    sub->add_option("--weight-pr", config.weight_pr);
    sub->add_option("--report-format", config.report_format, "json or csv");
  };

  add_input(score);
  add_params(score);
  add_input(report);
  add_params(report);
  report->add_option("--compare-column", config.compare_columns,
                     "External metric column to compare against the gold");
  add_input(tune);
  tune->add_option("--tuner", config.tuner, "tpe or random");
  tune->add_option("--budget", config.tpe.budget, "Number of trials");
  tune->add_option("--gamma", config.tpe.gamma, "Good-set quantile");
  tune->add_option("--n-startup", config.tpe.n_startup, "Random warmup trials");
  tune->add_option("--n-candidates", config.tpe.n_candidates,
                   "Candidates drawn per TPE step");
  tune->add_option("--prior-weight", config.tpe.prior_weight,
                   "Weight of the uniform prior component");
  tune->add_flag("--split-holdout", config.split_holdout,
                 "Hold out segments (by seg_id hash) and report their RMSE");
  tune->add_option("--holdout-fraction", config.holdout_fraction);
  tune->add_option("--baseline-preset", config.baseline_preset,
                   "Preset compared against the tuned parameters");
  tune->add_flag("--record-timing", config.record_timing,
                 "Record wall time per trial (logs stop being reproducible)");
  tune->add_option("--space-real", real_range,
                   "LOW:HIGH bounds for the five real parameters");
  tune->add_option("--space-n", n_range, "LOW:HIGH bounds for n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    Diagnose(err, "usage", e.what());
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  const int config_status = Guarded(err, [&] {
    if (config_file.empty()) return static_cast<int>(kExitOk);
    KeyValueMap entries;
    try {
      entries = ReadKeyValueFile(config_file);
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
    for (const auto& [key, value] : entries) {
      std::string name = "--" + key;
      std::replace(name.begin(), name.end(), '_', '-');
      CLI::Option* opt = active->get_option_no_throw(name);
      if (opt == nullptr || name == "--config") {
        throw UsageError(config_file + ": unknown key '" + key + "' for " +
                         active->get_name());
      }
      if (opt->count() > 0) continue;
      try {
        opt->add_result(value);
        opt->run_callback();
      } catch (const CLI::Error& e) {
        throw UsageError(config_file + ": " + key + ": " + e.what());
      }
    }
    return static_cast<int>(kExitOk);
  });
  if (config_status != kExitOk) return config_status;

  const int range_status = Guarded(err, [&] {
    if (!real_range.empty()) {
      const RealRange r = ParseRealRange(real_range, "--space-real");
      for (const RealDimension& dim : kRealDimensions) config.space.*dim.range = r;
    }
    if (!n_range.empty()) config.space.n = ParseIntRange(n_range, "--space-n");
    return static_cast<int>(kExitOk);
  });
  if (range_status != kExitOk) return range_status;

  if (active == score) return CmdScore(config, out, err);
  if (active == report) return CmdReport(config, out, err);
  if (active == tune) return CmdTune(config, out, err);
  if (active == presets) return CmdPresets(config, out, err);
  Diagnose(err, "usage", "unknown subcommand");
  return kExitUsage;
}

}  // namespace cushlepor::cli
