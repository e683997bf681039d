//
// Copyright 2026 The roleaug Authors
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
//

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "roleaug/augment.h"
#include "roleaug/corpus.h"
#include "roleaug/embeddings.h"
#include "roleaug/error.h"
#include "roleaug/evalkit.h"
#include "roleaug/roles.h"

#ifndef ROLEAUG_VERSION
#define ROLEAUG_VERSION "dev"
#endif

namespace roleaug::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string format = "auto";
  std::string text_field = "text";
  std::string label_field = "label";
  std::string embeddings;
  std::vector<std::string> label_descriptions;  // "label=description"
  std::string strategy = "global";
  std::string criterion_mode = "both";
  double alpha = 1.0;
  double beta = 1.0;
  double strength = 0.10;
  std::vector<double> strength_grid{kStrengthGrid.begin(), kStrengthGrid.end()};
  double trivial_keep_prob = 0.5;
  std::size_t neighbor_k = 5;
  std::size_t copies_per_op = 1;
  std::vector<std::string> ops{"selective_replacement", "selective_insertion",
                               "selective_deletion", "positive_selection"};
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  std::string output;
  // roles
  bool doc_roles = false;
  std::size_t top = 0;
  // augment
  bool include_originals = false;
  // eval
  std::string test;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<std::string> configs{"sta"};
};

void RequireFile(const std::string& path, std::string_view what) {
  if (path.empty()) throw UsageError(fmt::format("no {} given", what));
  if (!fs::is_regular_file(path)) {
    throw IoError(fmt::format("{} not found: {}", what, path));
  }
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

LabeledCorpus LoadInput(const RunConfig& config, const std::string& path,
                        const std::vector<std::string>* label_names = nullptr) {
  RequireFile(path, "corpus file");
  const CorpusFormat format = config.format == "auto" ? GuessCorpusFormat(path)
                                                      : ParseCorpusFormat(config.format);
  auto records = ReadRecords(path, format, config.text_field, config.label_field);
  LabeledCorpus corpus = label_names ? LabeledCorpus::FromRecords(records, *label_names)
                                     : LabeledCorpus::FromRecords(records);
  std::map<std::string, std::string> descriptions;
  for (const auto& entry : config.label_descriptions) {
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("label description must look like label=text: " + entry);
    }
    descriptions[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  corpus.SetDescriptions(descriptions);
  return corpus;
}

EmbeddingTable LoadTable(const RunConfig& config) {
  if (config.embeddings.empty()) {
    throw UsageError("no embedding file given (--embeddings or ROLEAUG_EMBEDDINGS)");
  }
  RequireFile(config.embeddings, "embedding file");
  std::vector<std::string> warnings;
  EmbeddingTable table = LoadEmbeddings(config.embeddings, &warnings);
  for (const auto& warning : warnings) spdlog::warn("{}", warning);
  return table;
}

AugmentConfig MakeAugmentConfig(const RunConfig& config, double strength) {
  AugmentConfig augment;
  augment.strength = strength;
  augment.neighbor_k = config.neighbor_k;
  augment.trivial_keep_prob = config.trivial_keep_prob;
  augment.copies_per_op = config.copies_per_op;
  augment.enabled_ops.clear();
  for (const auto& name : config.ops) augment.enabled_ops.push_back(ParseOperation(name));
  augment.master_seed = config.master_seed;
  augment.strategy = ParseStrategy(config.strategy);
  augment.criterion_mode = ParseCriterionMode(config.criterion_mode);
  augment.Validate();
  return augment;
}

// "sta", "eda" or op names joined with '+'.
std::vector<Operation> ParseOpSet(const std::string& name) {
  if (name == "sta") return {kSelectiveOperations.begin(), kSelectiveOperations.end()};
  if (name == "eda") return {kRandomOperations.begin(), kRandomOperations.end()};
  std::vector<Operation> ops;
  std::stringstream parts(name);
  std::string part;
  while (std::getline(parts, part, '+')) ops.push_back(ParseOperation(part));
  if (ops.empty()) throw UsageError("empty operation set");
  return ops;
}

std::string DocRolesJsonl(const LabeledCorpus& corpus, const ScoreTable& scores,
                          const RunConfig& config) {
  const Strategy strategy = ParseStrategy(config.strategy);
  const CriterionMode mode = ParseCriterionMode(config.criterion_mode);
  std::vector<Thresholds> global;
  if (strategy == Strategy::kGlobal) global = ComputeGlobalThresholds(scores);
  std::string out;
  for (const auto& doc : corpus.documents()) {
    nlohmann::ordered_json line;
    line["id"] = doc.id;
    line["label"] = corpus.labels()[doc.label].name;
    line["strategy"] = StrategyName(strategy);
    try {
      const DocRoles roles = AssignRoles(doc, scores, global, strategy, mode);
      auto tokens = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        tokens.push_back({doc.tokens[i].surface, RoleName(roles.roles[i])});
      }
      line["tokens"] = std::move(tokens);
    } catch (const DataError& e) {
      line["error"] = e.what();
    }
    out += line.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
  }
  return out;
}

// Resolved options of the subcommand that ran, as a config file that
// reproduces the run: roleaug --config <manifest> <subcommand>
std::string Manifest(const CLI::App& sub) {
  return fmt::format("# roleaug {} run manifest\ntool_version=\"{}\"\n[{}]\n{}",
                     ROLEAUG_VERSION, ROLEAUG_VERSION, sub.get_name(),
                     sub.config_to_str(true, false));
}

void RunRoles(const CLI::App& sub, const RunConfig& config, std::ostream& out) {
  LabeledCorpus corpus = LoadInput(config, config.input);
  EmbeddingTable table = LoadTable(config);
  const ScoreTable scores = BuildScoreTable(corpus, table, config.alpha);
  const auto thresholds = ComputeGlobalThresholds(scores);
  const auto report = BuildRoleReport(corpus, scores, thresholds,
                                      ParseCriterionMode(config.criterion_mode));
  const std::string prefix = config.output.empty() ? "roles" : config.output;
  WriteFile(prefix + ".csv", RoleReportCsv(report));
  const std::string text = RoleReportText(report, config.top);
  WriteFile(prefix + ".txt", text);
  if (config.doc_roles || config.strategy == "local") {
    WriteFile(prefix + ".doc_roles.jsonl", DocRolesJsonl(corpus, scores, config));
  }
  WriteFile(prefix + ".manifest", Manifest(sub));
  out << text;
}

void RunAugment(const CLI::App& sub, const RunConfig& config, std::ostream& out) {
  const AugmentConfig augment = MakeAugmentConfig(config, config.strength);
  LabeledCorpus corpus = LoadInput(config, config.input);
  EmbeddingTable table = LoadTable(config);
  const ScoreTable scores = BuildScoreTable(corpus, table, config.alpha);
  const auto samples = AugmentCorpus(corpus, scores, table, augment, config.workers);
  const std::string path = config.output.empty() ? "augmented.jsonl" : config.output;
  WriteFile(path, AugmentedJsonl(corpus, samples, config.include_originals));
  WriteFile(path + ".manifest", Manifest(sub));
  std::map<std::string_view, std::size_t> per_op;
  std::size_t warned = 0;
  for (const auto& sample : samples) {
    ++per_op[OperationName(sample.op)];
    if (!sample.warning.empty()) ++warned;
  }
  out << fmt::format("{} documents -> {} augmented samples ({} with warnings) in {}\n",
                     corpus.documents().size(), samples.size(), warned, path);
  for (const auto& [op, count] : per_op) out << fmt::format("  {:<22} {}\n", op, count);
}

void RunEval(const CLI::App& sub, const RunConfig& config, std::ostream& out) {
  LabeledCorpus train = LoadInput(config, config.input);
  const auto names = train.LabelNames();
  LabeledCorpus test = LoadInput(config, config.test, &names);
  EmbeddingTable table = LoadTable(config);
  std::vector<AugmentConfig> configs;
  for (const auto& name : config.configs) {
    if (name == "none") continue;
    for (double strength : config.strength_grid) {
      AugmentConfig augment = MakeAugmentConfig(config, strength);
      augment.enabled_ops = ParseOpSet(name);
      configs.push_back(augment);
    }
  }
  ExperimentOptions options;
  options.alpha = config.alpha;
  options.beta = config.beta;
  options.workers = config.workers;
  const auto report = RunExperiment(train, test, table, configs, config.seeds, options);
  const std::string path = config.output.empty() ? "report.csv" : config.output;
  WriteFile(path, report.Csv());
  WriteFile(path + ".manifest", Manifest(sub));
  out << report.SummaryTable();
}

void AddCommonOptions(CLI::App& sub, RunConfig& config) {
  sub.add_option("-i,--input", config.input, "Labeled corpus (JSONL or CSV)")->required();
  sub.add_option("--format", config.format, "Corpus format")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
      ->capture_default_str();
  sub.add_option("--text-field", config.text_field, "Text field / column name")
      ->capture_default_str();
  sub.add_option("--label-field", config.label_field, "Label field / column name")
      ->capture_default_str();
  sub.add_option("-e,--embeddings", config.embeddings,
                 "Word vector file (plain text, optionally .gz)")
      ->envname("ROLEAUG_EMBEDDINGS");
  sub.add_option("--label-desc", config.label_descriptions,
                 "Label description used for the label vector, as label=text "
                 "(repeatable; default is the label name)");
  sub.add_option("--strategy", config.strategy, "Role thresholds: global or local")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  sub.add_option("--criterion", config.criterion_mode,
                 "Role criteria: both, correlation_only or similarity_only")
      ->check(CLI::IsMember({"both", "correlation_only", "similarity_only"}))
      ->capture_default_str();
  sub.add_option("--alpha", config.alpha, "WLLR additive smoothing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("-w,--workers", config.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("-o,--output", config.output, "Output path (prefix for roles)");
}

void AddAugmentOptions(CLI::App& sub, RunConfig& config, bool single_strength) {
  if (single_strength) {
    sub.add_option("-p,--strength", config.strength, "Fraction of words edited, (0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  } else {
    sub.add_option("-p,--strength", config.strength_grid,
                   "Strength grid; each value yields one configuration")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }
  sub.add_option("-q,--keep-prob", config.trivial_keep_prob,
                 "Positive selection: probability of keeping each trivial word / punctuation")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub.add_option("-k,--neighbors", config.neighbor_k, "Synonym candidates per word")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--copies", config.copies_per_op, "Samples per operation per document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--ops", config.ops, "Enabled operations (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"selective_replacement", "selective_insertion",
                             "selective_deletion", "positive_selection",
                             "random_replacement", "random_insertion",
                             "random_deletion", "random_swap"}))
      ->capture_default_str();
}

int ExitCode(ErrorKind kind) { return static_cast<int>(kind); }

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Role-aware selective text augmentation", "roleaug"};
  app.set_version_flag("--version", ROLEAUG_VERSION);
  app.set_config("--config", "", "Flat key=value config file ([subcommand] sections)");
  app.require_subcommand(1);

  CLI::App* roles = app.add_subcommand("roles", "Word role report per class");
  AddCommonOptions(*roles, config);
  roles->add_flag("--doc-roles", config.doc_roles,
                  "Also write per-document token roles (always on with --strategy local)");
  roles->add_option("--top", config.top, "Words per role in the text report (0 = all)")
      ->capture_default_str();

  CLI::App* augment = app.add_subcommand("augment", "Write augmented samples as JSONL");
  AddCommonOptions(*augment, config);
  AddAugmentOptions(*augment, config, true);
  augment->add_option("-s,--seed", config.master_seed, "Master seed")->capture_default_str();
  augment->add_flag("--include-originals", config.include_originals,
                    "Write each source document before its samples (op \"original\")");

  CLI::App* eval = app.add_subcommand("eval", "Naive Bayes comparison of augmentation configs");
  AddCommonOptions(*eval, config);
  AddAugmentOptions(*eval, config, false);
  eval->add_option("-t,--test", config.test, "Test corpus (same label set)")->required();
  eval->add_option("--seeds", config.seeds, "Seeds, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--configs", config.configs,
                   "Operation sets: sta, eda, none or op names joined with '+'")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--beta", config.beta, "Naive Bayes additive smoothing")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : ExitCode(ErrorKind::kUsage);
  }

  try {
    if (roles->parsed()) RunRoles(*roles, config, out);
    if (augment->parsed()) RunAugment(*augment, config, out);
    if (eval->parsed()) RunEval(*eval, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode(ErrorKind::kData);
  }
  return 0;
}

}  // namespace roleaug::cli
