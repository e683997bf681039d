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

#include "roleaug/evalkit.h"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "roleaug/error.h"
#include "roleaug/parallel.h"
#include "roleaug/roles.h"

namespace roleaug {

NbModel::NbModel(std::vector<std::string> vocabulary, Eigen::VectorXd log_prior,
                 Eigen::MatrixXd log_likelihood, double beta)
    : vocabulary_(std::move(vocabulary)),
      log_prior_(std::move(log_prior)),
      log_likelihood_(std::move(log_likelihood)),
      beta_(beta) {
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) index_.emplace(vocabulary_[i], i);
}

std::optional<std::size_t> NbModel::IndexOf(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BowVector NbModel::Bow(const Document& doc) const {
  BowVector bow;
  for (const auto& token : doc.tokens) {
    if (token.is_word() && index_.contains(token.normalized)) ++bow[token.normalized];
  }
  return bow;
}

Eigen::VectorXd NbModel::Scores(const Document& doc) const {
  Eigen::VectorXd scores = log_prior_;
  for (const auto& [word, count] : Bow(doc)) {
    const auto row = static_cast<Eigen::Index>(index_.at(word));
    scores += static_cast<double>(count) * log_likelihood_.row(row).transpose();
  }
  return scores;
}

NbModel TrainNaiveBayes(const LabeledCorpus& train, double beta) {
  if (!(beta > 0.0)) throw UsageError("naive Bayes smoothing must be positive");
  const std::size_t k = train.num_classes();
  std::vector<std::size_t> docs_per_class(k, 0);
  for (const auto& doc : train.documents()) ++docs_per_class[doc.label];
  for (ClassId y = 0; y < k; ++y) {
    if (docs_per_class[y] == 0) {
      throw DataError("class '" + train.labels()[y].name + "' has no training documents");
    }
  }
  const ClassCounts counts = ComputeClassCounts(train, 1.0);
  std::vector<std::string> vocabulary(train.vocabulary().begin(),
                                      train.vocabulary().end());
  const auto v = static_cast<Eigen::Index>(vocabulary.size());
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::VectorXd log_prior(kk);
  Eigen::MatrixXd log_likelihood(v, kk);
  const double total_docs = static_cast<double>(train.documents().size());
  for (ClassId y = 0; y < k; ++y) {
    const auto col = static_cast<Eigen::Index>(y);
    log_prior(col) = std::log(static_cast<double>(docs_per_class[y]) / total_docs);
    const double denominator =
        static_cast<double>(counts.total(y)) + beta * static_cast<double>(v);
    for (Eigen::Index w = 0; w < v; ++w) {
      const double count = static_cast<double>(
          counts.count(vocabulary[static_cast<std::size_t>(w)], y));
      log_likelihood(w, col) = std::log((count + beta) / denominator);
    }
  }
  return NbModel(std::move(vocabulary), std::move(log_prior),
                 std::move(log_likelihood), beta);
}

ClassId Predict(const NbModel& model, const Document& doc) {
  const Eigen::VectorXd scores = model.Scores(doc);
  ClassId best = 0;
  for (Eigen::Index y = 1; y < scores.size(); ++y) {
    if (scores(y) > scores(static_cast<Eigen::Index>(best))) best = static_cast<ClassId>(y);
  }
  return best;
}

double Evaluate(const NbModel& model, const LabeledCorpus& test) {
  if (test.documents().empty()) throw DataError("empty test set");
  std::size_t correct = 0;
  for (const auto& doc : test.documents()) {
    if (Predict(model, doc) == doc.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.documents().size());
}

const ExperimentSummary* ExperimentReport::Find(const std::string& config) const {
  for (const auto& summary : summaries) {
    if (summary.config == config) return &summary;
  }
  return nullptr;
}

std::string ExperimentReport::Csv() const {
  std::string out = "config,seed,accuracy\n";
  for (const auto& row : rows) {
    out += fmt::format("{},{},{:.6f}\n", row.config, row.seed, row.accuracy);
  }
  return out;
}

std::string ExperimentReport::SummaryTable() const {
  std::size_t width = 6;
  for (const auto& s : summaries) width = std::max(width, s.config.size());
  std::string out = fmt::format("{:<{}}  {:>8}  {:>8}  {:>4}\n", "config", width,
                                "mean", "std", "runs");
  for (const auto& s : summaries) {
    out += fmt::format("{:<{}}  {:>8.4f}  {:>8.4f}  {:>4}\n", s.config, width, s.mean,
                       s.stddev, s.runs);
  }
  return out;
}

namespace {

LabeledCorpus WithSamples(const LabeledCorpus& train,
                          const std::vector<AugmentedDoc>& samples) {
  LabeledCorpus expanded = train;
  for (const auto& sample : samples) {
    expanded.AddDocument(
        fmt::format("{}:{}:{}", sample.source_id, OperationName(sample.op),
                    sample.copy_index),
        sample.new_text, sample.label);
  }
  return expanded;
}

ExperimentSummary Summarize(const std::string& config, std::span<const double> values) {
  ExperimentSummary summary{config, 0.0, 0.0, values.size()};
  for (double v : values) summary.mean += v;
  summary.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double sum = 0.0;
    for (double v : values) sum += (v - summary.mean) * (v - summary.mean);
    summary.stddev = std::sqrt(sum / static_cast<double>(values.size() - 1));
  }
  return summary;
}

}  // namespace

ExperimentReport RunExperiment(const LabeledCorpus& train, const LabeledCorpus& test,
                               const EmbeddingTable& table,
                               std::span<const AugmentConfig> configs,
                               std::span<const std::uint64_t> seeds,
                               const ExperimentOptions& options) {
  if (seeds.empty()) throw UsageError("at least one seed is required");
  if (train.LabelNames() != test.LabelNames()) {
    throw DataError("train and test label sets differ");
  }
  for (const auto& config : configs) config.Validate();

  ExperimentReport report;
  report.seeds.assign(seeds.begin(), seeds.end());

  const double baseline = Evaluate(TrainNaiveBayes(train, options.beta), test);
  std::vector<double> baseline_values(seeds.size(), baseline);
  for (auto seed : seeds) report.rows.push_back({kNonAugConfig, seed, baseline});
  report.summaries.push_back(Summarize(kNonAugConfig, baseline_values));
  if (configs.empty()) return report;

  const ScoreTable scores = BuildScoreTable(train, table, options.alpha);
  const std::size_t runs = configs.size() * seeds.size();
  std::vector<double> accuracy(runs);
  ParallelFor(runs, options.workers, [&](std::size_t r) {
    AugmentConfig config = configs[r / seeds.size()];
    config.master_seed = seeds[r % seeds.size()];
    auto samples = AugmentCorpus(train, scores, table, config, 1);
    accuracy[r] = Evaluate(TrainNaiveBayes(WithSamples(train, samples), options.beta), test);
  });

  std::set<std::string> seen{kNonAugConfig};
  for (std::size_t c = 0; c < configs.size(); ++c) {
    std::string name = DescribeConfig(configs[c]);
    if (!seen.insert(name).second) throw UsageError("duplicate configuration " + name);
    std::span<const double> values(accuracy.data() + c * seeds.size(), seeds.size());
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      report.rows.push_back({name, seeds[s], values[s]});
    }
    report.summaries.push_back(Summarize(name, values));
  }
  return report;
}

}  // namespace roleaug
