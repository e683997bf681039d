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

#ifndef ROLEAUG_EVALKIT_H_
#define ROLEAUG_EVALKIT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "roleaug/augment.h"
#include "roleaug/corpus.h"
#include "roleaug/embeddings.h"

namespace roleaug {

// word -> count over the model vocabulary; unseen words are dropped.
using BowVector = std::map<std::string, int>;

// Multinomial naive Bayes with additive smoothing.
class NbModel {
 public:
  NbModel(std::vector<std::string> vocabulary, Eigen::VectorXd log_prior,
          Eigen::MatrixXd log_likelihood, double beta);

  std::size_t num_classes() const { return static_cast<std::size_t>(log_prior_.size()); }
  std::size_t vocab_size() const { return vocabulary_.size(); }
  double beta() const { return beta_; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const Eigen::VectorXd& log_prior() const { return log_prior_; }
  // vocabulary x classes
  const Eigen::MatrixXd& log_likelihood() const { return log_likelihood_; }
  std::optional<std::size_t> IndexOf(const std::string& word) const;

  BowVector Bow(const Document& doc) const;
  // Per-class log posterior up to a shared constant.
  Eigen::VectorXd Scores(const Document& doc) const;

 private:
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> index_;
  Eigen::VectorXd log_prior_;
  Eigen::MatrixXd log_likelihood_;
  double beta_;
};

// Every class needs at least one document.
NbModel TrainNaiveBayes(const LabeledCorpus& train, double beta = 1.0);

// Arg max of the posterior; ties go to the earlier label.
ClassId Predict(const NbModel& model, const Document& doc);

double Evaluate(const NbModel& model, const LabeledCorpus& test);

struct ExperimentRow {
  std::string config;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
};

struct ExperimentSummary {
  std::string config;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for one seed
  std::size_t runs = 0;
};

struct ExperimentReport {
  std::vector<std::uint64_t> seeds;
  std::vector<ExperimentRow> rows;          // config order, then seed order
  std::vector<ExperimentSummary> summaries;  // "non-aug" first

  const ExperimentSummary* Find(const std::string& config) const;
  // config,seed,accuracy with a header row.
  std::string Csv() const;
  std::string SummaryTable() const;
};

inline constexpr char kNonAugConfig[] = "non-aug";

struct ExperimentOptions {
  double alpha = 1.0;  // WLLR smoothing
  double beta = 1.0;   // naive Bayes smoothing
  std::size_t workers = 1;
};

// For each config and seed: augment the training set with master_seed =
// seed, train on originals plus samples and score on `test`. A non-aug row
// per seed is always included.
ExperimentReport RunExperiment(const LabeledCorpus& train, const LabeledCorpus& test,
                               const EmbeddingTable& table,
                               std::span<const AugmentConfig> configs,
                               std::span<const std::uint64_t> seeds,
                               const ExperimentOptions& options = {});

}  // namespace roleaug

#endif  // ROLEAUG_EVALKIT_H_
