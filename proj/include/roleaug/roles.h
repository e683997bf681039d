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

#ifndef ROLEAUG_ROLES_H_
#define ROLEAUG_ROLES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "roleaug/corpus.h"
#include "roleaug/embeddings.h"

namespace roleaug {

enum class Role { kGold, kVenture, kBonus, kTrivial, kUnassigned };
enum class Strategy { kGlobal, kLocal };
// Which axes take part in role assignment. The single-axis modes treat the
// other axis as uniformly high.
enum class CriterionMode { kBoth, kCorrelationOnly, kSimilarityOnly };
enum class Level { kHigh, kMid, kLow };

inline constexpr std::array<Role, 4> kRoles = {Role::kGold, Role::kVenture,
                                               Role::kBonus, Role::kTrivial};

std::string_view RoleName(Role role);
std::string_view StrategyName(Strategy strategy);
std::string_view CriterionModeName(CriterionMode mode);
Strategy ParseStrategy(std::string_view name);
CriterionMode ParseCriterionMode(std::string_view name);

// Weighted log-likelihood ratio p(w|y) * ln(p(w|y) / p(w|not y)) with
// additive smoothing: p(w|y) = (count(w,y) + a) / (N_y + a|V|), and the
// complement pooled over every other class.
double WllrScore(const std::string& word, ClassId y, const ClassCounts& counts);

// Cosine between the word's vector and the label vector; nullopt when the
// word has no vector.
std::optional<double> SimilarityScore(std::string_view word,
                                      const EmbeddingTable& table,
                                      const Vector& label_vector);

// Per-class (wllr, similarity) for every vocabulary word.
class ScoreTable {
 public:
  ScoreTable(std::vector<std::string> words, Eigen::MatrixXd wllr,
             Eigen::MatrixXd similarity, std::vector<bool> oov);

  std::size_t size() const { return words_.size(); }
  std::size_t num_classes() const { return static_cast<std::size_t>(wllr_.cols()); }
  const std::vector<std::string>& words() const { return words_; }
  std::optional<std::size_t> IndexOf(const std::string& word) const;

  double wllr(std::size_t word, ClassId y) const;
  std::optional<double> similarity(std::size_t word, ClassId y) const;
  bool oov(std::size_t word) const { return oov_.at(word); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  Eigen::MatrixXd wllr_;        // words x classes
  Eigen::MatrixXd similarity_;  // words x classes, unused where oov
  std::vector<bool> oov_;
};

// Every class needs at least one document and a resolvable label vector.
ScoreTable BuildScoreTable(const LabeledCorpus& corpus, const EmbeddingTable& table,
                           double alpha = 1.0);

struct Thresholds {
  double wllr_high = 0.0;
  double wllr_low = 0.0;
  double sim_high = 0.0;
  double sim_low = 0.0;
  Strategy strategy = Strategy::kGlobal;
};

// Value at 1-based rank ceil(q * m) of the ascending sort.
double NearestRankQuantile(std::vector<double> values, double q);
// Mean of the two middle values for even sizes.
double Median(std::vector<double> values);

// Upper / lower quartiles over the class' vocabulary scores. OOV words are
// left out of the similarity distribution.
Thresholds ComputeGlobalThresholds(const ScoreTable& scores, ClassId y);
std::vector<Thresholds> ComputeGlobalThresholds(const ScoreTable& scores);

// Medians over the document's distinct scored words, for the document's
// class. high == low == median, so classification is a two-way split.
Thresholds ComputeLocalThresholds(const Document& doc, const ScoreTable& scores);

// High wins over low when both tests pass.
Level ClassifyScore(double score, double high, double low);
Role CombineLevels(Level correlation, Level similarity);

struct DocRoles {
  std::string doc_id;
  std::vector<Role> roles;  // parallel to Document::tokens
  CriterionMode mode = CriterionMode::kBoth;
};

// Non-word tokens and words missing from the score table stay unassigned.
DocRoles AssignRoles(const Document& doc, const ScoreTable& scores,
                     const Thresholds& thresholds,
                     CriterionMode mode = CriterionMode::kBoth);

// Picks the document's class thresholds from `global` or computes local ones.
DocRoles AssignRoles(const Document& doc, const ScoreTable& scores,
                     std::span<const Thresholds> global, Strategy strategy,
                     CriterionMode mode = CriterionMode::kBoth);

struct RoleReportEntry {
  std::string word;
  double wllr = 0.0;
  std::optional<double> similarity;
};

struct ClassRoleReport {
  ClassId id = 0;
  std::string name;
  // Indexed by Role (Gold, Venture, Bonus, Trivial).
  std::array<std::vector<RoleReportEntry>, 4> lists;
};

// Words occurring in each class, grouped by role under the class thresholds.
// Gold and Venture sort by descending wllr, Bonus by descending similarity,
// Trivial by ascending wllr; ties by word.
std::vector<ClassRoleReport> BuildRoleReport(const LabeledCorpus& corpus,
                                             const ScoreTable& scores,
                                             std::span<const Thresholds> thresholds,
                                             CriterionMode mode = CriterionMode::kBoth);

// class,role,word,wllr,sim with a header row; empty sim for OOV words.
std::string RoleReportCsv(const std::vector<ClassRoleReport>& report);
// One block per class; `max_words` 0 prints every word.
std::string RoleReportText(const std::vector<ClassRoleReport>& report,
                           std::size_t max_words = 0);

}  // namespace roleaug

#endif  // ROLEAUG_ROLES_H_
