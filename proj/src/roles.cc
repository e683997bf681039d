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

#include "roleaug/roles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "roleaug/error.h"

namespace roleaug {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kGold:
      return "gold";
    case Role::kVenture:
      return "venture";
    case Role::kBonus:
      return "bonus";
    case Role::kTrivial:
      return "trivial";
    case Role::kUnassigned:
      return "unassigned";
  }
  return "unassigned";
}

std::string_view StrategyName(Strategy strategy) {
  return strategy == Strategy::kGlobal ? "global" : "local";
}

std::string_view CriterionModeName(CriterionMode mode) {
  switch (mode) {
    case CriterionMode::kBoth:
      return "both";
    case CriterionMode::kCorrelationOnly:
      return "correlation_only";
    case CriterionMode::kSimilarityOnly:
      return "similarity_only";
  }
  return "both";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "global") return Strategy::kGlobal;
  if (name == "local") return Strategy::kLocal;
  throw UsageError("unknown strategy '" + std::string(name) + "'");
}

CriterionMode ParseCriterionMode(std::string_view name) {
  if (name == "both") return CriterionMode::kBoth;
  if (name == "correlation_only") return CriterionMode::kCorrelationOnly;
  if (name == "similarity_only") return CriterionMode::kSimilarityOnly;
  throw UsageError("unknown criterion mode '" + std::string(name) + "'");
}

double WllrScore(const std::string& word, ClassId y, const ClassCounts& counts) {
  if (y >= counts.num_classes()) throw DataError("unknown class id");
  if (!counts.contains(word)) throw DataError("word not in vocabulary: " + word);
  const double alpha = counts.alpha();
  const double smoothing = alpha * static_cast<double>(counts.vocab_size());
  std::int64_t in_class = 0;
  std::int64_t elsewhere = 0;
  std::int64_t total_in = 0;
  std::int64_t total_elsewhere = 0;
  const auto& per_class = counts.table().at(word);
  for (ClassId c = 0; c < counts.num_classes(); ++c) {
    if (c == y) {
      in_class = per_class[c];
      total_in = counts.total(c);
    } else {
      elsewhere += per_class[c];
      total_elsewhere += counts.total(c);
    }
  }
  const double p = (static_cast<double>(in_class) + alpha) /
                   (static_cast<double>(total_in) + smoothing);
  const double q = (static_cast<double>(elsewhere) + alpha) /
                   (static_cast<double>(total_elsewhere) + smoothing);
  return p * std::log(p / q);
}

std::optional<double> SimilarityScore(std::string_view word,
                                      const EmbeddingTable& table,
                                      const Vector& label_vector) {
  auto index = table.IndexOf(word);
  if (!index) return std::nullopt;
  return CosineSimilarity(
      table.vectors().row(static_cast<Eigen::Index>(*index)).transpose(),
      label_vector);
}

ScoreTable::ScoreTable(std::vector<std::string> words, Eigen::MatrixXd wllr,
                       Eigen::MatrixXd similarity, std::vector<bool> oov)
    : words_(std::move(words)),
      wllr_(std::move(wllr)),
      similarity_(std::move(similarity)),
      oov_(std::move(oov)) {
  const auto n = static_cast<Eigen::Index>(words_.size());
  if (wllr_.rows() != n || similarity_.rows() != n ||
      similarity_.cols() != wllr_.cols() || oov_.size() != words_.size()) {
    throw DataError("score table shape mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

std::optional<std::size_t> ScoreTable::IndexOf(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double ScoreTable::wllr(std::size_t word, ClassId y) const {
  return wllr_(static_cast<Eigen::Index>(word), static_cast<Eigen::Index>(y));
}

std::optional<double> ScoreTable::similarity(std::size_t word, ClassId y) const {
  if (oov_.at(word)) return std::nullopt;
  return similarity_(static_cast<Eigen::Index>(word), static_cast<Eigen::Index>(y));
}

ScoreTable BuildScoreTable(const LabeledCorpus& corpus, const EmbeddingTable& table,
                           double alpha) {
  const std::size_t k = corpus.num_classes();
  std::vector<std::size_t> docs_per_class(k, 0);
  for (const auto& doc : corpus.documents()) ++docs_per_class[doc.label];
  for (ClassId y = 0; y < k; ++y) {
    if (docs_per_class[y] == 0) {
      throw DataError("class '" + corpus.labels()[y].name + "' has no documents");
    }
  }
  std::vector<Vector> label_vectors;
  for (ClassId y = 0; y < k; ++y) {
    label_vectors.push_back(
        LabelVector(corpus.LabelDescription(y), table, corpus.labels()[y].name));
  }

  const ClassCounts counts = ComputeClassCounts(corpus, alpha);
  std::vector<std::string> words(corpus.vocabulary().begin(),
                                 corpus.vocabulary().end());
  const auto n = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd wllr(n, static_cast<Eigen::Index>(k));
  Eigen::MatrixXd similarity = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(k));
  std::vector<bool> oov(words.size(), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& word = words[static_cast<std::size_t>(i)];
    for (ClassId y = 0; y < k; ++y) {
      const auto col = static_cast<Eigen::Index>(y);
      wllr(i, col) = WllrScore(word, y, counts);
      auto sim = SimilarityScore(word, table, label_vectors[y]);
      if (sim) {
        similarity(i, col) = *sim;
      } else {
        oov[static_cast<std::size_t>(i)] = true;
      }
    }
  }
  return ScoreTable(std::move(words), std::move(wllr), std::move(similarity),
                    std::move(oov));
}

double NearestRankQuantile(std::vector<double> values, double q) {
  if (values.empty()) throw DataError("quantile of an empty score list");
  std::sort(values.begin(), values.end());
  const auto m = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * m));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

double Median(std::vector<double> values) {
  if (values.empty()) throw DataError("median of an empty score list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

Thresholds ComputeGlobalThresholds(const ScoreTable& scores, ClassId y) {
  std::vector<double> wllr;
  std::vector<double> sim;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    wllr.push_back(scores.wllr(i, y));
    if (auto s = scores.similarity(i, y)) sim.push_back(*s);
  }
  Thresholds t;
  t.strategy = Strategy::kGlobal;
  t.wllr_high = NearestRankQuantile(wllr, 0.75);
  t.wllr_low = NearestRankQuantile(wllr, 0.25);
  t.sim_high = NearestRankQuantile(sim, 0.75);
  t.sim_low = NearestRankQuantile(sim, 0.25);
  return t;
}

std::vector<Thresholds> ComputeGlobalThresholds(const ScoreTable& scores) {
  std::vector<Thresholds> all;
  for (ClassId y = 0; y < scores.num_classes(); ++y) {
    all.push_back(ComputeGlobalThresholds(scores, y));
  }
  return all;
}

Thresholds ComputeLocalThresholds(const Document& doc, const ScoreTable& scores) {
  std::set<std::size_t> distinct;
  for (const auto& token : doc.tokens) {
    if (!token.is_word()) continue;
    if (auto index = scores.IndexOf(token.normalized)) distinct.insert(*index);
  }
  if (distinct.empty()) {
    throw DataError("document " + doc.id + " has no scorable words");
  }
  std::vector<double> wllr;
  std::vector<double> sim;
  for (std::size_t index : distinct) {
    wllr.push_back(scores.wllr(index, doc.label));
    if (auto s = scores.similarity(index, doc.label)) sim.push_back(*s);
  }
  Thresholds t;
  t.strategy = Strategy::kLocal;
  t.wllr_high = t.wllr_low = Median(std::move(wllr));
  // Without any in-table word every similarity is OOV and therefore low.
  t.sim_high = t.sim_low =
      sim.empty() ? std::numeric_limits<double>::infinity() : Median(std::move(sim));
  return t;
}

Level ClassifyScore(double score, double high, double low) {
  if (score >= high) return Level::kHigh;
  if (score <= low) return Level::kLow;
  return Level::kMid;
}

Role CombineLevels(Level correlation, Level similarity) {
  if (correlation == Level::kMid || similarity == Level::kMid) {
    return Role::kUnassigned;
  }
  if (correlation == Level::kHigh) {
    return similarity == Level::kHigh ? Role::kGold : Role::kVenture;
  }
  return similarity == Level::kHigh ? Role::kBonus : Role::kTrivial;
}

DocRoles AssignRoles(const Document& doc, const ScoreTable& scores,
                     const Thresholds& thresholds, CriterionMode mode) {
  DocRoles result{doc.id, std::vector<Role>(doc.tokens.size(), Role::kUnassigned),
                  mode};
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& token = doc.tokens[i];
    if (!token.is_word()) continue;
    auto index = scores.IndexOf(token.normalized);
    if (!index) continue;
    Level correlation = ClassifyScore(scores.wllr(*index, doc.label),
                                      thresholds.wllr_high, thresholds.wllr_low);
    auto sim = scores.similarity(*index, doc.label);
    Level similarity = sim ? ClassifyScore(*sim, thresholds.sim_high,
                                           thresholds.sim_low)
                           : Level::kLow;
    if (mode == CriterionMode::kCorrelationOnly) similarity = Level::kHigh;
    if (mode == CriterionMode::kSimilarityOnly) correlation = Level::kHigh;
    result.roles[i] = CombineLevels(correlation, similarity);
  }
  return result;
}

DocRoles AssignRoles(const Document& doc, const ScoreTable& scores,
                     std::span<const Thresholds> global, Strategy strategy,
                     CriterionMode mode) {
  if (strategy == Strategy::kLocal) {
    return AssignRoles(doc, scores, ComputeLocalThresholds(doc, scores), mode);
  }
  return AssignRoles(doc, scores, global[doc.label], mode);
}

std::vector<ClassRoleReport> BuildRoleReport(const LabeledCorpus& corpus,
                                             const ScoreTable& scores,
                                             std::span<const Thresholds> thresholds,
                                             CriterionMode mode) {
  const ClassCounts counts = ComputeClassCounts(corpus);
  std::vector<ClassRoleReport> report;
  for (const auto& label : corpus.labels()) {
    const ClassId y = label.id;
    const Thresholds& t = thresholds[y];
    ClassRoleReport block;
    block.id = y;
    block.name = label.name;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const auto& word = scores.words()[i];
      if (!counts.contains(word) || counts.count(word, y) == 0) continue;
      const double wllr = scores.wllr(i, y);
      const auto sim = scores.similarity(i, y);
      Level correlation = ClassifyScore(wllr, t.wllr_high, t.wllr_low);
      Level similarity = sim ? ClassifyScore(*sim, t.sim_high, t.sim_low) : Level::kLow;
      if (mode == CriterionMode::kCorrelationOnly) similarity = Level::kHigh;
      if (mode == CriterionMode::kSimilarityOnly) correlation = Level::kHigh;
      const Role role = CombineLevels(correlation, similarity);
      if (role == Role::kUnassigned) continue;
      block.lists[static_cast<std::size_t>(role)].push_back({word, wllr, sim});
    }
    auto by_wllr_desc = [](const RoleReportEntry& a, const RoleReportEntry& b) {
      if (a.wllr != b.wllr) return a.wllr > b.wllr;
      return a.word < b.word;
    };
    auto by_sim_desc = [](const RoleReportEntry& a, const RoleReportEntry& b) {
      const double sa = a.similarity.value_or(-2.0);
      const double sb = b.similarity.value_or(-2.0);
      if (sa != sb) return sa > sb;
      return a.word < b.word;
    };
    auto by_wllr_asc = [](const RoleReportEntry& a, const RoleReportEntry& b) {
      if (a.wllr != b.wllr) return a.wllr < b.wllr;
      return a.word < b.word;
    };
    auto& lists = block.lists;
    std::sort(lists[0].begin(), lists[0].end(), by_wllr_desc);
    std::sort(lists[1].begin(), lists[1].end(), by_wllr_desc);
    std::sort(lists[2].begin(), lists[2].end(), by_sim_desc);
    std::sort(lists[3].begin(), lists[3].end(), by_wllr_asc);
    report.push_back(std::move(block));
  }
  return report;
}

namespace {

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string RoleReportCsv(const std::vector<ClassRoleReport>& report) {
  std::string out = "class,role,word,wllr,sim\n";
  for (const auto& block : report) {
    for (Role role : kRoles) {
      for (const auto& entry : block.lists[static_cast<std::size_t>(role)]) {
        out += fmt::format("{},{},{},{:.6f},{}\n", CsvField(block.name),
                           RoleName(role), CsvField(entry.word), entry.wllr,
                           entry.similarity ? fmt::format("{:.6f}", *entry.similarity)
                                            : std::string());
      }
    }
  }
  return out;
}

std::string RoleReportText(const std::vector<ClassRoleReport>& report,
                           std::size_t max_words) {
  static constexpr std::array<std::string_view, 4> kHeadings = {
      "Gold:    ", "Venture: ", "Bonus:   ", "Trivial: "};
  std::string out;
  for (const auto& block : report) {
    out += fmt::format("category: {}\n", block.name);
    for (Role role : kRoles) {
      const auto& list = block.lists[static_cast<std::size_t>(role)];
      out += kHeadings[static_cast<std::size_t>(role)];
      out += '[';
      const std::size_t shown =
          max_words == 0 ? list.size() : std::min(max_words, list.size());
      for (std::size_t i = 0; i < shown; ++i) {
        if (i > 0) out += ", ";
        out += fmt::format("\"{}\"", list[i].word);
      }
      if (shown < list.size()) out += ", ...";
      out += "]\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace roleaug
