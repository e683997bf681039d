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

#include "roleaug/augment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "roleaug/error.h"
#include "roleaug/parallel.h"
#include "roleaug/rng.h"

namespace roleaug {
namespace {

bool HasRole(const DocRoles& roles, std::size_t i,
             std::initializer_list<Role> allowed) {
  return std::find(allowed.begin(), allowed.end(), roles.roles[i]) != allowed.end();
}

std::vector<std::size_t> WordPositions(const Document& doc) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    if (doc.tokens[i].is_word()) positions.push_back(i);
  }
  return positions;
}

// Shuffled role candidates first, then shuffled unassigned words as
// supplements for when the role pool runs short.
std::vector<std::size_t> CandidateOrder(const Document& doc, const DocRoles& roles,
                                        std::initializer_list<Role> allowed,
                                        Rng& rng) {
  if (roles.roles.size() != doc.tokens.size()) {
    throw DataError("role assignment does not match document " + doc.id);
  }
  std::vector<std::size_t> primary;
  std::vector<std::size_t> supplements;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    if (!doc.tokens[i].is_word()) continue;
    if (HasRole(roles, i, allowed)) {
      primary.push_back(i);
    } else if (roles.roles[i] == Role::kUnassigned) {
      supplements.push_back(i);
    }
  }
  rng.Shuffle(std::span(primary));
  rng.Shuffle(std::span(supplements));
  primary.insert(primary.end(), supplements.begin(), supplements.end());
  return primary;
}

// Neighbours that tokenize as a single word.
std::vector<Neighbor> WordNeighbors(const std::string& word, std::size_t k,
                                    const EmbeddingTable& table) {
  if (!table.contains(word)) return {};
  auto neighbors = NearestNeighbors(word, k, table);
  std::erase_if(neighbors, [](const Neighbor& n) {
    auto tokens = Tokenize(n.word);
    return tokens.size() != 1 || !tokens[0].is_word();
  });
  return neighbors;
}

AugmentedDoc Start(const Document& doc, Operation op, const AugmentConfig& config,
                   std::size_t copy_index) {
  AugmentedDoc out;
  out.source_id = doc.id;
  out.label = doc.label;
  out.op = op;
  out.copy_index = copy_index;
  out.seed = DeriveSeed(config.master_seed, doc.id, OperationName(op), copy_index);
  out.tokens = doc.tokens;
  return out;
}

void Finish(AugmentedDoc& out) { out.new_text = Detokenize(out.tokens); }

void RequireWords(const Document& doc, std::size_t word_count) {
  if (word_count == 0) throw DataError("document " + doc.id + ": nothing to augment");
}

void NoteShortfall(AugmentedDoc& out, std::size_t done) {
  if (done < out.requested_edits) {
    out.warning = fmt::format("only {} of {} edits possible", done, out.requested_edits);
  }
}

void Replace(const Document& doc, std::span<const std::size_t> order,
             const AugmentConfig& config, const EmbeddingTable& table, Rng& rng,
             AugmentedDoc& out) {
  std::size_t done = 0;
  for (std::size_t pos : order) {
    if (done == out.requested_edits) break;
    const Token& old = doc.tokens[pos];
    auto neighbors = WordNeighbors(old.normalized, config.neighbor_k, table);
    if (neighbors.empty()) continue;
    const auto& pick = neighbors[rng.UniformIndex(neighbors.size())];
    std::string surface = InheritCapitalization(old.surface, pick.word);
    out.edits.push_back({pos, EditKind::kReplace, old.surface, surface});
    out.tokens[pos] = MakeToken(std::move(surface));
    ++done;
  }
  NoteShortfall(out, done);
}

void Insert(const Document& doc, std::span<const std::size_t> order,
            const AugmentConfig& config, const EmbeddingTable& table, Rng& rng,
            AugmentedDoc& out) {
  std::size_t done = 0;
  for (std::size_t pos : order) {
    if (done == out.requested_edits) break;
    auto neighbors =
        WordNeighbors(doc.tokens[pos].normalized, config.neighbor_k, table);
    if (neighbors.empty()) continue;
    const auto& pick = neighbors[rng.UniformIndex(neighbors.size())];
    const std::size_t gap = rng.UniformIndex(out.tokens.size() + 1);
    out.edits.push_back({gap, EditKind::kInsert, "", pick.word});
    out.tokens.insert(out.tokens.begin() + static_cast<std::ptrdiff_t>(gap),
                      MakeToken(pick.word));
    ++done;
  }
  NoteShortfall(out, done);
}

// Erases the chosen positions, highest first so logged positions stay valid.
void Erase(std::vector<std::size_t> chosen, AugmentedDoc& out) {
  std::sort(chosen.begin(), chosen.end(), std::greater<>());
  for (std::size_t pos : chosen) {
    out.edits.push_back({pos, EditKind::kDelete, out.tokens[pos].surface, ""});
    out.tokens.erase(out.tokens.begin() + static_cast<std::ptrdiff_t>(pos));
  }
}

void Delete(std::span<const std::size_t> order, AugmentedDoc& out) {
  const std::size_t take = std::min(out.requested_edits, order.size());
  Erase({order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take)}, out);
  NoteShortfall(out, take);
}

// Deletion keeps at least one word.
std::size_t DeletionCount(double strength, std::size_t word_count) {
  return std::min(EditCount(strength, word_count), word_count - 1);
}

}  // namespace

std::string_view OperationName(Operation op) {
  switch (op) {
    case Operation::kSelectiveReplacement:
      return "selective_replacement";
    case Operation::kSelectiveInsertion:
      return "selective_insertion";
    case Operation::kSelectiveDeletion:
      return "selective_deletion";
    case Operation::kPositiveSelection:
      return "positive_selection";
    case Operation::kRandomReplacement:
      return "random_replacement";
    case Operation::kRandomInsertion:
      return "random_insertion";
    case Operation::kRandomDeletion:
      return "random_deletion";
    case Operation::kRandomSwap:
      return "random_swap";
  }
  return "selective_replacement";
}

Operation ParseOperation(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Operation::kRandomSwap); ++i) {
    auto op = static_cast<Operation>(i);
    if (OperationName(op) == name) return op;
  }
  throw UsageError("unknown operation '" + std::string(name) + "'");
}

void AugmentConfig::Validate() const {
  if (!(strength > 0.0 && strength <= 1.0)) {
    throw UsageError("augmentation strength must be in (0, 1]");
  }
  if (!(trivial_keep_prob >= 0.0 && trivial_keep_prob <= 1.0)) {
    throw UsageError("trivial keep probability must be in [0, 1]");
  }
  if (neighbor_k == 0) throw UsageError("neighbor k must be positive");
  if (copies_per_op == 0) throw UsageError("copies per operation must be positive");
  if (enabled_ops.empty()) throw UsageError("no augmentation operation enabled");
}

std::string DescribeConfig(const AugmentConfig& config) {
  std::vector<Operation> ops = config.enabled_ops;
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  std::string name;
  if (std::equal(ops.begin(), ops.end(), kSelectiveOperations.begin(),
                 kSelectiveOperations.end())) {
    name = "sta";
  } else if (std::equal(ops.begin(), ops.end(), kRandomOperations.begin(),
                        kRandomOperations.end())) {
    name = "eda";
  } else {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) name += '+';
      name += OperationName(ops[i]);
    }
  }
  name += fmt::format("/p={:.2f}/{}", config.strength, StrategyName(config.strategy));
  if (config.criterion_mode != CriterionMode::kBoth) {
    name += fmt::format("/{}", CriterionModeName(config.criterion_mode));
  }
  if (config.copies_per_op != 1) name += fmt::format("/x{}", config.copies_per_op);
  return name;
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kReplace:
      return "replace";
    case EditKind::kInsert:
      return "insert";
    case EditKind::kDelete:
      return "delete";
  }
  return "replace";
}

std::vector<Token> ApplyEdits(std::vector<Token> tokens, std::span<const Edit> edits) {
  for (const Edit& edit : edits) {
    switch (edit.kind) {
      case EditKind::kReplace:
        if (edit.position >= tokens.size() ||
            tokens[edit.position].surface != edit.old_surface) {
          throw DataError("replace edit does not match token list");
        }
        tokens[edit.position] = MakeToken(edit.new_surface);
        break;
      case EditKind::kInsert:
        if (edit.position > tokens.size()) throw DataError("insert past end");
        tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(edit.position),
                      MakeToken(edit.new_surface));
        break;
      case EditKind::kDelete:
        if (edit.position >= tokens.size() ||
            tokens[edit.position].surface != edit.old_surface) {
          throw DataError("delete edit does not match token list");
        }
        tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(edit.position));
        break;
    }
  }
  return tokens;
}

std::size_t EditCount(double strength, std::size_t word_count) {
  const double scaled = strength * static_cast<double>(word_count);
  const auto rounded = static_cast<std::size_t>(std::floor(scaled + 0.5));
  return std::max<std::size_t>(1, rounded);
}

AugmentedDoc SelectiveReplacement(const Document& doc, const DocRoles& roles,
                                  const AugmentConfig& config,
                                  const EmbeddingTable& table,
                                  std::size_t copy_index) {
  AugmentedDoc out = Start(doc, Operation::kSelectiveReplacement, config, copy_index);
  const std::size_t words = doc.WordCount();
  RequireWords(doc, words);
  Rng rng(out.seed);
  out.requested_edits = EditCount(config.strength, words);
  auto order = CandidateOrder(doc, roles, {Role::kVenture, Role::kBonus, Role::kTrivial}, rng);
  Replace(doc, order, config, table, rng, out);
  Finish(out);
  return out;
}

AugmentedDoc SelectiveInsertion(const Document& doc, const DocRoles& roles,
                                const AugmentConfig& config,
                                const EmbeddingTable& table,
                                std::size_t copy_index) {
  AugmentedDoc out = Start(doc, Operation::kSelectiveInsertion, config, copy_index);
  const std::size_t words = doc.WordCount();
  RequireWords(doc, words);
  Rng rng(out.seed);
  out.requested_edits = EditCount(config.strength, words);
  auto order = CandidateOrder(doc, roles, {Role::kGold, Role::kBonus, Role::kTrivial}, rng);
  Insert(doc, order, config, table, rng, out);
  Finish(out);
  return out;
}

AugmentedDoc SelectiveDeletion(const Document& doc, const DocRoles& roles,
                               const AugmentConfig& config, std::size_t copy_index) {
  AugmentedDoc out = Start(doc, Operation::kSelectiveDeletion, config, copy_index);
  const std::size_t words = doc.WordCount();
  RequireWords(doc, words);
  if (words == 1) {
    out.warning = "single-word document left unchanged";
    Finish(out);
    return out;
  }
  Rng rng(out.seed);
  out.requested_edits = DeletionCount(config.strength, words);
  auto order = CandidateOrder(doc, roles, {Role::kVenture, Role::kBonus, Role::kTrivial}, rng);
  Delete(order, out);
  Finish(out);
  return out;
}

AugmentedDoc PositiveSelection(const Document& doc, const DocRoles& roles,
                               const ScoreTable& scores, const AugmentConfig& config,
                               std::size_t copy_index) {
  AugmentedDoc out = Start(doc, Operation::kPositiveSelection, config, copy_index);
  if (roles.roles.size() != doc.tokens.size()) {
    throw DataError("role assignment does not match document " + doc.id);
  }
  Rng rng(out.seed);
  const std::size_t n = doc.tokens.size();
  std::vector<bool> core(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    core[i] = doc.tokens[i].is_word() && roles.roles[i] == Role::kGold;
  }
  if (std::none_of(core.begin(), core.end(), [](bool b) { return b; })) {
    out.fallback = true;
    auto positions = WordPositions(doc);
    auto wllr_of = [&](std::size_t pos) {
      auto index = scores.IndexOf(doc.tokens[pos].normalized);
      return index ? scores.wllr(*index, doc.label)
                   : -std::numeric_limits<double>::infinity();
    };
    std::stable_sort(positions.begin(), positions.end(),
                     [&](std::size_t a, std::size_t b) { return wllr_of(a) > wllr_of(b); });
    const std::size_t keep = (positions.size() + 3) / 4;
    for (std::size_t i = 0; i < keep; ++i) core[positions[i]] = true;
    out.warning = "no gold words; kept top words by wllr";
  }
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) continue;
    const Token& token = doc.tokens[i];
    const bool optional = token.kind == TokenKind::kPunctuation ||
                          (token.is_word() && roles.roles[i] == Role::kTrivial);
    if (optional && rng.Bernoulli(config.trivial_keep_prob)) continue;
    dropped.push_back(i);
  }
  Erase(std::move(dropped), out);
  Finish(out);
  return out;
}

AugmentedDoc RandomEdit(const Document& doc, const AugmentConfig& config,
                        RandomEditMode mode, const EmbeddingTable& table,
                        std::size_t copy_index) {
  static constexpr std::array<Operation, 4> kOps = {
      Operation::kRandomReplacement, Operation::kRandomInsertion,
      Operation::kRandomDeletion, Operation::kRandomSwap};
  AugmentedDoc out = Start(doc, kOps[static_cast<std::size_t>(mode)], config, copy_index);
  const std::size_t words = doc.WordCount();
  RequireWords(doc, words);
  Rng rng(out.seed);
  auto positions = WordPositions(doc);
  switch (mode) {
    case RandomEditMode::kReplace:
      out.requested_edits = EditCount(config.strength, words);
      rng.Shuffle(std::span(positions));
      Replace(doc, positions, config, table, rng, out);
      break;
    case RandomEditMode::kInsert:
      out.requested_edits = EditCount(config.strength, words);
      rng.Shuffle(std::span(positions));
      Insert(doc, positions, config, table, rng, out);
      break;
    case RandomEditMode::kDelete:
      if (words == 1) {
        out.warning = "single-word document left unchanged";
        break;
      }
      out.requested_edits = DeletionCount(config.strength, words);
      rng.Shuffle(std::span(positions));
      Delete(positions, out);
      break;
    case RandomEditMode::kSwap:
      if (words == 1) {
        out.warning = "single-word document left unchanged";
        break;
      }
      out.requested_edits = EditCount(config.strength, words);
      for (std::size_t s = 0; s < out.requested_edits; ++s) {
        const std::size_t a = rng.UniformIndex(words);
        std::size_t b = rng.UniformIndex(words - 1);
        if (b >= a) ++b;
        const std::size_t pa = positions[a];
        const std::size_t pb = positions[b];
        const std::string first = out.tokens[pa].surface;
        const std::string second = out.tokens[pb].surface;
        out.edits.push_back({pa, EditKind::kReplace, first, second});
        out.edits.push_back({pb, EditKind::kReplace, second, first});
        std::swap(out.tokens[pa], out.tokens[pb]);
      }
      break;
  }
  Finish(out);
  return out;
}

AugmentedDoc ApplyOperation(Operation op, const Document& doc, const DocRoles& roles,
                            const ScoreTable& scores, const EmbeddingTable& table,
                            const AugmentConfig& config, std::size_t copy_index) {
  switch (op) {
    case Operation::kSelectiveReplacement:
      return SelectiveReplacement(doc, roles, config, table, copy_index);
    case Operation::kSelectiveInsertion:
      return SelectiveInsertion(doc, roles, config, table, copy_index);
    case Operation::kSelectiveDeletion:
      return SelectiveDeletion(doc, roles, config, copy_index);
    case Operation::kPositiveSelection:
      return PositiveSelection(doc, roles, scores, config, copy_index);
    case Operation::kRandomReplacement:
      return RandomEdit(doc, config, RandomEditMode::kReplace, table, copy_index);
    case Operation::kRandomInsertion:
      return RandomEdit(doc, config, RandomEditMode::kInsert, table, copy_index);
    case Operation::kRandomDeletion:
      return RandomEdit(doc, config, RandomEditMode::kDelete, table, copy_index);
    case Operation::kRandomSwap:
      return RandomEdit(doc, config, RandomEditMode::kSwap, table, copy_index);
  }
  throw UsageError("unknown operation");
}

std::vector<AugmentedDoc> AugmentCorpus(const LabeledCorpus& corpus,
                                        const ScoreTable& scores,
                                        const EmbeddingTable& table,
                                        const AugmentConfig& config,
                                        std::size_t workers) {
  config.Validate();
  std::vector<Operation> ops = config.enabled_ops;
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  std::vector<Thresholds> global;
  if (config.strategy == Strategy::kGlobal) global = ComputeGlobalThresholds(scores);

  const auto& docs = corpus.documents();
  std::vector<std::vector<AugmentedDoc>> slots(docs.size());
  std::vector<std::string> errors(docs.size());
  ParallelFor(docs.size(), workers, [&](std::size_t i) {
    try {
      const DocRoles roles = AssignRoles(docs[i], scores, global, config.strategy,
                                         config.criterion_mode);
      for (Operation op : ops) {
        for (std::size_t copy = 0; copy < config.copies_per_op; ++copy) {
          slots[i].push_back(
              ApplyOperation(op, docs[i], roles, scores, table, config, copy));
        }
      }
    } catch (const Error& e) {
      slots[i].clear();
      errors[i] = e.what();
    }
  });

  std::vector<AugmentedDoc> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!errors[i].empty()) {
      spdlog::error("skipping document {}: {}", docs[i].id, errors[i]);
      continue;
    }
    for (auto& sample : slots[i]) out.push_back(std::move(sample));
  }
  return out;
}

std::string AugmentedJsonl(const LabeledCorpus& corpus,
                           std::span<const AugmentedDoc> samples,
                           bool include_originals) {
  auto line = [&](std::string_view text, ClassId label, std::string_view source,
                  std::string_view op, std::size_t copy, std::uint64_t seed) {
    nlohmann::ordered_json object;
    object["text"] = text;
    object["label"] = corpus.labels().at(label).name;
    object["source_id"] = source;
    object["op"] = op;
    object["copy"] = copy;
    object["seed"] = seed;
    return object.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
  };
  auto sample_line = [&](const AugmentedDoc& sample) {
    return line(sample.new_text, sample.label, sample.source_id,
                OperationName(sample.op), sample.copy_index, sample.seed);
  };
  std::string out;
  if (!include_originals) {
    for (const auto& sample : samples) out += sample_line(sample);
    return out;
  }
  std::map<std::string_view, std::vector<const AugmentedDoc*>> by_source;
  for (const auto& sample : samples) by_source[sample.source_id].push_back(&sample);
  for (const auto& doc : corpus.documents()) {
    out += line(doc.raw_text, doc.label, doc.id, "original", 0, 0);
    auto it = by_source.find(doc.id);
    if (it == by_source.end()) continue;
    for (const AugmentedDoc* sample : it->second) out += sample_line(*sample);
    by_source.erase(it);
  }
  for (const auto& sample : samples) {
    if (by_source.contains(sample.source_id)) out += sample_line(sample);
  }
  return out;
}

}  // namespace roleaug
