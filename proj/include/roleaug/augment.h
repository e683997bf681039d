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

#ifndef ROLEAUG_AUGMENT_H_
#define ROLEAUG_AUGMENT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roleaug/corpus.h"
#include "roleaug/embeddings.h"
#include "roleaug/roles.h"
#include "roleaug/text.h"

namespace roleaug {

// Declaration order is the output order of AugmentCorpus.
enum class Operation {
  kSelectiveReplacement,
  kSelectiveInsertion,
  kSelectiveDeletion,
  kPositiveSelection,
  kRandomReplacement,
  kRandomInsertion,
  kRandomDeletion,
  kRandomSwap,
};

inline constexpr std::array<Operation, 4> kSelectiveOperations = {
    Operation::kSelectiveReplacement, Operation::kSelectiveInsertion,
    Operation::kSelectiveDeletion, Operation::kPositiveSelection};
inline constexpr std::array<Operation, 4> kRandomOperations = {
    Operation::kRandomReplacement, Operation::kRandomInsertion,
    Operation::kRandomDeletion, Operation::kRandomSwap};

std::string_view OperationName(Operation op);
Operation ParseOperation(std::string_view name);

inline constexpr std::array<double, 3> kStrengthGrid = {0.05, 0.10, 0.20};

struct AugmentConfig {
  double strength = 0.10;           // fraction of word tokens edited, (0, 1]
  std::size_t neighbor_k = 5;       // synonyms drawn uniformly from the top k
  double trivial_keep_prob = 0.5;   // positive selection retention, [0, 1]
  std::size_t copies_per_op = 1;
  std::vector<Operation> enabled_ops{kSelectiveOperations.begin(),
                                     kSelectiveOperations.end()};
  std::uint64_t master_seed = 0;
  Strategy strategy = Strategy::kGlobal;
  CriterionMode criterion_mode = CriterionMode::kBoth;

  // Throws UsageError on out-of-range values.
  void Validate() const;
};

// Short stable name, e.g. "sta/p=0.10/global".
std::string DescribeConfig(const AugmentConfig& config);

enum class EditKind { kReplace, kInsert, kDelete };
std::string_view EditKindName(EditKind kind);

// Positions refer to the token list as it is when the edit is applied; edits
// are applied in order.
struct Edit {
  std::size_t position = 0;
  EditKind kind = EditKind::kReplace;
  std::string old_surface;
  std::string new_surface;

  friend bool operator==(const Edit&, const Edit&) = default;
};

std::vector<Token> ApplyEdits(std::vector<Token> tokens, std::span<const Edit> edits);

struct AugmentedDoc {
  std::string new_text;
  std::vector<Token> tokens;
  std::string source_id;
  ClassId label = 0;
  Operation op = Operation::kSelectiveReplacement;
  std::size_t copy_index = 0;
  std::uint64_t seed = 0;
  std::size_t requested_edits = 0;
  std::vector<Edit> edits;
  // Non-empty when the operation could not do everything it was asked to.
  std::string warning;
  // Positive selection on a document without Gold words.
  bool fallback = false;
};

// max(1, round-half-up(strength * word_count)).
std::size_t EditCount(double strength, std::size_t word_count);

// Replaces n non-Gold words with embedding neighbours.
AugmentedDoc SelectiveReplacement(const Document& doc, const DocRoles& roles,
                                  const AugmentConfig& config,
                                  const EmbeddingTable& table,
                                  std::size_t copy_index = 0);

// Inserts neighbours of n non-Venture words at random gaps.
AugmentedDoc SelectiveInsertion(const Document& doc, const DocRoles& roles,
                                const AugmentConfig& config,
                                const EmbeddingTable& table,
                                std::size_t copy_index = 0);

// Deletes n non-Gold words (at most L - 1).
AugmentedDoc SelectiveDeletion(const Document& doc, const DocRoles& roles,
                               const AugmentConfig& config,
                               std::size_t copy_index = 0);

// Keeps Gold words; Trivial words and punctuation each survive with
// probability trivial_keep_prob. Without Gold words the top ceil(L/4) words
// by wllr take their place and `fallback` is set.
AugmentedDoc PositiveSelection(const Document& doc, const DocRoles& roles,
                               const ScoreTable& scores,
                               const AugmentConfig& config,
                               std::size_t copy_index = 0);

enum class RandomEditMode { kReplace, kInsert, kDelete, kSwap };

// Role-blind baselines over all word tokens.
AugmentedDoc RandomEdit(const Document& doc, const AugmentConfig& config,
                        RandomEditMode mode, const EmbeddingTable& table,
                        std::size_t copy_index = 0);

AugmentedDoc ApplyOperation(Operation op, const Document& doc,
                            const DocRoles& roles, const ScoreTable& scores,
                            const EmbeddingTable& table,
                            const AugmentConfig& config, std::size_t copy_index);

// Every enabled operation, copies_per_op times, for every document. Output is
// ordered by document, then operation, then copy, for any worker count.
// Documents that fail are logged and skipped.
std::vector<AugmentedDoc> AugmentCorpus(const LabeledCorpus& corpus,
                                        const ScoreTable& scores,
                                        const EmbeddingTable& table,
                                        const AugmentConfig& config,
                                        std::size_t workers = 1);

// {"text","label","source_id","op","copy","seed"} per line. With
// `include_originals` each source document precedes its samples as op
// "original".
std::string AugmentedJsonl(const LabeledCorpus& corpus,
                           std::span<const AugmentedDoc> samples,
                           bool include_originals = false);

}  // namespace roleaug

#endif  // ROLEAUG_AUGMENT_H_
