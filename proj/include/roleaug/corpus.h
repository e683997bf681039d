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

#ifndef ROLEAUG_CORPUS_H_
#define ROLEAUG_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roleaug/text.h"

namespace roleaug {

// Index into LabeledCorpus::labels().
using ClassId = std::size_t;

struct LabelInfo {
  ClassId id = 0;
  std::string name;
  std::optional<std::string> description;
};

struct Document {
  std::string id;
  std::string raw_text;
  ClassId label = 0;
  std::vector<Token> tokens;

  std::size_t WordCount() const;
};

struct Record {
  std::string text;
  std::string label;
};

enum class CorpusFormat { kJsonl, kCsv };

class LabeledCorpus {
 public:
  // Label set is the sorted distinct labels of `records`; ids are "<row>".
  static LabeledCorpus FromRecords(const std::vector<Record>& records);
  // Uses a fixed label set (e.g. a training corpus' labels for a test split).
  // Classes may be left without documents; unknown labels are a data error.
  static LabeledCorpus FromRecords(const std::vector<Record>& records,
                                   const std::vector<std::string>& label_names);

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<LabelInfo>& labels() const { return labels_; }
  const std::set<std::string>& vocabulary() const { return vocabulary_; }
  std::size_t num_classes() const { return labels_.size(); }

  std::vector<std::string> LabelNames() const;
  std::optional<ClassId> FindLabel(std::string_view name) const;
  // Label text used for the class' semantic vector.
  std::string LabelDescription(ClassId id) const;
  void SetDescription(ClassId id, std::string description);
  void SetDescriptions(const std::map<std::string, std::string>& descriptions);

  // Documents are appended with their existing id.
  void AddDocument(std::string id, std::string raw_text, ClassId label);

 private:
  std::vector<Document> documents_;
  std::vector<LabelInfo> labels_;
  std::set<std::string> vocabulary_;
};

std::vector<Record> ReadRecords(const std::filesystem::path& path,
                                CorpusFormat format,
                                std::string_view text_field = "text",
                                std::string_view label_field = "label");

LabeledCorpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format,
                         std::string_view text_field = "text",
                         std::string_view label_field = "label");

CorpusFormat ParseCorpusFormat(std::string_view name);
// Picks the format from the file extension (".csv" or anything else as JSONL).
CorpusFormat GuessCorpusFormat(const std::filesystem::path& path);

// Word-kind token counts per class. Punctuation and numeric tokens are not
// counted.
class ClassCounts {
 public:
  // counts[w][y]; every vector must have num_classes entries.
  ClassCounts(std::size_t num_classes,
              std::map<std::string, std::vector<std::int64_t>> counts,
              double alpha = 1.0);

  std::size_t num_classes() const { return totals_.size(); }
  std::size_t vocab_size() const { return counts_.size(); }
  double alpha() const { return alpha_; }
  std::int64_t total(ClassId y) const { return totals_.at(y); }
  std::int64_t count(const std::string& word, ClassId y) const;
  bool contains(const std::string& word) const { return counts_.contains(word); }
  const std::map<std::string, std::vector<std::int64_t>>& table() const {
    return counts_;
  }

 private:
  std::map<std::string, std::vector<std::int64_t>> counts_;
  std::vector<std::int64_t> totals_;
  double alpha_;
};

ClassCounts ComputeClassCounts(const LabeledCorpus& corpus, double alpha = 1.0);

}  // namespace roleaug

#endif  // ROLEAUG_CORPUS_H_
