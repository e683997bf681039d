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

#include "roleaug/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "roleaug/error.h"

namespace roleaug {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string data = buffer.str();
  if (data.starts_with("\xEF\xBB\xBF")) data.erase(0, 3);
  return data;
}

std::string FieldToString(const nlohmann::json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

std::vector<Record> ParseJsonl(const std::string& data,
                               std::string_view text_field,
                               std::string_view label_field) {
  std::vector<Record> records;
  std::istringstream lines(data);
  std::string line;
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("row " + std::to_string(row) + ": invalid JSON: " +
                      e.what());
    }
    if (!object.is_object()) {
      throw DataError("row " + std::to_string(row) + ": not a JSON object");
    }
    for (std::string_view field : {text_field, label_field}) {
      if (!object.contains(field)) {
        throw DataError("row " + std::to_string(row) + ": missing field '" +
                        std::string(field) + "'");
      }
    }
    records.push_back({FieldToString(object[std::string(text_field)]),
                       FieldToString(object[std::string(label_field)])});
    ++row;
  }
  return records;
}

// RFC 4180: fields separated by ',', optionally quoted with '"', doubled
// quotes inside quoted fields, CRLF or LF row terminators.
std::vector<std::vector<std::string>> ParseCsvRows(const std::string& data) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };
  for (std::size_t i = 0; i < data.size(); ++i) {
    const char c = data[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c == '\r') {
      if (i + 1 < data.size() && data[i + 1] == '\n') continue;
      end_row();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw DataError("unterminated quoted CSV field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

std::vector<Record> ParseCsv(const std::string& data, std::string_view text_field,
                             std::string_view label_field) {
  auto rows = ParseCsvRows(data);
  if (rows.empty()) return {};
  const auto& header = rows.front();
  auto column = [&](std::string_view name) -> std::ptrdiff_t {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  };
  const std::ptrdiff_t text_col = column(text_field);
  const std::ptrdiff_t label_col = column(label_field);
  std::vector<Record> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    const std::size_t row = r - 1;
    for (auto [col, name] : {std::pair{text_col, text_field},
                             std::pair{label_col, label_field}}) {
      if (col < 0 || static_cast<std::size_t>(col) >= fields.size()) {
        throw DataError("row " + std::to_string(row) + ": missing field '" +
                        std::string(name) + "'");
      }
    }
    records.push_back({fields[text_col], fields[label_col]});
  }
  return records;
}

}  // namespace

std::size_t Document::WordCount() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token& t) { return t.is_word(); }));
}

LabeledCorpus LabeledCorpus::FromRecords(const std::vector<Record>& records) {
  if (records.empty()) throw DataError("no records");
  std::set<std::string> distinct;
  for (const auto& record : records) distinct.insert(record.label);
  if (distinct.size() < 2) throw DataError("need at least 2 classes");
  return FromRecords(records, {distinct.begin(), distinct.end()});
}

LabeledCorpus LabeledCorpus::FromRecords(
    const std::vector<Record>& records,
    const std::vector<std::string>& label_names) {
  if (records.empty()) throw DataError("no records");
  LabeledCorpus corpus;
  for (const auto& name : label_names) {
    if (corpus.FindLabel(name)) throw DataError("duplicate label " + name);
    corpus.labels_.push_back({corpus.labels_.size(), name, std::nullopt});
  }
  if (corpus.labels_.size() < 2) throw DataError("need at least 2 classes");
  for (std::size_t row = 0; row < records.size(); ++row) {
    auto label = corpus.FindLabel(records[row].label);
    if (!label) {
      throw DataError("row " + std::to_string(row) + ": unknown label '" +
                      records[row].label + "'");
    }
    corpus.AddDocument(std::to_string(row), records[row].text, *label);
  }
  return corpus;
}

void LabeledCorpus::AddDocument(std::string id, std::string raw_text,
                                ClassId label) {
  if (label >= labels_.size()) throw DataError("label id out of range");
  Document doc{std::move(id), std::move(raw_text), label, {}};
  doc.tokens = Tokenize(doc.raw_text);
  for (const auto& token : doc.tokens) {
    if (token.is_word()) vocabulary_.insert(token.normalized);
  }
  documents_.push_back(std::move(doc));
}

std::vector<std::string> LabeledCorpus::LabelNames() const {
  std::vector<std::string> names;
  for (const auto& label : labels_) names.push_back(label.name);
  return names;
}

std::optional<ClassId> LabeledCorpus::FindLabel(std::string_view name) const {
  for (const auto& label : labels_) {
    if (label.name == name) return label.id;
  }
  return std::nullopt;
}

std::string LabeledCorpus::LabelDescription(ClassId id) const {
  const auto& label = labels_.at(id);
  return label.description.value_or(label.name);
}

void LabeledCorpus::SetDescription(ClassId id, std::string description) {
  labels_.at(id).description = std::move(description);
}

void LabeledCorpus::SetDescriptions(
    const std::map<std::string, std::string>& descriptions) {
  for (const auto& [name, description] : descriptions) {
    auto id = FindLabel(name);
    if (!id) throw DataError("description given for unknown label '" + name + "'");
    SetDescription(*id, description);
  }
}

std::vector<Record> ReadRecords(const std::filesystem::path& path,
                                CorpusFormat format, std::string_view text_field,
                                std::string_view label_field) {
  const std::string data = ReadFile(path);
  return format == CorpusFormat::kJsonl
             ? ParseJsonl(data, text_field, label_field)
             : ParseCsv(data, text_field, label_field);
}

LabeledCorpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format,
                         std::string_view text_field,
                         std::string_view label_field) {
  return LabeledCorpus::FromRecords(
      ReadRecords(path, format, text_field, label_field));
}

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "csv") return CorpusFormat::kCsv;
  throw UsageError("unknown corpus format '" + std::string(name) + "'");
}

CorpusFormat GuessCorpusFormat(const std::filesystem::path& path) {
  return CaseFold(path.extension().string()) == ".csv" ? CorpusFormat::kCsv
                                                       : CorpusFormat::kJsonl;
}

ClassCounts::ClassCounts(std::size_t num_classes,
                         std::map<std::string, std::vector<std::int64_t>> counts,
                         double alpha)
    : counts_(std::move(counts)), totals_(num_classes, 0), alpha_(alpha) {
  if (!(alpha_ > 0.0)) throw DataError("smoothing constant must be positive");
  for (const auto& [word, per_class] : counts_) {
    if (per_class.size() != num_classes) {
      throw DataError("count vector for '" + word + "' has wrong size");
    }
    for (std::size_t y = 0; y < num_classes; ++y) {
      if (per_class[y] < 0) throw DataError("negative count for '" + word + "'");
      totals_[y] += per_class[y];
    }
  }
}

std::int64_t ClassCounts::count(const std::string& word, ClassId y) const {
  auto it = counts_.find(word);
  if (it == counts_.end()) throw DataError("word not in vocabulary: " + word);
  return it->second.at(y);
}

ClassCounts ComputeClassCounts(const LabeledCorpus& corpus, double alpha) {
  const std::size_t k = corpus.num_classes();
  std::map<std::string, std::vector<std::int64_t>> counts;
  for (const auto& word : corpus.vocabulary()) {
    counts.emplace(word, std::vector<std::int64_t>(k, 0));
  }
  for (const auto& doc : corpus.documents()) {
    for (const auto& token : doc.tokens) {
      if (token.is_word()) ++counts[token.normalized][doc.label];
    }
  }
  return ClassCounts(k, std::move(counts), alpha);
}

}  // namespace roleaug
