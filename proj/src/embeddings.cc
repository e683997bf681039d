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

#include "roleaug/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>

#include <zlib.h>

#include "roleaug/text.h"

namespace roleaug {
namespace {

class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path)
      : gzipped_(path.extension() == ".gz") {
    if (gzipped_) {
      gz_ = gzopen(path.c_str(), "rb");
      if (gz_ == nullptr) throw IoError("cannot open " + path.string());
    } else {
      in_.open(path, std::ios::binary);
      if (!in_) throw IoError("cannot open " + path.string());
    }
  }
  ~LineReader() {
    if (gz_ != nullptr) gzclose(gz_);
  }
  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  bool Next(std::string& line) {
    if (!gzipped_) {
      if (!std::getline(in_, line)) return false;
    } else {
      line.clear();
      char buffer[1 << 16];
      bool any = false;
      while (gzgets(gz_, buffer, sizeof(buffer)) != nullptr) {
        any = true;
        line += buffer;
        if (!line.empty() && line.back() == '\n') break;
      }
      if (!any) return false;
      if (!line.empty() && line.back() == '\n') line.pop_back();
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

 private:
  bool gzipped_;
  gzFile gz_ = nullptr;
  std::ifstream in_;
};

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view field, T& value) {
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

EmbeddingTable::EmbeddingTable(
    std::size_t dim, const std::vector<std::pair<std::string, Vector>>& entries,
    std::vector<std::string>* warnings)
    : dim_(dim) {
  if (dim_ == 0) throw DataError("embedding dimension must be positive");
  std::vector<const Vector*> kept;
  for (const auto& [raw_word, vec] : entries) {
    if (static_cast<std::size_t>(vec.size()) != dim_) {
      throw DataError("vector for '" + raw_word + "' has dimension " +
                      std::to_string(vec.size()) + ", expected " +
                      std::to_string(dim_));
    }
    if (!vec.allFinite()) {
      throw DataError("vector for '" + raw_word + "' is not finite");
    }
    std::string word = CaseFold(raw_word);
    if (index_.contains(word)) continue;
    if (vec.squaredNorm() == 0.0) {
      if (warnings) warnings->push_back("skipped zero-norm vector for '" + raw_word + "'");
      continue;
    }
    index_.emplace(word, words_.size());
    words_.push_back(std::move(word));
    kept.push_back(&vec);
  }
  vectors_.resize(static_cast<Eigen::Index>(kept.size()),
                  static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    vectors_.row(static_cast<Eigen::Index>(i)) = kept[i]->transpose();
  }
  norms_ = vectors_.rowwise().norm();
}

bool EmbeddingTable::contains(std::string_view word) const {
  return IndexOf(word).has_value();
}

std::optional<std::size_t> EmbeddingTable::IndexOf(std::string_view word) const {
  auto it = index_.find(CaseFold(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector EmbeddingTable::Get(std::string_view word) const {
  auto index = IndexOf(word);
  if (!index) throw DataError("word not in embedding table: " + std::string(word));
  return vectors_.row(static_cast<Eigen::Index>(*index)).transpose();
}

EmbeddingTable EmbeddingTable::Scaled(double factor) const {
  EmbeddingTable scaled = *this;
  scaled.vectors_ *= factor;
  scaled.norms_ = scaled.vectors_.rowwise().norm();
  return scaled;
}

EmbeddingTable LoadEmbeddings(const std::filesystem::path& path,
                              std::vector<std::string>* warnings) {
  LineReader reader(path);
  std::vector<std::pair<std::string, Vector>> entries;
  std::size_t dim = 0;
  std::size_t line_number = 0;
  bool any_line = false;
  std::string line;
  while (reader.Next(line)) {
    ++line_number;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (!any_line) {
      any_line = true;
      std::size_t count = 0;
      std::size_t header_dim = 0;
      if (fields.size() == 2 && ParseNumber(fields[0], count) &&
          ParseNumber(fields[1], header_dim)) {
        if (header_dim == 0) throw DataError("line 1: header dimension is zero");
        dim = header_dim;
        entries.reserve(count);
        continue;
      }
    }
    const std::size_t values = fields.size() - 1;
    if (dim == 0) dim = values;
    if (values != dim || values == 0) {
      throw DataError(path.string() + ":" + std::to_string(line_number) +
                      ": expected " + std::to_string(dim) + " values, found " +
                      std::to_string(values));
    }
    Vector vec(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      double value = 0.0;
      if (!ParseNumber(fields[i + 1], value) || !std::isfinite(value)) {
        throw DataError(path.string() + ":" + std::to_string(line_number) +
                        ": bad value '" + std::string(fields[i + 1]) + "'");
      }
      vec(static_cast<Eigen::Index>(i)) = value;
    }
    entries.emplace_back(std::string(fields[0]), std::move(vec));
  }
  if (!any_line) throw DataError("empty embedding file " + path.string());
  if (dim == 0) throw DataError("no vectors in " + path.string());
  return EmbeddingTable(dim, entries, warnings);
}

Vector LabelVector(std::string_view description, const EmbeddingTable& table,
                   std::string_view label_name) {
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(table.dim()));
  std::size_t found = 0;
  for (const auto& token : Tokenize(description)) {
    if (!token.is_word()) continue;
    if (auto index = table.IndexOf(token.normalized)) {
      sum += table.vectors().row(static_cast<Eigen::Index>(*index)).transpose();
      ++found;
    }
  }
  if (found == 0) {
    throw DataError("no word of the description for label '" +
                    std::string(label_name.empty() ? description : label_name) +
                    "' has a vector");
  }
  return sum / static_cast<double>(found);
}

std::vector<Neighbor> NearestNeighbors(std::string_view word, std::size_t k,
                                       const EmbeddingTable& table) {
  auto query_index = table.IndexOf(word);
  if (!query_index) {
    throw DataError("word not in embedding table: " + std::string(word));
  }
  if (k == 0) return {};
  const auto q = static_cast<Eigen::Index>(*query_index);
  const Vector dots = table.vectors_ * table.vectors_.row(q).transpose();
  const double query_norm = table.norms_(q);

  std::vector<std::size_t> order;
  order.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != *query_index) order.push_back(i);
  }
  std::vector<double> scores(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    scores[i] = dots(row) / (table.norms_(row) * query_norm);
  }
  auto better = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return table.words_[a] < table.words_[b];
  };
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), better);
  std::vector<Neighbor> result;
  result.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    result.push_back({table.words_[order[i]], scores[order[i]]});
  }
  return result;
}

}  // namespace roleaug
