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

#ifndef ROLEAUG_EMBEDDINGS_H_
#define ROLEAUG_EMBEDDINGS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "roleaug/error.h"

namespace roleaug {

using Vector = Eigen::VectorXd;
// One word vector per row.
using VectorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Cosine of the angle between two equally sized vectors, row or column.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar CosineSimilarity(const Eigen::MatrixBase<DerivedA>& u,
                                           const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) throw DataError("cosine: dimension mismatch");
  const auto norm_u = u.norm();
  const auto norm_v = v.norm();
  if (!(norm_u > 0) || !(norm_v > 0)) throw DataError("cosine: zero-norm vector");
  return u.dot(v) / (norm_u * norm_v);
}

struct Neighbor {
  std::string word;
  double score = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Static word vectors keyed by case-folded word. Immutable once built, so
// concurrent const access is safe.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Keys are case-folded; the first entry for a key wins. Zero-norm and
  // non-finite vectors are rejected: zero-norm ones are skipped with a
  // message appended to `warnings`, non-finite ones throw.
  EmbeddingTable(std::size_t dim,
                 const std::vector<std::pair<std::string, Vector>>& entries,
                 std::vector<std::string>* warnings = nullptr);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  bool contains(std::string_view word) const;
  std::optional<std::size_t> IndexOf(std::string_view word) const;
  const std::string& word(std::size_t index) const { return words_.at(index); }
  const std::vector<std::string>& words() const { return words_; }
  const VectorMatrix& vectors() const { return vectors_; }
  // Throws DataError for unknown words.
  Vector Get(std::string_view word) const;

  // Returns a copy with every vector multiplied by `factor`.
  EmbeddingTable Scaled(double factor) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  VectorMatrix vectors_;
  Vector norms_;

  friend std::vector<Neighbor> NearestNeighbors(std::string_view word,
                                                std::size_t k,
                                                const EmbeddingTable& table);
};

// Plain-text vectors: optional "<count> <dim>" header, then "<word> v1 .. vd"
// per line. Files ending in ".gz" are decompressed on the fly.
EmbeddingTable LoadEmbeddings(const std::filesystem::path& path,
                              std::vector<std::string>* warnings = nullptr);

// Mean vector of the description's in-table words.
Vector LabelVector(std::string_view description, const EmbeddingTable& table,
                   std::string_view label_name = {});

// Exact top-k by cosine, best first, ties by word. The query word is never
// returned.
std::vector<Neighbor> NearestNeighbors(std::string_view word, std::size_t k,
                                       const EmbeddingTable& table);

}  // namespace roleaug

#endif  // ROLEAUG_EMBEDDINGS_H_
