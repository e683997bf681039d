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

#include <random>
#include <thread>

#include <zlib.h>

#include "gtest/gtest.h"
#include "roleaug/error.h"
#include "test_util.h"

namespace roleaug {
namespace {

using ::roleaug::testing::TempDir;
using ::roleaug::testing::WriteText;

Vector V(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

TEST(LoadEmbeddingsTest, WithHeader) {
  TempDir dir("emb");
  WriteText(dir / "v.txt", "2 2\na 1 0\nb 0 1\n");
  auto table = LoadEmbeddings(dir / "v.txt");
  EXPECT_EQ(table.dim(), 2u);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.Get("b"), V({0, 1}));
}

TEST(LoadEmbeddingsTest, InfersDimensionAndFoldsCaseFirstWins) {
  TempDir dir("emb");
  WriteText(dir / "v.txt", "Apple 1 2 3\napple 9 9 9\npear 0 1 0\n");
  auto table = LoadEmbeddings(dir / "v.txt");
  EXPECT_EQ(table.dim(), 3u);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.Get("APPLE"), V({1, 2, 3}));
}

TEST(LoadEmbeddingsTest, InconsistentDimensionNamesLine) {
  TempDir dir("emb");
  WriteText(dir / "v.txt", "a 1 0\nb 0 1\nc 1 2 3\n");
  try {
    LoadEmbeddings(dir / "v.txt");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(LoadEmbeddingsTest, ZeroNormSkippedWithWarning) {
  TempDir dir("emb");
  WriteText(dir / "v.txt", "a 0 0\n");
  std::vector<std::string> warnings;
  auto table = LoadEmbeddings(dir / "v.txt", &warnings);
  EXPECT_FALSE(table.contains("a"));
  EXPECT_EQ(table.size(), 0u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("'a'"), std::string::npos);
}

TEST(LoadEmbeddingsTest, EmptyFileAndBadValues) {
  TempDir dir("emb");
  WriteText(dir / "empty.txt", "");
  EXPECT_THROW(LoadEmbeddings(dir / "empty.txt"), DataError);
  WriteText(dir / "bad.txt", "a 1 x\n");
  EXPECT_THROW(LoadEmbeddings(dir / "bad.txt"), DataError);
  WriteText(dir / "nan.txt", "a 1 nan\n");
  EXPECT_THROW(LoadEmbeddings(dir / "nan.txt"), DataError);
  EXPECT_THROW(LoadEmbeddings(dir / "missing.txt"), IoError);
}

TEST(LoadEmbeddingsTest, Gzip) {
  TempDir dir("emb");
  const std::string path = (dir / "v.txt.gz").string();
  gzFile gz = gzopen(path.c_str(), "wb");
  const std::string content = "2 2\na 1 0\nb 0 1\n";
  gzwrite(gz, content.data(), static_cast<unsigned>(content.size()));
  gzclose(gz);
  auto table = LoadEmbeddings(path);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.Get("a"), V({1, 0}));
}

TEST(CosineSimilarityTest, Cases) {
  EXPECT_DOUBLE_EQ(CosineSimilarity(V({3, 4}), V({3, 4})), 1.0);
  EXPECT_DOUBLE_EQ(CosineSimilarity(V({1, 0}), V({0, 1})), 0.0);
  EXPECT_NEAR(CosineSimilarity(V({1, 0}), V({1, 1})), 0.70710678, 1e-6);
  EXPECT_THROW(CosineSimilarity(V({1, 0}), V({1, 0, 0})), DataError);
  EXPECT_THROW(CosineSimilarity(V({0, 0}), V({1, 0})), DataError);
}

TEST(CosineSimilarityTest, PropertySymmetricAndBounded) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (int iter = 0; iter < 500; ++iter) {
    Vector u(7), v(7);
    for (int i = 0; i < 7; ++i) {
      u(i) = gauss(rng);
      v(i) = iter % 5 == 0 ? 2.5 * u(i) : gauss(rng);
    }
    const double a = CosineSimilarity(u, v);
    EXPECT_EQ(a, CosineSimilarity(v, u));
    EXPECT_LE(std::abs(a), 1.0 + 1e-9);
  }
}

TEST(LabelVectorTest, Means) {
  EmbeddingTable table(2, {{"a", V({1, 0})}, {"b", V({0, 1})}});
  EXPECT_EQ(LabelVector("a", table), V({1, 0}));
  EXPECT_EQ(LabelVector("a b", table), V({0.5, 0.5}));
  EXPECT_EQ(LabelVector("A, zzz", table), V({1, 0}));
  try {
    LabelVector("zzz", table, "electronics");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("electronics"), std::string::npos);
  }
}

TEST(NearestNeighborsTest, SmallTable) {
  EmbeddingTable table(2, {{"a", V({1, 0})}, {"b", V({0.9, 0.1})},
                           {"c", V({0, 1})}, {"d", V({-1, 0})}});
  EXPECT_TRUE(NearestNeighbors("a", 0, table).empty());
  auto top = NearestNeighbors("a", 2, table);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].word, "b");
  EXPECT_EQ(top[1].word, "c");
  auto all = NearestNeighbors("A", 10, table);
  ASSERT_EQ(all.size(), 3u);
  for (const auto& n : all) EXPECT_NE(n.word, "a");
  EXPECT_THROW(NearestNeighbors("zzz", 2, table), DataError);
}

TEST(NearestNeighborsTest, TiesBrokenByWord) {
  EmbeddingTable table(2, {{"q", V({1, 0})}, {"z", V({2, 1})}, {"m", V({2, 1})},
                           {"b", V({4, 2})}});
  auto top = NearestNeighbors("q", 3, table);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].word, "b");
  EXPECT_EQ(top[1].word, "m");
  EXPECT_EQ(top[2].word, "z");
}

TEST(NearestNeighborsTest, PropertyMatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  for (int round = 0; round < 5; ++round) {
    std::map<std::string, std::vector<double>> vectors;
    const std::size_t words = 50 + rng() % 200;
    for (std::size_t w = 0; w < words; ++w) {
      std::vector<double> v(10);
      for (auto& x : v) x = gauss(rng);
      // Every 7th word duplicates an earlier vector to force exact ties.
      if (w % 7 == 6) v = vectors.begin()->second;
      vectors["w" + std::to_string(w)] = v;
    }
    auto table = testing::TableFrom(vectors);
    for (int q = 0; q < 20; ++q) {
      const std::string query = "w" + std::to_string(rng() % words);
      const std::size_t k = rng() % 15;
      auto got = NearestNeighbors(query, k, table);
      auto want = testing::OracleNeighbors(vectors, query, k);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].word, want[i]);
        if (i > 0) EXPECT_GE(got[i - 1].score, got[i].score);
      }
    }
  }
}

TEST(NearestNeighborsTest, ConcurrentReaders) {
  auto table = testing::FixtureTable();
  const auto expected = NearestNeighbors("circuit", 5, table);
  std::vector<std::jthread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      bool same = true;
      for (int i = 0; i < 50; ++i) same &= NearestNeighbors("circuit", 5, table) == expected;
      ok[t] = same ? 1 : 0;
    });
  }
  threads.clear();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(EmbeddingTableTest, ScaledKeepsCosines) {
  auto table = testing::FixtureTable();
  auto scaled = table.Scaled(3.5);
  EXPECT_NEAR(CosineSimilarity(table.Get("circuit"), table.Get("sensor")),
              CosineSimilarity(scaled.Get("circuit"), scaled.Get("sensor")), 1e-12);
}

}  // namespace
}  // namespace roleaug
