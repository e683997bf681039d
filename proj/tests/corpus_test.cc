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

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "roleaug/error.h"
#include "test_util.h"

namespace roleaug {
namespace {

using ::roleaug::testing::TempDir;
using ::roleaug::testing::WriteText;

TEST(LoadCorpusTest, TwoLineJsonl) {
  TempDir dir("corpus");
  WriteText(dir / "c.jsonl",
            "{\"text\":\"a b\",\"label\":\"X\"}\n{\"text\":\"c\",\"label\":\"Y\"}\n");
  auto corpus = LoadCorpus(dir / "c.jsonl", CorpusFormat::kJsonl);
  ASSERT_EQ(corpus.documents().size(), 2u);
  EXPECT_EQ(corpus.num_classes(), 2u);
  EXPECT_EQ(corpus.vocabulary(), (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(corpus.documents()[0].id, "0");
  EXPECT_EQ(corpus.documents()[1].id, "1");
  EXPECT_EQ(corpus.labels()[corpus.documents()[1].label].name, "Y");
}

TEST(LoadCorpusTest, CustomFieldsAndNumericLabels) {
  TempDir dir("corpus");
  WriteText(dir / "c.jsonl",
            "{\"body\":\"a\",\"y\":1}\n\n{\"body\":\"b\",\"y\":0}\n");
  auto corpus = LoadCorpus(dir / "c.jsonl", CorpusFormat::kJsonl, "body", "y");
  EXPECT_EQ(corpus.LabelNames(), (std::vector<std::string>{"0", "1"}));
}

TEST(LoadCorpusTest, EmptyFile) {
  TempDir dir("corpus");
  WriteText(dir / "empty.jsonl", "");
  try {
    LoadCorpus(dir / "empty.jsonl", CorpusFormat::kJsonl);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_STREQ(e.what(), "no records");
  }
}

TEST(LoadCorpusTest, SingleLabel) {
  TempDir dir("corpus");
  WriteText(dir / "one.jsonl", "{\"text\":\"a\",\"label\":\"X\"}\n{\"text\":\"b\",\"label\":\"X\"}\n");
  try {
    LoadCorpus(dir / "one.jsonl", CorpusFormat::kJsonl);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_STREQ(e.what(), "need at least 2 classes");
  }
}

TEST(LoadCorpusTest, MissingFieldNamesRow) {
  TempDir dir("corpus");
  WriteText(dir / "m.jsonl", "{\"text\":\"a\",\"label\":\"X\"}\n{\"text\":\"b\"}\n");
  try {
    LoadCorpus(dir / "m.jsonl", CorpusFormat::kJsonl);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(std::string(e.what()), "row 1: missing field 'label'");
  }
}

TEST(LoadCorpusTest, MissingFileIsIoError) {
  EXPECT_THROW(LoadCorpus("/nonexistent/x.jsonl", CorpusFormat::kJsonl), IoError);
}

TEST(LoadCorpusTest, CsvWithQuoting) {
  TempDir dir("corpus");
  WriteText(dir / "c.csv",
            "id,label,text\r\n"
            "1,pos,\"good, \"\"very\"\" good\"\r\n"
            "2,neg,\"bad\nline\"\r\n"
            "3,neg,plain\r\n");
  auto corpus = LoadCorpus(dir / "c.csv", CorpusFormat::kCsv);
  ASSERT_EQ(corpus.documents().size(), 3u);
  EXPECT_EQ(corpus.documents()[0].raw_text, "good, \"very\" good");
  EXPECT_EQ(corpus.documents()[1].raw_text, "bad\nline");
  EXPECT_EQ(corpus.LabelNames(), (std::vector<std::string>{"neg", "pos"}));
}

TEST(LoadCorpusTest, CsvMissingColumn) {
  TempDir dir("corpus");
  WriteText(dir / "c.csv", "label,body\nx,a\ny,b\n");
  EXPECT_THROW(LoadCorpus(dir / "c.csv", CorpusFormat::kCsv), DataError);
}

TEST(LoadCorpusTest, FixedLabelSet) {
  std::vector<Record> records = {{"a", "B"}};
  auto corpus = LabeledCorpus::FromRecords(records, {"A", "B"});
  EXPECT_EQ(corpus.documents()[0].label, 1u);
  EXPECT_THROW(LabeledCorpus::FromRecords({{"a", "C"}}, {"A", "B"}), DataError);
}

TEST(LoadCorpusTest, Descriptions) {
  auto corpus = LabeledCorpus::FromRecords({{"a", "sci.electronics"}, {"b", "rec.sport"}});
  EXPECT_EQ(corpus.LabelDescription(1), "sci.electronics");
  corpus.SetDescriptions({{"sci.electronics", "electronics circuits"}});
  EXPECT_EQ(corpus.LabelDescription(1), "electronics circuits");
  EXPECT_THROW(corpus.SetDescriptions({{"nope", "x"}}), DataError);
}

TEST(ClassCountsTest, HandCounts) {
  auto corpus = LabeledCorpus::FromRecords({{"circuit circuit sensor", "A"}, {"ball game", "B"}});
  auto counts = ComputeClassCounts(corpus);
  EXPECT_EQ(counts.total(0), 3);
  EXPECT_EQ(counts.total(1), 2);
  EXPECT_EQ(counts.count("circuit", 0), 2);
  EXPECT_EQ(counts.count("circuit", 1), 0);
  EXPECT_EQ(counts.vocab_size(), 4u);
  EXPECT_DOUBLE_EQ(counts.alpha(), 1.0);
}

TEST(ClassCountsTest, PunctuationAndNumbersExcluded) {
  auto corpus = LabeledCorpus::FromRecords({{"!!! ... ,", "A"}, {"ball 42 game", "B"}});
  auto counts = ComputeClassCounts(corpus);
  EXPECT_EQ(counts.total(0), 0);
  EXPECT_EQ(counts.total(1), 2);
  EXPECT_FALSE(counts.contains("42"));
}

TEST(ClassCountsTest, RejectsBadInput) {
  EXPECT_THROW(ClassCounts(2, {{"a", {1, 0}}}, 0.0), DataError);
  EXPECT_THROW(ClassCounts(2, {{"a", {1}}}), DataError);
  EXPECT_THROW(ClassCounts(2, {{"a", {-1, 0}}}), DataError);
}

TEST(ClassCountsTest, PropertyTotalsAndVocabulary) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 150; ++iter) {
    auto random = testing::MakeRandomCorpus(rng, 5, 30, 40);
    auto corpus = LabeledCorpus::FromRecords(random.records);
    auto counts = ComputeClassCounts(corpus);
    std::int64_t word_tokens = 0;
    for (const auto& doc : corpus.documents()) word_tokens += static_cast<std::int64_t>(doc.WordCount());
    std::int64_t sum_totals = 0;
    for (ClassId y = 0; y < counts.num_classes(); ++y) {
      std::int64_t column = 0;
      for (const auto& [word, per_class] : counts.table()) column += per_class[y];
      EXPECT_EQ(column, counts.total(y));
      sum_totals += counts.total(y);
    }
    EXPECT_EQ(sum_totals, word_tokens);
    std::set<std::string> keys;
    for (const auto& [word, per_class] : counts.table()) keys.insert(word);
    EXPECT_EQ(keys, corpus.vocabulary());
  }
}

}  // namespace
}  // namespace roleaug
