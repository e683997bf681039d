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

#include "roleaug/evalkit.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "roleaug/error.h"
#include "test_util.h"

namespace roleaug {
namespace {

LabeledCorpus ChineseTrain() {
  return LabeledCorpus::FromRecords({{"chinese beijing chinese", "c"},
                                     {"chinese chinese shanghai", "c"},
                                     {"chinese macao", "c"},
                                     {"tokyo japan chinese", "j"}});
}

Document Doc(const std::string& text) { return Document{"t", text, 0, Tokenize(text)}; }

TEST(TrainNaiveBayesTest, HandComputedFixture) {
  auto model = TrainNaiveBayes(ChineseTrain());
  EXPECT_EQ(model.vocab_size(), 6u);
  EXPECT_NEAR(std::exp(model.log_prior()(0)), 3.0 / 4.0, 1e-12);
  EXPECT_NEAR(std::exp(model.log_prior()(1)), 1.0 / 4.0, 1e-12);
  const auto chinese = *model.IndexOf("chinese");
  EXPECT_NEAR(std::exp(model.log_likelihood()(chinese, 0)), 6.0 / 14.0, 1e-12);
  EXPECT_NEAR(std::exp(model.log_likelihood()(chinese, 1)), 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(std::exp(model.log_likelihood()(*model.IndexOf("tokyo"), 0)), 1.0 / 14.0, 1e-12);
}

TEST(PredictTest, HandPosterior) {
  auto model = TrainNaiveBayes(ChineseTrain());
  const auto doc = Doc("chinese chinese chinese tokyo japan");
  const double c = std::log(0.75) + 3 * std::log(3.0 / 7.0) + 2 * std::log(1.0 / 14.0);
  const double j = std::log(0.25) + 3 * std::log(2.0 / 9.0) + 2 * std::log(2.0 / 9.0);
  auto scores = model.Scores(doc);
  EXPECT_NEAR(scores(0), c, 1e-12);
  EXPECT_NEAR(scores(1), j, 1e-12);
  EXPECT_EQ(Predict(model, doc), 0u);
}

TEST(PredictTest, EmptyAndUnseenDocumentsFollowPriors) {
  auto model = TrainNaiveBayes(ChineseTrain());
  EXPECT_EQ(Predict(model, Doc("")), 0u);
  EXPECT_EQ(Predict(model, Doc("berlin paris !")), 0u);
  EXPECT_TRUE(model.Bow(Doc("berlin paris")).empty());
  auto flipped = LabeledCorpus::FromRecords({{"x", "a"}, {"y", "b"}, {"z", "b"}});
  EXPECT_EQ(Predict(TrainNaiveBayes(flipped), Doc("")), 1u);
}

TEST(PredictTest, TiesGoToEarlierLabel) {
  auto model = TrainNaiveBayes(LabeledCorpus::FromRecords({{"x", "a"}, {"x", "b"}}));
  EXPECT_EQ(Predict(model, Doc("x x")), 0u);
}

TEST(NbModelTest, LikelihoodsNormalize) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    auto random = testing::MakeRandomCorpus(rng, 5, 50, 200);
    const double beta = iter % 2 ? 1.0 : 0.1 * (iter % 7 + 1);
    auto model = TrainNaiveBayes(LabeledCorpus::FromRecords(random.records), beta);
    for (std::size_t y = 0; y < model.num_classes(); ++y) {
      EXPECT_NEAR(model.log_likelihood().col(static_cast<Eigen::Index>(y)).array().exp().sum(),
                  1.0, 1e-9);
    }
    EXPECT_NEAR(model.log_prior().array().exp().sum(), 1.0, 1e-12);
  }
}

TEST(NbModelTest, SingleWordVocabulary) {
  auto model = TrainNaiveBayes(LabeledCorpus::FromRecords({{"x x", "a"}, {"x", "b"}}));
  ASSERT_EQ(model.vocab_size(), 1u);
  EXPECT_NEAR(model.log_likelihood()(0, 0), 0.0, 1e-15);
  EXPECT_NEAR(model.log_likelihood()(0, 1), 0.0, 1e-15);
}

TEST(NbModelTest, UniformDuplicationKeepsPriors) {
  std::vector<Record> records = {{"chinese beijing chinese", "c"},
                                 {"chinese chinese shanghai", "c"},
                                 {"chinese macao", "c"},
                                 {"tokyo japan chinese", "j"}};
  auto doubled = records;
  doubled.insert(doubled.end(), records.begin(), records.end());
  auto once = TrainNaiveBayes(LabeledCorpus::FromRecords(records));
  auto twice = TrainNaiveBayes(LabeledCorpus::FromRecords(doubled));
  EXPECT_TRUE(once.log_prior().isApprox(twice.log_prior(), 1e-12));
  // Counts double: P(chinese|c) = (10 + 1) / (16 + 6).
  EXPECT_NEAR(std::exp(twice.log_likelihood()(*twice.IndexOf("chinese"), 0)), 11.0 / 22.0, 1e-12);
  for (const char* text : {"chinese tokyo", "japan", "macao chinese japan"}) {
    EXPECT_EQ(Predict(once, Doc(text)), Predict(twice, Doc(text))) << text;
  }
}

TEST(PredictTest, TokenOrderDoesNotMatter) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    auto random = testing::MakeRandomCorpus(rng, 4, 40, 50);
    auto model = TrainNaiveBayes(LabeledCorpus::FromRecords(random.records));
    for (auto [words, label] : random.docs) {
      std::string a, b;
      for (const auto& w : words) a += w + " ";
      std::shuffle(words.begin(), words.end(), rng);
      for (const auto& w : words) b += w + " ";
      EXPECT_EQ(Predict(model, Doc(a)), Predict(model, Doc(b)));
      EXPECT_TRUE(model.Scores(Doc(a)).isApprox(model.Scores(Doc(b)), 1e-12));
    }
  }
}

TEST(TrainNaiveBayesTest, EmptyClassIsAnError) {
  auto corpus = LabeledCorpus::FromRecords({{"x", "a"}}, {"a", "b"});
  EXPECT_THROW(TrainNaiveBayes(corpus), DataError);
}

TEST(EvaluateTest, Cases) {
  auto train = ChineseTrain();
  auto model = TrainNaiveBayes(train);
  EXPECT_DOUBLE_EQ(Evaluate(model, train), 1.0);
  auto wrong = LabeledCorpus::FromRecords({{"tokyo japan", "c"}}, {"c", "j"});
  EXPECT_DOUBLE_EQ(Evaluate(model, wrong), 0.0);
  // Empty documents all predict "c", so accuracy is the share of "c".
  auto blank = LabeledCorpus::FromRecords({{"", "c"}, {"", "j"}, {"", "j"}, {"", "c"}, {"", "c"}});
  EXPECT_DOUBLE_EQ(Evaluate(model, blank), 3.0 / 5.0);
}

TEST(EvaluateTest, MatchesPerDocumentPredictions) {
  auto corpus = testing::FixtureCorpus();
  auto model = TrainNaiveBayes(corpus);
  std::size_t right = 0;
  for (const auto& doc : corpus.documents()) right += Predict(model, doc) == doc.label;
  EXPECT_DOUBLE_EQ(Evaluate(model, corpus), static_cast<double>(right) / 10.0);
}

class ExperimentTest : public ::testing::Test {
 protected:
  LabeledCorpus train_ = testing::FixtureCorpus();
  LabeledCorpus test_ = LabeledCorpus::FromRecords(
      {{"the sensor and the circuit", "electronics"}, {"the team won the match", "sports"}});
  EmbeddingTable table_ = testing::FixtureTable();
};

TEST_F(ExperimentTest, NoConfigsGivesOnlyBaseline) {
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  auto report = RunExperiment(train_, test_, table_, {}, seeds);
  ASSERT_EQ(report.summaries.size(), 1u);
  EXPECT_EQ(report.summaries[0].config, kNonAugConfig);
  EXPECT_EQ(report.summaries[0].runs, 3u);
  EXPECT_EQ(report.rows.size(), 3u);
  EXPECT_DOUBLE_EQ(report.summaries[0].stddev, 0.0);
}

TEST_F(ExperimentTest, Deterministic) {
  std::vector<AugmentConfig> configs(2);
  configs[1].enabled_ops.assign(kRandomOperations.begin(), kRandomOperations.end());
  const std::vector<std::uint64_t> seeds = {7, 8};
  auto a = RunExperiment(train_, test_, table_, configs, seeds);
  auto b = RunExperiment(train_, test_, table_, configs, seeds, {.workers = 4});
  EXPECT_EQ(a.Csv(), b.Csv());
  EXPECT_EQ(a.SummaryTable(), b.SummaryTable());
  ASSERT_EQ(a.rows.size(), 6u);
  EXPECT_EQ(a.rows[2].config, "sta/p=0.10/global");
  EXPECT_EQ(a.rows[4].config, "eda/p=0.10/global");
  EXPECT_NE(a.Find("eda/p=0.10/global"), nullptr);
  for (const auto& row : a.rows) {
    EXPECT_GE(row.accuracy, 0.0);
    EXPECT_LE(row.accuracy, 1.0);
  }
  EXPECT_EQ(a.Csv().rfind("config,seed,accuracy\n", 0), 0u);
}

TEST_F(ExperimentTest, InputErrors) {
  const std::vector<std::uint64_t> seeds = {1};
  auto other = LabeledCorpus::FromRecords({{"x", "p"}, {"y", "q"}});
  EXPECT_THROW(RunExperiment(train_, other, table_, {}, seeds), DataError);
  std::vector<AugmentConfig> same(2);
  EXPECT_THROW(RunExperiment(train_, test_, table_, same, seeds), UsageError);
  EXPECT_THROW(RunExperiment(train_, test_, table_, {}, {}), UsageError);
}

TEST(ExperimentSummaryTest, MeanAndSampleStddevFromRows) {
  auto train = LoadCorpus(testing::MiniDir() / "train.jsonl", CorpusFormat::kJsonl);
  auto test = LoadCorpus(testing::MiniDir() / "test.jsonl", CorpusFormat::kJsonl);
  auto table = LoadEmbeddings(testing::MiniDir() / "vectors.txt");
  std::vector<AugmentConfig> configs(1);
  configs[0].strength = 0.2;
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4};
  auto report = RunExperiment(train, test, table, configs, seeds);
  for (const auto& summary : report.summaries) {
    std::vector<double> values;
    for (const auto& row : report.rows) {
      if (row.config == summary.config) values.push_back(row.accuracy);
    }
    ASSERT_EQ(values.size(), 4u);
    double mean = 0;
    for (double v : values) mean += v / 4;
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    EXPECT_NEAR(summary.mean, mean, 1e-12);
    EXPECT_NEAR(summary.stddev, std::sqrt(ss / 3), 1e-12);
  }
}

}  // namespace
}  // namespace roleaug
