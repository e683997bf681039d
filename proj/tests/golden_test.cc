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

#include <cstdlib>

#include "gtest/gtest.h"
#include "roleaug/augment.h"
#include "roleaug/roles.h"
#include "test_util.h"

namespace roleaug {
namespace {

// Set ROLEAUG_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
void ExpectGolden(const std::string& name, const std::string& actual) {
  const auto path = testing::GoldenDir() / name;
  const char* update = std::getenv("ROLEAUG_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    testing::WriteText(path, actual);
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << "missing golden file " << path;
  EXPECT_EQ(testing::ReadText(path), actual) << name;
}

class GoldenTest : public ::testing::Test {
 protected:
  LabeledCorpus corpus_ = testing::FixtureCorpus();
  EmbeddingTable table_ = testing::FixtureTable();
  ScoreTable scores_ = BuildScoreTable(corpus_, table_);
};

TEST_F(GoldenTest, RoleReport) {
  auto report = BuildRoleReport(corpus_, scores_, ComputeGlobalThresholds(scores_));
  ExpectGolden("roles.csv", RoleReportCsv(report));
  ExpectGolden("roles.txt", RoleReportText(report));
}

TEST_F(GoldenTest, EachOperation) {
  for (int i = 0; i <= static_cast<int>(Operation::kRandomSwap); ++i) {
    const auto op = static_cast<Operation>(i);
    AugmentConfig config;
    config.master_seed = 42;
    config.strength = 0.2;
    config.enabled_ops = {op};
    auto samples = AugmentCorpus(corpus_, scores_, table_, config);
    ExpectGolden(std::string(OperationName(op)) + ".jsonl", AugmentedJsonl(corpus_, samples));
  }
}

TEST_F(GoldenTest, LocalStrategy) {
  AugmentConfig config;
  config.master_seed = 42;
  config.strategy = Strategy::kLocal;
  auto samples = AugmentCorpus(corpus_, scores_, table_, config);
  ExpectGolden("sta_local.jsonl", AugmentedJsonl(corpus_, samples, true));
}

}  // namespace
}  // namespace roleaug
