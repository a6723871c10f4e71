// Copyright 2026 The fairaudit Authors.
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

#include "verify.hpp"

#include "document.hpp"
#include "error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fairaudit {
namespace {

class PropertyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(PropertyTest, HoldsOnASmallRun) {
  VerifyParams p;
  p.seed = 3;
  p.trials = 60;
  const VerifyReport r = RunVerification(GetParam(), p);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GT(r.checked, 0u);
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_EQ(r.params.trials, 60u);
}

INSTANTIATE_TEST_SUITE_P(
    RandomProperties, PropertyTest,
    ::testing::Values("monotonicity-adv", "monotonicity-enabling",
                      "neutral-extension", "oracle-equivalence",
                      "prp-equivalence", "dp-marginal", "eo-marginal",
                      "generic-construction"),
    [](const auto& info) {
      std::string name = info.param;
      for (char& c : name) {
        if (c == '-') c = '_';
      }
      return name;
    });

TEST(VerifyTest, NamesAreStable) {
  const auto& names = PropertyNames();
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "mutual-eo-rates");
}

TEST(VerifyTest, SameSeedSameReport) {
  VerifyParams p;
  p.seed = 8;
  p.trials = 40;
  const VerifyReport a = RunVerification("oracle-equivalence", p);
  const VerifyReport b = RunVerification("oracle-equivalence", p);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(VerifyTest, UnknownPropertyIsAnInputError) {
  EXPECT_ERROR_CODE(RunVerification("no-such-property", VerifyParams{}),
                    ErrorCode::kInput);
}

TEST(VerifyTest, ExhaustiveSizeIsBounded) {
  VerifyParams p;
  p.max_size = 9;
  EXPECT_ERROR_CODE(RunVerification("mutual-eo-rates", p),
                    ErrorCode::kBoundExceeded);
  EXPECT_ERROR_CODE(RunVerification("multitask-certificate", p),
                    ErrorCode::kBoundExceeded);
}

// Both exhaustive properties fail on complementary function pairs; the
// counterexample document loads and every violation involves a complement.
TEST(VerifyTest, MutualEoCounterexamplesAreComplements) {
  VerifyParams p;
  p.max_size = 4;
  const VerifyReport r = RunVerification("mutual-eo-rates", p);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.violations, 0u);
  ASSERT_TRUE(r.violations_excluding_complements.has_value());
  EXPECT_EQ(*r.violations_excluding_complements, 0u);
  ASSERT_TRUE(r.counterexample.has_value());
  const DomainInstance d =
      ParseDomain((*r.counterexample)["document"].dump());
  EXPECT_EQ(d.tasks().size(), 2u);
}

TEST(VerifyTest, MultitaskCounterexamplesAreComplements) {
  VerifyParams p;
  p.max_size = 5;
  const VerifyReport r = RunVerification("multitask-certificate", p);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.violations_excluding_complements.has_value());
  EXPECT_EQ(*r.violations_excluding_complements, 0u);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NO_THROW(ParseDomain((*r.counterexample)["document"].dump()));
}

TEST(VerifyTest, TinyDomainsHaveNoViolations) {
  VerifyParams p;
  p.max_size = 2;
  EXPECT_TRUE(RunVerification("mutual-eo-rates", p).passed);
  EXPECT_TRUE(RunVerification("multitask-certificate", p).passed);
}

}  // namespace
}  // namespace fairaudit
