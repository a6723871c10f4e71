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

#include "metrics.hpp"

#include "document.hpp"
#include "error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fairaudit {
namespace {

using testing::At;
using testing::Q;

// 1 on the named ids, 0 elsewhere.
Labeling OnlyOn(const DomainInstance& d, const std::vector<std::string>& ids) {
  Labeling h(d.size(), 0);
  for (std::size_t i : At(d, ids)) h[i] = 1;
  return h;
}

class Fix8aTest : public ::testing::Test {
 protected:
  DomainInstance d_ = LoadDomain("fix-8a");
  const Labeling& t_ = d_.Task("t");
};

TEST_F(Fix8aTest, QuadrantMass) {
  EXPECT_EQ(QuadrantMass(d_, "t", Quadrant{Group::kA, 1}), Q("2/8"));
  const QuadrantTable q = QuadrantMasses(d_, t_);
  EXPECT_EQ(q[0][0] + q[0][1] + q[1][0] + q[1][1], Rational(1));
}

TEST_F(Fix8aTest, GroupRatesOfTheDisagreeingClassifier) {
  const Labeling h = OnlyOn(d_, {"x1", "x5", "x2", "x6"});
  const GroupRates r = ComputeGroupRates(d_, t_, h);
  EXPECT_EQ(r.fnr_a.value, Rational(0));
  EXPECT_EQ(r.fnr_d.value, Rational(1));
  EXPECT_EQ(r.fpr_a.value, Rational(1));
  EXPECT_EQ(r.fpr_d.value, Rational(0));
  EXPECT_EQ(EoUnfairness(d_, t_, h).value, Rational(1));
  EXPECT_EQ(DpUnfairness(d_, h).value, Rational(1));
}

TEST_F(Fix8aTest, ConstantClassifiers) {
  const Labeling zero(d_.size(), 0);
  const GroupRates r = ComputeGroupRates(d_, t_, zero);
  EXPECT_EQ(r.fpr_a.value, Rational(0));
  EXPECT_EQ(r.fpr_d.value, Rational(0));
  EXPECT_EQ(r.fnr_a.value, Rational(1));
  EXPECT_EQ(r.fnr_d.value, Rational(1));
  EXPECT_EQ(DpUnfairness(d_, zero).value, Rational(0));
  const Labeling one(d_.size(), 1);
  EXPECT_EQ(WeightedLoss(d_, t_, one, Q("1/2")), Q("1/4"));
}

TEST_F(Fix8aTest, DpOfTheFirstFeature) {
  const Labeling h = OnlyOn(d_, {"x1", "x3", "x5", "x7"});
  const UnfairnessReport r = DpUnfairness(d_, h);
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_EQ((*r.positive)[0], Q("1/2"));
  EXPECT_EQ((*r.positive)[1], Q("1/2"));
}

TEST_F(Fix8aTest, GroundTruthIsFairAndFree) {
  EXPECT_EQ(EoUnfairness(d_, t_, t_).value, Rational(0));
  EXPECT_TRUE(PrpFairness(d_, t_, t_).prp_fair());
  EXPECT_EQ(WeightedLoss(d_, t_, t_, Q("1/3")), Rational(0));
}

TEST_F(Fix8aTest, EqualSuccessRates) {
  const SuccessRates s = EqualSuccessRates(d_, "t");
  EXPECT_TRUE(s.equal);
  EXPECT_EQ(s.rate_a, Q("1/2"));
  EXPECT_EQ(s.rate_d, Q("1/2"));
  const Labeling one(d_.size(), 1);
  EXPECT_TRUE(PrpFairness(d_, t_, one).prp_fair());
}

TEST(MetricsTest, WorkedExampleSingleError) {
  const DomainInstance d = LoadDomain("fix-12");
  Labeling h = d.Task("t");
  h[d.IndexOf("x7")] = 1;
  EXPECT_EQ(EoUnfairness(d, d.Task("t"), h).value, Q("1/6"));
  EXPECT_TRUE(EqualSuccessRates(d, "t").equal);
}

TEST(MetricsTest, SingleErrorLossFollowsAlpha) {
  const DomainInstance d = LoadDomain("fix-12");
  const Labeling& t = d.Task("t");
  Labeling fp = t;
  fp[d.IndexOf("x7")] = 1;  // false positive of mass 1/12
  Labeling fn = t;
  fn[d.IndexOf("x1")] = 0;  // false negative of mass 1/12
  EXPECT_EQ(WeightedLoss(d, t, fp, Q("1/4")), Q("1/16"));
  EXPECT_EQ(WeightedLoss(d, t, fn, Q("1/4")), Q("1/48"));
  EXPECT_ERROR_CODE(WeightedLoss(d, t, fn, Rational(0)), ErrorCode::kInput);
  EXPECT_ERROR_CODE(WeightedLoss(d, t, fn, Rational(1)), ErrorCode::kInput);
}

constexpr char kTwoPoint[] = R"({
  "instances": [{"id": "a1", "group": "A", "weight": "1/2"},
                {"id": "d1", "group": "D", "weight": "1/2"}],
  "tasks": {"t": {"a1": 1, "d1": 0}}
})";

TEST(MetricsTest, TwoPointDisparity) {
  const DomainInstance d = ParseDomain(kTwoPoint);
  EXPECT_EQ(DpUnfairness(d, Labeling{1, 0}).value, Rational(1));
  EXPECT_EQ(DpUnfairness(d, Labeling{1, 1}).value, Rational(0));
  // Success rates 1 and 0: the all-one classifier is PRP-unfair.
  EXPECT_FALSE(EqualSuccessRates(d, "t").equal);
  EXPECT_FALSE(PrpFairness(d, d.Task("t"), Labeling{1, 1}).prp_fair());
}

TEST(MetricsTest, EoZeroMassQuadrantsAreFlagged) {
  // X_{D,1} and X_{A,0} are empty.
  const DomainInstance d = ParseDomain(kTwoPoint);
  const GroupRates r = ComputeGroupRates(d, d.Task("t"), Labeling{0, 1});
  EXPECT_TRUE(r.fnr_d.zero_mass);
  EXPECT_EQ(r.fnr_d.value, Rational(0));
  EXPECT_TRUE(r.fpr_a.zero_mass);
  EXPECT_FALSE(r.fnr_a.zero_mass);
  EXPECT_EQ(r.fnr_a.value, Rational(1));
  EXPECT_EQ(EoValue(r), Q("1"));
}

TEST(MetricsTest, DpRejectsAnEmptyGroup) {
  const DomainInstance d = ParseDomain(R"({
    "instances": [{"id": "a", "group": "A", "weight": "1"},
                  {"id": "b", "group": "D", "weight": "0"}]})");
  EXPECT_ERROR_CODE(DpUnfairness(d, Labeling{1, 0}), ErrorCode::kPrecondition);
}

TEST(MetricsTest, PrpSkipsPredictionsOneGroupNeverReceives) {
  // h=1 only on A and h=0 only on D: no conditioning set holds both groups.
  const DomainInstance d = LoadDomain("fix-8a");
  const Labeling h = OnlyOn(d, {"x1", "x2", "x5", "x6"});
  const UnfairnessReport r = PrpFairness(d, d.Task("t"), h);
  EXPECT_TRUE(r.prp_fair());
  EXPECT_TRUE((*r.conditional)[1][1].zero_mass);
  EXPECT_TRUE((*r.conditional)[0][0].zero_mass);
}

TEST(MetricsTest, PrpDetectsUnequalConditionalRates) {
  const DomainInstance d = LoadDomain("fix-8a");
  // Predict 1 on x1 (A, t=1) and x3, x7 (D, t=1 and t=0).
  const Labeling h = OnlyOn(d, {"x1", "x3", "x7"});
  EXPECT_FALSE(PrpFairness(d, d.Task("t"), h).prp_fair());
}

TEST(MetricsTest, NotionNames) {
  EXPECT_EQ(ParseNotion("eo"), Notion::kEO);
  EXPECT_EQ(ParseNotion("dp"), Notion::kDP);
  EXPECT_EQ(ParseNotion("prp"), Notion::kPRP);
  EXPECT_EQ(NotionName(Notion::kPRP), "prp");
  EXPECT_ERROR_CODE(ParseNotion("calibration"), ErrorCode::kInput);
}

}  // namespace
}  // namespace fairaudit
