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

#include "constructors.hpp"

#include "document.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "gtest/gtest.h"
#include "metrics.hpp"
#include "test_util.hpp"

namespace fairaudit {
namespace {

using testing::LoadTestDomain;
using testing::Q;

constexpr char kFourPoint[] = R"({
  "instances": [{"id": "x1", "group": "A", "weight": "1/4"},
                {"id": "x2", "group": "D", "weight": "1/4"},
                {"id": "x3", "group": "A", "weight": "1/4"},
                {"id": "x4", "group": "D", "weight": "1/4"}],
  "tasks": {"f": {"x1": 1, "x2": 1, "x3": 0, "x4": 0},
            "h": {"x1": 0, "x2": 1, "x3": 0, "x4": 0}}
})";

Rational Sum(const std::vector<Rational>& w) {
  Rational s;
  for (const auto& x : w) s += x;
  return s;
}

TEST(DpMarginalTest, GroupIndicatorSplitsHalfAndHalf) {
  const DomainInstance d = LoadDomain("fix-8a");
  const Labeling h = {1, 1, 0, 0, 1, 1, 0, 0};  // 1 exactly on A
  const AdversarialMarginal m = DpAdversarialMarginal(d, h);
  EXPECT_EQ(m.construction_case, "dp-split");
  EXPECT_EQ(m.achieved, Rational(1));
  EXPECT_EQ(m.target_unfairness, Rational(1));
  const DomainInstance p = d.WithWeights(m.weights);
  EXPECT_EQ(p.GroupMass(Group::kA), Q("1/2"));
  EXPECT_EQ(p.GroupMass(Group::kD), Q("1/2"));
  EXPECT_EQ(DpUnfairness(p, h).value, Rational(1));
}

TEST(DpMarginalTest, ConstantClassifierIsAPreconditionError) {
  const DomainInstance d = LoadDomain("fix-8a");
  EXPECT_ERROR_CODE(DpAdversarialMarginal(d, Labeling(8, 1)),
                    ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(DpAdversarialMarginal(d, Labeling(3, 1)),
                    ErrorCode::kInput);
}

TEST(DpMarginalTest, SeededClassifiersReachFullDisparity) {
  GeneratorParams p;
  p.min_instances = 2;
  p.max_instances = 12;
  Rng rng(41);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const DomainInstance d = GenerateDomain(p, rng);
    Labeling h(d.size());
    for (auto& l : h) l = rng.Coin();
    bool constant = true;
    for (Label l : h) constant &= l == h[0];
    if (constant) continue;
    const AdversarialMarginal m = DpAdversarialMarginal(d, h);
    EXPECT_EQ(Sum(m.weights), Rational(1));
    EXPECT_EQ(DpUnfairness(d.WithWeights(m.weights), h).value, Rational(1));
    ++built;
  }
  EXPECT_GT(built, 250);
}

TEST(EoMarginalTest, FourPointCaseOne) {
  const DomainInstance d = ParseDomain(kFourPoint);
  const AdversarialMarginal m =
      EoAdversarialMarginal(d, d.Task("f"), d.Task("h"));
  EXPECT_EQ(m.construction_case, "eo-case1");
  EXPECT_EQ(m.label, 1);
  EXPECT_EQ(Sum(m.weights), Rational(1));
  EXPECT_GE(m.achieved, Q("1/2"));
  EXPECT_EQ(EoUnfairness(d.WithWeights(m.weights), d.Task("f"), d.Task("h"))
                .value,
            m.achieved);
}

TEST(EoMarginalTest, Preconditions) {
  const DomainInstance d = ParseDomain(kFourPoint);
  const Labeling& f = d.Task("f");
  Labeling flipped(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) flipped[i] = 1 - f[i];
  EXPECT_ERROR_CODE(EoAdversarialMarginal(d, f, f), ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(EoAdversarialMarginal(d, f, flipped),
                    ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(EoAdversarialMarginal(d, f, Labeling(4, 0)),
                    ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(EoAdversarialMarginal(d, Labeling(4, 1), d.Task("h")),
                    ErrorCode::kPrecondition);
}

TEST(EoMarginalTest, SeededPairsReachHalf) {
  GeneratorParams p;
  p.min_instances = 3;
  p.max_instances = 12;
  Rng rng(43);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const DomainInstance d = GenerateDomain(p, rng);
    Labeling f(d.size()), h(d.size());
    for (auto& l : f) l = rng.Coin();
    for (auto& l : h) l = rng.Coin();
    try {
      const AdversarialMarginal m = EoAdversarialMarginal(d, f, h);
      EXPECT_GE(EoUnfairness(d.WithWeights(m.weights), f, h).value, Q("1/2"));
      EXPECT_EQ(Sum(m.weights), Rational(1));
      ++built;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kPrecondition) << e.what();
    }
  }
  EXPECT_GT(built, 200);
}

TEST(MutualEoTest, IdenticalFunctions) {
  const DomainInstance d = LoadDomain("fix-12");
  const MutualEoReport r = MutualEoAudit(d, d.Task("t"), d.Task("t"));
  EXPECT_EQ(r.disagreement_mass, Rational(0));
  EXPECT_EQ(r.eo_f_given_g, Rational(0));
  EXPECT_EQ(r.eo_g_given_f, Rational(0));
  EXPECT_FALSE(r.premise);
  EXPECT_TRUE(r.conclusion_holds);
}

TEST(MutualEoTest, ProportionalMassesGiveEqualRates) {
  // f and g disagree on a quarter of each quadrant of f, with the same
  // proportions in both groups.
  const DomainInstance d = ParseDomain(R"({
    "instances": [
      {"id": "a1", "group": "A", "weight": "3/16"},
      {"id": "a2", "group": "A", "weight": "1/16"},
      {"id": "a3", "group": "A", "weight": "1/16"},
      {"id": "a4", "group": "A", "weight": "3/16"},
      {"id": "d1", "group": "D", "weight": "3/16"},
      {"id": "d2", "group": "D", "weight": "1/16"},
      {"id": "d3", "group": "D", "weight": "1/16"},
      {"id": "d4", "group": "D", "weight": "3/16"}],
    "tasks": {
      "f": {"a1": 1, "a2": 1, "a3": 0, "a4": 0, "d1": 1, "d2": 1, "d3": 0, "d4": 0},
      "g": {"a1": 1, "a2": 0, "a3": 1, "a4": 0, "d1": 1, "d2": 0, "d3": 1, "d4": 0}}
  })");
  const MutualEoReport r = MutualEoAudit(d, d.Task("f"), d.Task("g"));
  EXPECT_EQ(r.eo_f_given_g, Rational(0));
  EXPECT_EQ(r.eo_g_given_f, Rational(0));
  EXPECT_EQ(r.disagreement_mass, Q("1/4"));
  EXPECT_TRUE(r.premise);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.pos_rate_f_a, Q("1/2"));
  EXPECT_EQ(r.pos_rate_f_d, Q("1/2"));
}

TEST(MutualEoTest, ComplementaryFunctionsBreakTheImplication) {
  // g = 1 - f: each is maximally wrong about the other in every quadrant, so
  // both directional EO values vanish while the positive rates differ.
  const DomainInstance d = LoadTestDomain("mutual-eo-complement.json");
  const MutualEoReport r = MutualEoAudit(d, d.Task("f"), d.Task("g"));
  EXPECT_TRUE(r.complementary);
  EXPECT_TRUE(r.premise);
  EXPECT_EQ(r.disagreement_mass, Rational(1));
  EXPECT_EQ(r.pos_rate_f_a, Q("1/2"));
  EXPECT_EQ(r.pos_rate_f_d, Q("3/4"));
  EXPECT_FALSE(r.conclusion_holds);
}

TEST(MultitaskTest, SameTaskTwiceIsDegenerate) {
  const DomainInstance d = LoadDomain("fix-8b");
  const MultitaskCertificate c =
      MultitaskCertificateFor(d, d.Features({"f1", "f2"}), "t", "t");
  EXPECT_FALSE(c.tasks_differ_on_support);
  EXPECT_TRUE(c.perfect_accuracy_both);
  EXPECT_TRUE(c.invariant_holds);
}

TEST(MultitaskTest, CertificateFields) {
  const DomainInstance base = LoadDomain("fix-8b");
  // A second task that differs on x1 only.
  Labeling t2 = base.Task("t");
  t2[0] = 0;
  const DomainInstance d = base.WithTask("t2", t2);
  const MultitaskCertificate c =
      MultitaskCertificateFor(d, d.Features({"f1", "f2"}), "t", "t2");
  EXPECT_TRUE(c.tasks_differ_on_support);
  EXPECT_TRUE(c.equal_success_rates_1);
  EXPECT_FALSE(c.equal_success_rates_2);
  EXPECT_FALSE(c.perfect_accuracy_both);
  EXPECT_FALSE(c.tasks_complementary);
  EXPECT_TRUE(c.invariant_holds);
}

TEST(MultitaskTest, ComplementaryTasksBreakTheInvariant) {
  // Cells {x1,x2,x4} and {x3,x5}; t2 = 1 - t1. Every expressible classifier
  // has EO 0 for both tasks, both tasks are perfectly expressible and t1 has
  // success rates 1/3 and 1/2.
  const DomainInstance d = LoadTestDomain("multitask-complement.json");
  const MultitaskCertificate c =
      MultitaskCertificateFor(d, d.Features({"cells"}), "t1", "t2");
  EXPECT_TRUE(c.adv_fair_task1);
  EXPECT_TRUE(c.adv_fair_task2);
  EXPECT_TRUE(c.perfect_accuracy_both);
  EXPECT_TRUE(c.tasks_differ_on_support);
  EXPECT_FALSE(c.equal_success_rates_1);
  EXPECT_TRUE(c.tasks_complementary);
  EXPECT_FALSE(c.invariant_holds);
}

TEST(PrpFeasibilityTest, EqualRatesAreFeasible) {
  const PrpFeasibility p = CheckPrpFeasibility(LoadDomain("fix-8a"),
                                               LoadDomain("fix-8a").Task("t"));
  EXPECT_TRUE(p.feasible);
  EXPECT_TRUE(p.all_one.prp_fair());
}

TEST(PrpFeasibilityTest, ExtremeRatesAreNot) {
  const DomainInstance d = ParseDomain(R"({
    "instances": [{"id": "a", "group": "A", "weight": "1/2"},
                  {"id": "d", "group": "D", "weight": "1/2"}],
    "tasks": {"t": {"a": 1, "d": 0}}})");
  const PrpFeasibility p = CheckPrpFeasibility(d, d.Task("t"));
  EXPECT_FALSE(p.feasible);
  EXPECT_FALSE(p.all_one.prp_fair());
  EXPECT_EQ(p.rates.rate_a, Rational(1));
  EXPECT_EQ(p.rates.rate_d, Rational(0));
}

}  // namespace
}  // namespace fairaudit
