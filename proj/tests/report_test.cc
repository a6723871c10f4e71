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

#include "report.hpp"

#include <string>

#include "error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fairaudit {
namespace {

using nlohmann::ordered_json;

TEST(DigestTest, KnownVectors) {
  EXPECT_EQ(Sha256Digest(""),
            "sha256:"
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Digest("abc"),
            "sha256:"
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ReportTest, AuditEchoesResolvedArguments) {
  const LoadedDomain input = LoadDocument("fix-8a");
  AuditArgs a;
  a.features = {"f1", "f2"};
  a.objective = "accuracy";
  const Report r = RunAudit(input, a);
  const ordered_json& b = r.body;
  EXPECT_EQ(b["schema"], "fairaudit.report/1");
  EXPECT_EQ(b["command"]["name"], "audit");
  const ordered_json& args = b["command"]["args"];
  EXPECT_EQ(args["input"], "fix-8a");
  EXPECT_EQ(args["alpha"], "1/2");
  EXPECT_EQ(args["notion"], "eo");
  EXPECT_EQ(args["objective"], "accuracy");
  EXPECT_EQ(b["inputs_digest"],
            "sha256:"
            "7c30152192e7ad7b49cccee9b38019f0a4b658e36b446d99a2f88d4940e0130a");
  EXPECT_EQ(b["results"]["value"]["exact"], "1");
  EXPECT_EQ(b["results"]["value"]["decimal"], "1.000000");
  EXPECT_EQ(b["results"]["min_loss"]["exact"], "1/4");
  EXPECT_EQ(b["results"]["minimizer_count"], 16);
  EXPECT_EQ(b["results"]["cells"][0], (ordered_json{"x1", "x5"}));
  EXPECT_FALSE(b["annotations"].is_null());
  EXPECT_TRUE(r.passed);
}

TEST(ReportTest, RerunningTheEchoIsByteIdentical) {
  const LoadedDomain input = LoadDocument("fix-12");
  AuditArgs a;
  a.features = {"F", "f"};
  a.objective = "enabling";
  a.epsilon = "1/8";
  a.eta = "0.2";
  const std::string first = RenderJson(RunAudit(input, a));
  const ordered_json echo = ordered_json::parse(first)["command"]["args"];
  AuditArgs again;
  for (const auto& f : echo["features"]) again.features.push_back(f);
  again.task = echo["task"];
  again.notion = echo["notion"];
  again.objective = echo["objective"];
  again.alpha = echo["alpha"].get<std::string>();
  again.epsilon = echo["epsilon"].get<std::string>();
  again.eta = echo["eta"].get<std::string>();
  again.cell_bound = echo["cell_bound"];
  EXPECT_EQ(RenderJson(RunAudit(input, again)), first);
  EXPECT_EQ(echo["eta"], "1/5");
}

TEST(ReportTest, EnablingNeedsBothBudgets) {
  const LoadedDomain input = LoadDocument("fix-8b");
  AuditArgs a;
  a.objective = "enabling";
  a.epsilon = "0";
  EXPECT_ERROR_CODE(RunAudit(input, a), ErrorCode::kInput);
}

TEST(ReportTest, BadArgumentsAreInputErrors) {
  const LoadedDomain input = LoadDocument("fix-8b");
  AuditArgs a;
  a.notion = "calibration";
  EXPECT_ERROR_CODE(RunAudit(input, a), ErrorCode::kInput);
  a = AuditArgs{};
  a.objective = "accuracy";
  a.alpha = "3/2";
  EXPECT_ERROR_CODE(RunAudit(input, a), ErrorCode::kInput);
  a = AuditArgs{};
  a.features = {"missing"};
  EXPECT_ERROR_CODE(RunAudit(input, a), ErrorCode::kInput);
  ConstructArgs c;
  c.kind = "nothing";
  EXPECT_ERROR_CODE(RunConstruct(input, c), ErrorCode::kInput);
  c.kind = "dp-marginal";
  c.labeling = "0101";
  EXPECT_ERROR_CODE(RunConstruct(input, c), ErrorCode::kInput);
  c.labeling = "0101010x";
  EXPECT_ERROR_CODE(RunConstruct(input, c), ErrorCode::kInput);
}

TEST(ReportTest, FrontierPoints) {
  const LoadedDomain input =
      ParseDocument("gen-12", LoadDocument(std::string(FAIRAUDIT_TEST_DATA_DIR) +
                                           "/gen-12.json")
                                  .bytes);
  AuditArgs a;
  a.features = {"f1", "f2"};
  a.objective = "frontier";
  const Report r = RunAudit(input, a);
  const ordered_json& front = r.body["results"]["frontier"];
  ASSERT_EQ(front.size(), 4u);
  EXPECT_EQ(front[0]["loss"]["exact"], "5/48");
  EXPECT_EQ(front[0]["unfairness"]["exact"], "11/30");
  EXPECT_EQ(front[3]["unfairness"]["exact"], "0");
}

TEST(ReportTest, ConstructKinds) {
  const LoadedDomain fix12 = LoadDocument("fix-12");
  ConstructArgs c;
  c.kind = "context-pair";
  c.feature = "f";
  const Report pair = RunConstruct(fix12, c);
  EXPECT_TRUE(pair.passed);
  EXPECT_EQ(pair.body["results"]["increasing"]["u_acc_with"]["exact"], "1/2");
  EXPECT_EQ(pair.body["results"]["decreasing"]["u_acc_with"]["exact"], "0");

  c.kind = "generic-pair";
  const Report generic = RunConstruct(fix12, c);
  EXPECT_EQ(generic.body["results"]["weights"]["x1"], "1/5");
  EXPECT_EQ(generic.body["results"]["check"]["generic"], true);
  EXPECT_EQ(generic.body["results"]["search"]["found"], true);

  c = ConstructArgs{};
  c.kind = "prp";
  EXPECT_EQ(RunConstruct(fix12, c).body["results"]["feasible"], true);

  c = ConstructArgs{};
  c.kind = "deletion";
  c.features = {"f1"};
  c.feature = "f2";
  const Report del = RunConstruct(LoadDocument("fix-8a"), c);
  EXPECT_EQ(del.body["results"]["direction"], "increase");
  EXPECT_EQ(del.body["results"]["with"]["exact"], "1");
}

TEST(ReportTest, FailedInvariantsMarkTheReport) {
  const LoadedDomain input = ParseDocument(
      "complement", LoadDocument(std::string(FAIRAUDIT_TEST_DATA_DIR) +
                                 "/mutual-eo-complement.json")
                        .bytes);
  ConstructArgs c;
  c.kind = "mutual-eo";
  c.task = "f";
  c.task2 = "g";
  const Report r = RunConstruct(input, c);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.body["results"]["complementary"], true);
  c.task2.reset();
  EXPECT_ERROR_CODE(RunConstruct(input, c), ErrorCode::kInput);
}

TEST(ReportTest, VerifyReportHasNoInputDigest) {
  VerifyParams p;
  p.trials = 10;
  const Report r = RunVerify("prp-equivalence", p);
  EXPECT_TRUE(r.body["inputs_digest"].is_null());
  EXPECT_EQ(r.body["command"]["args"]["trials"], 10);
  EXPECT_TRUE(r.passed);
}

TEST(ReportTest, TextRendering) {
  AuditArgs a;
  a.features = {"Fprime", "f"};
  a.objective = "accuracy";
  const std::string text = RenderText(RunAudit(LoadDocument("fix-12"), a));
  EXPECT_NE(text.find("value: 1/3 (0.333333)"), std::string::npos) << text;
  EXPECT_NE(text.find("cells: {x1} {x2, x11} {x3, x6, x9}"), std::string::npos) << text;
  EXPECT_NE(text.find("inputs digest: sha256:"), std::string::npos);
}

}  // namespace
}  // namespace fairaudit
