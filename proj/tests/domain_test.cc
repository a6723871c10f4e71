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

#include "domain.hpp"

#include <string>

#include "document.hpp"
#include "error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fairaudit {
namespace {

using testing::Names;
using testing::Q;

constexpr char kSmall[] = R"({
  "instances": [
    {"id": "a", "group": "A", "weight": "1/4"},
    {"id": "b", "group": "D", "weight": "1/4"},
    {"id": "c", "group": "A", "weight": "1/2"},
    {"id": "d", "group": "D", "weight": "0"}
  ],
  "tasks": {"t": {"a": 1, "b": 0, "c": 0, "d": 1}},
  "features": {
    "f": {"a": "x", "b": "y", "c": "x", "d": "y"},
    "g": {"a": 1, "b": 1, "c": 2, "d": 2}
  }
})";

std::vector<std::vector<std::string>> CellNames(const DomainInstance& d,
                                                const CellPartition& cells) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cells.cells) out.push_back(CellIds(d, c));
  return out;
}

TEST(DocumentTest, ParsesInstancesTasksFeatures) {
  const DomainInstance d = ParseDomain(kSmall);
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d.id(2), "c");
  EXPECT_EQ(d.group(1), Group::kD);
  EXPECT_EQ(d.weight(2), Q("1/2"));
  EXPECT_EQ(d.Task("t"), (Labeling{1, 0, 0, 1}));
  EXPECT_EQ(d.GetFeature("g").value(2), "2");
  EXPECT_EQ(d.IndexOf("d"), 3u);
  EXPECT_EQ(d.GroupMass(Group::kA), Q("3/4"));
}

TEST(DocumentTest, RoundTripsThroughJson) {
  const DomainInstance d = ParseDomain(kSmall);
  const DomainInstance again = ParseDomain(DomainToJson(d).dump());
  EXPECT_EQ(again.Weights(), d.Weights());
  EXPECT_EQ(again.Groups(), d.Groups());
  EXPECT_EQ(again.Task("t"), d.Task("t"));
  EXPECT_EQ(again.GetFeature("f").values(), d.GetFeature("f").values());
}

struct BadDocument {
  const char* name;
  const char* text;
};

void PrintTo(const BadDocument& doc, std::ostream* os) { *os << doc.name; }

class MalformedDocumentTest : public ::testing::TestWithParam<BadDocument> {};

TEST_P(MalformedDocumentTest, IsAnInputError) {
  EXPECT_ERROR_CODE(ParseDomain(GetParam().text), ErrorCode::kInput);
}

INSTANTIATE_TEST_SUITE_P(
    Documents, MalformedDocumentTest,
    ::testing::Values(
        BadDocument{"not_json", "{"},
        BadDocument{"not_object", "[]"},
        BadDocument{"no_instances", R"({"tasks": {}})"},
        BadDocument{"empty", R"({"instances": []})"},
        BadDocument{"bad_group",
                    R"({"instances": [{"id": "a", "group": "B", "weight": "1"}]})"},
        BadDocument{"bad_weight",
                    R"({"instances": [{"id": "a", "group": "A", "weight": 0.5}]})"},
        BadDocument{"sum_not_one",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "1/2"}]})"},
        BadDocument{"negative",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "2"},
                                      {"id": "b", "group": "D", "weight": "-1"}]})"},
        BadDocument{"duplicate_id",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "1/2"},
                                      {"id": "a", "group": "D", "weight": "1/2"}]})"},
        BadDocument{"partial_task",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "1/2"},
                                      {"id": "b", "group": "D", "weight": "1/2"}],
                        "tasks": {"t": {"a": 1}}})"},
        BadDocument{"non_binary_label",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "1"}],
                        "tasks": {"t": {"a": 2}}})"},
        BadDocument{"unknown_id_in_feature",
                    R"({"instances": [{"id": "a", "group": "A", "weight": "1"}],
                        "features": {"f": {"a": "0", "z": "1"}}})"}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(DomainTest, UnknownNamesAreInputErrors) {
  const DomainInstance d = ParseDomain(kSmall);
  EXPECT_ERROR_CODE(d.Task("nope"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(d.GetFeature("nope"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(d.IndexOf("nope"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(d.Features({"f", "f"}), ErrorCode::kInput);
}

TEST(DomainTest, CellsFollowDocumentOrder) {
  const DomainInstance d = ParseDomain(kSmall);
  const auto cells = InduceCells(d, d.Features({"f"}));
  EXPECT_EQ(CellNames(d, cells),
            (std::vector<std::vector<std::string>>{{"a", "c"}, {"b", "d"}}));
  EXPECT_EQ(cells.cell_of, (std::vector<std::size_t>{0, 1, 0, 1}));
  // The empty feature set is a single cell.
  EXPECT_EQ(InduceCells(d, FeatureSet()).size(), 1u);
  // Feature order inside the set does not matter.
  EXPECT_EQ(InduceCells(d, d.Features({"f", "g"})),
            InduceCells(d, d.Features({"g", "f"})));
}

TEST(DomainTest, WorkedExampleCells) {
  const DomainInstance d = LoadDomain("fix-12");
  EXPECT_EQ(CellNames(d, InduceCells(d, d.Features({"F"}))),
            (std::vector<std::vector<std::string>>{{"x1", "x5"},
                                                   {"x2", "x3", "x12"},
                                                   {"x4", "x6", "x7"},
                                                   {"x8"},
                                                   {"x9"},
                                                   {"x10", "x11"}}));
  EXPECT_EQ(CellNames(d, InduceCells(d, d.Features(Names("F,f")))),
            (std::vector<std::vector<std::string>>{{"x1", "x5"},
                                                   {"x2", "x3"},
                                                   {"x4", "x6", "x7"},
                                                   {"x8"},
                                                   {"x9"},
                                                   {"x10", "x11"},
                                                   {"x12"}}));
  // The stated preimages of f1, f2, f3 split {x9, x10} from {x11} instead.
  EXPECT_EQ(CellNames(d, InduceCells(d, d.Features(Names("f1,f2,f3")))),
            (std::vector<std::vector<std::string>>{{"x1", "x5"},
                                                   {"x2", "x3", "x12"},
                                                   {"x4", "x6", "x7"},
                                                   {"x8"},
                                                   {"x9", "x10"},
                                                   {"x11"}}));
  EXPECT_EQ(InduceCells(d, d.Features({"Fprime"})),
            InduceCells(d, d.Features(Names("fp1,fp2"))));
}

TEST(DomainTest, PredictionsAndQuadrants) {
  const DomainInstance d = ParseDomain(kSmall);
  const auto cells = InduceCells(d, d.Features({"f"}));
  EXPECT_EQ(Predictions(Classifier{{1, 0}}, cells), (Labeling{1, 0, 1, 0}));
  const QuadrantTable q = QuadrantMasses(d, d.Task("t"));
  EXPECT_EQ(q[Index(Group::kA)][1], Q("1/4"));
  EXPECT_EQ(q[Index(Group::kA)][0], Q("1/2"));
  EXPECT_EQ(q[Index(Group::kD)][0], Q("1/4"));
  EXPECT_EQ(q[Index(Group::kD)][1], Rational(0));
  EXPECT_EQ(QuadrantMass(d, "t", Quadrant{Group::kA, 1}), Q("1/4"));
}

TEST(DomainTest, CellScores) {
  const DomainInstance d = ParseDomain(kSmall);
  EXPECT_EQ(CellScore(d, "t", {"a", "c"}).value, Q("1/3"));
  EXPECT_FALSE(CellScore(d, "t", {"a", "c"}).zero_mass);
  const Score empty = CellScore(d, "t", {"d"});
  EXPECT_TRUE(empty.zero_mass);
  EXPECT_EQ(empty.value, Rational(0));
}

TEST(DomainTest, FixtureNamesResolveToTheDataDirectory) {
  EXPECT_EQ(LoadDomain("fix-8a").size(), 8u);
  EXPECT_EQ(LoadDomain("fix-8b").size(), 8u);
  EXPECT_ERROR_CODE(LoadDomain("/nonexistent/doc.json"), ErrorCode::kInput);
}

}  // namespace
}  // namespace fairaudit
