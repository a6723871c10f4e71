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

// Commands and their reports. A report echoes every resolved argument and a
// digest of the input document, so re-running the echoed command on the same
// document reproduces it byte for byte. Rationals are "p/q" strings with a
// 6-place decimal alongside for reading.

#ifndef FAIRAUDIT_REPORT_HPP_
#define FAIRAUDIT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domain.hpp"
#include "generator.hpp"
#include "json.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace fairaudit {

inline constexpr std::string_view kReportSchema = "fairaudit.report/1";

struct LoadedDomain {
  std::string source;  // fixture name or path as given
  std::string bytes;   // the document exactly as read
  DomainInstance domain;
};

LoadedDomain LoadDocument(std::string_view name_or_path);
LoadedDomain ParseDocument(std::string source, std::string bytes);

struct Report {
  nlohmann::ordered_json body;
  // False when a verified invariant failed; the CLI exits with 5.
  bool passed = true;
};

struct AuditArgs {
  std::vector<std::string> features;
  std::string task = "t";
  std::string notion = "eo";
  // adversarial, accuracy, enabling or frontier.
  std::string objective = "adversarial";
  std::optional<std::string> alpha, epsilon, eta;
  std::size_t cell_bound = 22;
};

struct ConstructArgs {
  // dp-marginal, eo-marginal, generic-pair, context-pair, mutual-eo,
  // multitask, prp or deletion.
  std::string kind;
  std::string task = "t";
  std::vector<std::string> features;
  std::string notion = "eo";
  std::string objective = "adversarial";
  std::optional<std::string> alpha, epsilon, eta;
  std::optional<std::string> h_task;    // classifier given as a task name
  std::optional<std::string> labeling;  // or as a 0/1 string in id order
  std::optional<std::string> feature;
  std::optional<std::string> task2;
  std::size_t cell_bound = 22;
  std::size_t search_bound = 16;
};

Report RunAudit(const LoadedDomain& input, const AuditArgs& args);
Report RunConstruct(const LoadedDomain& input, const ConstructArgs& args);
Report RunVerify(std::string_view property, const VerifyParams& params);

// The generated document, pretty-printed with a trailing newline.
std::string GenerateDocument(const GeneratorParams& params);

// "sha256:<hex>" of `bytes`.
std::string Sha256Digest(std::string_view bytes);

std::string RenderJson(const Report& report);
std::string RenderText(const Report& report);

// {"exact": "p/q", "decimal": "0.dddddd"}
nlohmann::ordered_json RationalJson(const Rational& r);

}  // namespace fairaudit

#endif  // FAIRAUDIT_REPORT_HPP_
