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

// Quantified properties, checked exhaustively on small domains or over
// seeded random ones. A failing property is a result, not an error: the
// report carries the first counterexample as a loadable document.

#ifndef FAIRAUDIT_VERIFY_HPP_
#define FAIRAUDIT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fairaudit {

struct VerifyParams {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;  // 0: the property's default
  std::size_t max_size = 0;  // 0: the property's default
};

struct VerifyReport {
  std::string property;
  VerifyParams params;  // with defaults resolved
  bool exhaustive = false;
  bool passed = false;
  std::uint64_t checked = 0;     // cases where the implication was tested
  std::uint64_t violations = 0;
  // Exhaustive two-function properties: violations left after dropping
  // cases where the two functions disagree everywhere on the support.
  std::optional<std::uint64_t> violations_excluding_complements;
  // The first violation, as a document the audit commands can load.
  std::optional<nlohmann::ordered_json> counterexample;
  std::string detail;  // what was quantified over
};

// Property names, in a stable order.
const std::vector<std::string>& PropertyNames();

// Throws Error(kInput) for an unknown property or trials == 0 after
// resolving defaults.
VerifyReport RunVerification(std::string_view property,
                             const VerifyParams& params);

}  // namespace fairaudit

#endif  // FAIRAUDIT_VERIFY_HPP_
