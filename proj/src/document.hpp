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

// Reading and writing domain documents:
//
//   { "instances": [{"id": "x1", "group": "A", "weight": "1/12"}, ...],
//     "tasks":     {"t": {"x1": 1, ...}},
//     "features":  {"f1": {"x1": "1", ...}, ...},
//     "annotations": { ... } }            // optional, carried verbatim

#ifndef FAIRAUDIT_DOCUMENT_HPP_
#define FAIRAUDIT_DOCUMENT_HPP_

#include <string>
#include <string_view>

#include "domain.hpp"
#include "json.hpp"

namespace fairaudit {

DomainInstance ParseDomain(std::string_view document);
DomainInstance DomainFromJson(const nlohmann::json& document);

// Canonical serialization: instances in order, tasks and features sorted by
// name, weights as "p/q" strings. ParseDomain(DomainToJson(d).dump()) == d.
nlohmann::ordered_json DomainToJson(const DomainInstance& domain);

// Resolves `name_or_path` as a named fixture ("fix-12", "fix-8a", "fix-8b")
// in the data directory, else as a file path. The data directory is
// $FAIRAUDIT_DATA_DIR when set, else the build-time default.
std::string ResolveInputPath(std::string_view name_or_path);
DomainInstance LoadDomain(std::string_view name_or_path);

std::string DataDirectory();

}  // namespace fairaudit

#endif  // FAIRAUDIT_DOCUMENT_HPP_
