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

#include "document.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"

#ifndef FAIRAUDIT_DEFAULT_DATA_DIR
#define FAIRAUDIT_DEFAULT_DATA_DIR "data"
#endif

namespace fairaudit {
namespace {

using nlohmann::json;

const json& Member(const json& object, const char* key, const char* where) {
  if (!object.is_object() || !object.contains(key)) {
    ThrowInput(std::string(where) + ": missing \"" + key + "\"");
  }
  return object.at(key);
}

std::string ValueString(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_boolean()) return v.dump();
  ThrowInput(where + ": feature values must be strings or integers");
}

Rational WeightOf(const json& v, const std::string& id) {
  if (v.is_string()) return Rational::Parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  ThrowInput("weight of '" + id + "' must be a \"p/q\" string");
}

}  // namespace

DomainInstance DomainFromJson(const json& doc) {
  if (!doc.is_object()) ThrowInput("document must be a JSON object");
  const json& raw_instances = Member(doc, "instances", "document");
  if (!raw_instances.is_array()) ThrowInput("\"instances\" must be an array");

  std::vector<Instance> instances;
  std::map<std::string, std::size_t> index;
  for (const json& item : raw_instances) {
    const json& id = Member(item, "id", "instance");
    if (!id.is_string()) ThrowInput("instance id must be a string");
    const std::string sid = id.get<std::string>();
    const json& group = Member(item, "group", "instance");
    Group g;
    if (group == "A") {
      g = Group::kA;
    } else if (group == "D") {
      g = Group::kD;
    } else {
      ThrowInput("instance '" + sid + "': group must be \"A\" or \"D\"");
    }
    Rational w = WeightOf(Member(item, "weight", "instance"), sid);
    if (!index.emplace(sid, instances.size()).second) {
      ThrowInput("duplicate instance id '" + sid + "'");
    }
    instances.push_back(Instance{sid, g, std::move(w)});
  }

  std::map<std::string, Labeling> tasks;
  if (doc.contains("tasks")) {
    const json& raw_tasks = doc.at("tasks");
    if (!raw_tasks.is_object()) ThrowInput("\"tasks\" must be an object");
    for (const auto& [name, labels] : raw_tasks.items()) {
      if (!labels.is_object()) {
        ThrowInput("task '" + name + "' must map ids to labels");
      }
      Labeling out(instances.size(), 0);
      std::vector<bool> seen(instances.size(), false);
      for (const auto& [id, label] : labels.items()) {
        const auto it = index.find(id);
        if (it == index.end()) {
          ThrowInput("task '" + name + "' labels unknown id '" + id + "'");
        }
        if (!label.is_number_integer() ||
            (label.get<int>() != 0 && label.get<int>() != 1)) {
          ThrowInput("task '" + name + "': label of '" + id +
                     "' must be 0 or 1");
        }
        out[it->second] = static_cast<Label>(label.get<int>());
        seen[it->second] = true;
      }
      for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!seen[i]) {
          ThrowInput("task '" + name + "' is missing a label for '" +
                     instances[i].id + "'");
        }
      }
      tasks.emplace(name, std::move(out));
    }
  }

  std::map<std::string, Feature> features;
  if (doc.contains("features")) {
    const json& raw_features = doc.at("features");
    if (!raw_features.is_object()) ThrowInput("\"features\" must be an object");
    for (const auto& [name, values] : raw_features.items()) {
      if (!values.is_object()) {
        ThrowInput("feature '" + name + "' must map ids to values");
      }
      std::vector<std::string> out(instances.size());
      std::vector<bool> seen(instances.size(), false);
      for (const auto& [id, value] : values.items()) {
        const auto it = index.find(id);
        if (it == index.end()) {
          ThrowInput("feature '" + name + "' has unknown id '" + id + "'");
        }
        out[it->second] = ValueString(value, "feature '" + name + "'");
        seen[it->second] = true;
      }
      for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!seen[i]) {
          ThrowInput("feature '" + name + "' is missing a value for '" +
                     instances[i].id + "'");
        }
      }
      features.emplace(name, Feature(name, std::move(out)));
    }
  }

  std::string annotations;
  if (doc.contains("annotations")) annotations = doc.at("annotations").dump();
  return DomainInstance(std::move(instances), std::move(tasks),
                        std::move(features), std::move(annotations));
}

DomainInstance ParseDomain(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    ThrowInput(std::string("document is not valid JSON: ") + e.what());
  }
  return DomainFromJson(doc);
}

nlohmann::ordered_json DomainToJson(const DomainInstance& domain) {
  nlohmann::ordered_json doc;
  auto& instances = doc["instances"] = nlohmann::ordered_json::array();
  for (const auto& inst : domain.instances()) {
    instances.push_back({{"id", inst.id},
                         {"group", std::string(GroupName(inst.group))},
                         {"weight", inst.weight.ToString()}});
  }
  auto& tasks = doc["tasks"] = nlohmann::ordered_json::object();
  for (const auto& [name, labels] : domain.tasks()) {
    auto& t = tasks[name] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      t[domain.id(i)] = static_cast<int>(labels[i]);
    }
  }
  auto& features = doc["features"] = nlohmann::ordered_json::object();
  for (const auto& [name, feature] : domain.features()) {
    auto& f = features[name] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      f[domain.id(i)] = feature.value(i);
    }
  }
  if (!domain.annotations_json().empty()) {
    doc["annotations"] =
        nlohmann::ordered_json::parse(domain.annotations_json());
  }
  return doc;
}

std::string DataDirectory() {
  if (const char* env = std::getenv("FAIRAUDIT_DATA_DIR"); env && *env) {
    return env;
  }
  return FAIRAUDIT_DEFAULT_DATA_DIR;
}

std::string ResolveInputPath(std::string_view name_or_path) {
  const std::string name(name_or_path);
  if (name == "fix-12" || name == "fix-8a" || name == "fix-8b") {
    return (std::filesystem::path(DataDirectory()) / (name + ".json")).string();
  }
  return name;
}

DomainInstance LoadDomain(std::string_view name_or_path) {
  const std::string path = ResolveInputPath(name_or_path);
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInput("cannot open input '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDomain(buffer.str());
}

}  // namespace fairaudit
