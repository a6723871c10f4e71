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

#include <algorithm>
#include <set>

#include "error.hpp"

namespace fairaudit {

std::string_view GroupName(Group g) { return g == Group::kA ? "A" : "D"; }

std::vector<std::string> Feature::Image() const {
  std::vector<std::string> image;
  std::set<std::string_view> seen;
  for (const auto& v : values_) {
    if (seen.insert(v).second) image.push_back(v);
  }
  return image;
}

std::vector<std::size_t> Feature::Preimage(std::string_view value) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == value) out.push_back(i);
  }
  return out;
}

FeatureSet::FeatureSet(std::vector<Feature> features)
    : features_(std::move(features)) {
  std::set<std::string> names;
  for (const auto& f : features_) {
    if (!names.insert(f.name()).second) {
      ThrowInput("duplicate feature name '" + f.name() + "' in feature set");
    }
  }
}

std::vector<std::string> FeatureSet::Names() const {
  std::vector<std::string> names;
  names.reserve(features_.size());
  for (const auto& f : features_) names.push_back(f.name());
  return names;
}

FeatureSet FeatureSet::With(const Feature& feature) const {
  for (const auto& f : features_) {
    if (f.name() == feature.name()) return *this;
  }
  auto features = features_;
  features.push_back(feature);
  return FeatureSet(std::move(features));
}

DomainInstance::DomainInstance(std::vector<Instance> instances,
                               std::map<std::string, Labeling> tasks,
                               std::map<std::string, Feature> features,
                               std::string annotations_json)
    : instances_(std::move(instances)),
      tasks_(std::move(tasks)),
      features_(std::move(features)),
      annotations_json_(std::move(annotations_json)) {
  if (instances_.empty()) ThrowInput("domain has no instances");
  Rational total;
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    const auto& inst = instances_[i];
    if (inst.id.empty()) ThrowInput("empty instance id");
    if (!index_.emplace(inst.id, i).second) {
      ThrowInput("duplicate instance id '" + inst.id + "'");
    }
    if (inst.weight.Sign() < 0) {
      ThrowInput("negative weight for '" + inst.id + "'");
    }
    total += inst.weight;
  }
  if (total != Rational(1)) {
    ThrowInput("weights sum to " + total.ToString() + ", expected 1");
  }
  for (const auto& [name, labels] : tasks_) {
    if (labels.size() != instances_.size()) {
      ThrowInput("task '" + name + "' does not label every instance");
    }
    for (Label l : labels) {
      if (l > 1) ThrowInput("task '" + name + "' has a non-binary label");
    }
  }
  for (const auto& [name, feature] : features_) {
    if (feature.name() != name) {
      ThrowInternal("feature stored under a different name");
    }
    if (feature.values().size() != instances_.size()) {
      ThrowInput("feature '" + name + "' is not total over the domain");
    }
  }
}

std::vector<Rational> DomainInstance::Weights() const {
  std::vector<Rational> w;
  w.reserve(instances_.size());
  for (const auto& inst : instances_) w.push_back(inst.weight);
  return w;
}

std::vector<Group> DomainInstance::Groups() const {
  std::vector<Group> g;
  g.reserve(instances_.size());
  for (const auto& inst : instances_) g.push_back(inst.group);
  return g;
}

std::size_t DomainInstance::IndexOf(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) ThrowInput("unknown instance id '" + std::string(id) + "'");
  return it->second;
}

const Labeling& DomainInstance::Task(std::string_view name) const {
  const auto it = tasks_.find(std::string(name));
  if (it == tasks_.end()) ThrowInput("unknown task '" + std::string(name) + "'");
  return it->second;
}

const Feature& DomainInstance::GetFeature(std::string_view name) const {
  const auto it = features_.find(std::string(name));
  if (it == features_.end()) {
    ThrowInput("unknown feature '" + std::string(name) + "'");
  }
  return it->second;
}

FeatureSet DomainInstance::Features(
    const std::vector<std::string>& names) const {
  std::vector<Feature> fs;
  fs.reserve(names.size());
  for (const auto& n : names) fs.push_back(GetFeature(n));
  return FeatureSet(std::move(fs));
}

Rational DomainInstance::GroupMass(Group g) const {
  Rational m;
  for (const auto& inst : instances_) {
    if (inst.group == g) m += inst.weight;
  }
  return m;
}

DomainInstance DomainInstance::WithWeights(std::vector<Rational> weights) const {
  if (weights.size() != instances_.size()) {
    ThrowInput("weight vector does not match the instance count");
  }
  auto instances = instances_;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    instances[i].weight = std::move(weights[i]);
  }
  return DomainInstance(std::move(instances), tasks_, features_,
                        annotations_json_);
}

DomainInstance DomainInstance::WithTask(const std::string& name,
                                        Labeling labels) const {
  auto tasks = tasks_;
  tasks[name] = std::move(labels);
  return DomainInstance(instances_, std::move(tasks), features_,
                        annotations_json_);
}

DomainInstance DomainInstance::WithFeature(Feature feature) const {
  auto features = features_;
  const std::string name = feature.name();
  features.insert_or_assign(name, std::move(feature));
  return DomainInstance(instances_, tasks_, std::move(features),
                        annotations_json_);
}

CellPartition InduceCells(const DomainInstance& domain, const FeatureSet& fs) {
  for (const auto& f : fs.features()) {
    if (f.values().size() != domain.size()) {
      ThrowInput("feature '" + f.name() + "' is missing values for some ids");
    }
  }
  CellPartition out;
  out.cell_of.resize(domain.size());
  std::map<std::vector<std::string_view>, std::size_t> key_to_cell;
  std::vector<std::string_view> key(fs.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      key[j] = fs.features()[j].value(i);
    }
    auto [it, inserted] = key_to_cell.try_emplace(key, out.cells.size());
    if (inserted) out.cells.emplace_back();
    out.cells[it->second].push_back(i);
    out.cell_of[i] = it->second;
  }
  return out;
}

Labeling Predictions(const Classifier& h, const CellPartition& cells) {
  if (h.labels.size() != cells.size()) {
    ThrowInput("classifier is not total over the cells");
  }
  Labeling out(cells.cell_of.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = h.labels[cells.cell_of[i]];
  }
  return out;
}

QuadrantTable QuadrantMasses(const DomainInstance& domain,
                             std::span<const Label> truth) {
  QuadrantTable m{};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    m[Index(domain.group(i))][truth[i]] += domain.weight(i);
  }
  return m;
}

Rational QuadrantMass(const DomainInstance& domain, std::string_view task,
                      Quadrant q) {
  const auto& truth = domain.Task(task);
  return QuadrantMasses(domain, truth)[Index(q.group)][q.label];
}

Score CellScore(const DomainInstance& domain, std::span<const Label> truth,
                std::span<const std::size_t> cell) {
  Rational total;
  Rational positive;
  for (std::size_t i : cell) {
    total += domain.weight(i);
    if (truth[i] == 1) positive += domain.weight(i);
  }
  if (total.IsZero()) return Score{Rational(0), true};
  return Score{positive / total, false};
}

Score CellScore(const DomainInstance& domain, std::string_view task,
                const std::vector<std::string>& cell_ids) {
  if (cell_ids.empty()) ThrowPrecondition("score of an empty cell");
  std::vector<std::size_t> cell;
  cell.reserve(cell_ids.size());
  for (const auto& id : cell_ids) cell.push_back(domain.IndexOf(id));
  return CellScore(domain, domain.Task(task), cell);
}

Rational CellMass::Total() const {
  return mass[0][0] + mass[0][1] + mass[1][0] + mass[1][1];
}

std::vector<CellMass> CellMasses(const DomainInstance& domain,
                                 std::span<const Label> truth,
                                 const CellPartition& cells) {
  std::vector<CellMass> out(cells.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    out[cells.cell_of[i]].mass[Index(domain.group(i))][truth[i]] +=
        domain.weight(i);
  }
  return out;
}

std::vector<std::string> CellIds(const DomainInstance& domain,
                                 std::span<const std::size_t> cell) {
  std::vector<std::string> ids;
  ids.reserve(cell.size());
  for (std::size_t i : cell) ids.push_back(domain.id(i));
  return ids;
}

}  // namespace fairaudit
