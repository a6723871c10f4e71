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

// The finite probabilistic universe: instances split into an advantaged (A)
// and a disadvantaged (D) group, deterministic binary tasks, one exact weight
// vector, finite-valued features and the cell partitions they induce.
//
// Instances are addressed by their position in the document. That position
// is also the canonical id order used for cells and witnesses.

#ifndef FAIRAUDIT_DOMAIN_HPP_
#define FAIRAUDIT_DOMAIN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace fairaudit {

enum class Group : std::uint8_t { kA = 0, kD = 1 };

// Binary label, 0 or 1.
using Label = std::uint8_t;

// Per-instance binary values: a ground truth or a classifier's predictions.
using Labeling = std::vector<Label>;

inline Group Other(Group g) { return g == Group::kA ? Group::kD : Group::kA; }
inline std::size_t Index(Group g) { return static_cast<std::size_t>(g); }
std::string_view GroupName(Group g);

// X_{g,l}: the instances of group g carrying label l.
struct Quadrant {
  Group group;
  Label label;
};

struct Instance {
  std::string id;
  Group group;
  Rational weight;
};

class Feature {
 public:
  Feature(std::string name, std::vector<std::string> values)
      : name_(std::move(name)), values_(std::move(values)) {}

  const std::string& name() const { return name_; }
  const std::vector<std::string>& values() const { return values_; }
  const std::string& value(std::size_t instance) const {
    return values_[instance];
  }
  // Distinct values ordered by the first instance carrying them.
  std::vector<std::string> Image() const;
  std::vector<std::size_t> Preimage(std::string_view value) const;

 private:
  std::string name_;
  std::vector<std::string> values_;  // aligned with the domain's instances
};

// An ordered set of features with unique names. May be empty, in which case
// the whole domain is a single cell.
class FeatureSet {
 public:
  FeatureSet() = default;
  explicit FeatureSet(std::vector<Feature> features);

  const std::vector<Feature>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }
  std::vector<std::string> Names() const;

  // F ∪ {f}. Adding a feature whose name is already present is a no-op.
  FeatureSet With(const Feature& feature) const;

 private:
  std::vector<Feature> features_;
};

class DomainInstance {
 public:
  // Validates every invariant: unique ids, nonnegative weights summing to
  // exactly 1, tasks and features total over the instances.
  DomainInstance(std::vector<Instance> instances,
                 std::map<std::string, Labeling> tasks,
                 std::map<std::string, Feature> features,
                 std::string annotations_json = {});

  std::size_t size() const { return instances_.size(); }
  const std::vector<Instance>& instances() const { return instances_; }
  const Instance& instance(std::size_t i) const { return instances_[i]; }
  const std::string& id(std::size_t i) const { return instances_[i].id; }
  Group group(std::size_t i) const { return instances_[i].group; }
  const Rational& weight(std::size_t i) const { return instances_[i].weight; }
  std::vector<Rational> Weights() const;
  std::vector<Group> Groups() const;

  // Throws Error(kInput) for an unknown id.
  std::size_t IndexOf(std::string_view id) const;

  const std::map<std::string, Labeling>& tasks() const { return tasks_; }
  const std::map<std::string, Feature>& features() const { return features_; }
  // Throws Error(kInput) for an unknown name.
  const Labeling& Task(std::string_view name) const;
  const Feature& GetFeature(std::string_view name) const;
  FeatureSet Features(const std::vector<std::string>& names) const;

  // Raw JSON text of the document's "annotations" member, empty if absent.
  const std::string& annotations_json() const { return annotations_json_; }

  Rational GroupMass(Group g) const;

  // Copies with one component replaced; the result is re-validated.
  DomainInstance WithWeights(std::vector<Rational> weights) const;
  DomainInstance WithTask(const std::string& name, Labeling labels) const;
  DomainInstance WithFeature(Feature feature) const;

 private:
  std::vector<Instance> instances_;
  std::map<std::string, Labeling> tasks_;
  std::map<std::string, Feature> features_;
  std::string annotations_json_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Cells of the equivalence "all features agree". Each cell lists instance
// positions in ascending order; cells are ordered by their least member.
struct CellPartition {
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> cell_of;  // instance position -> cell index

  std::size_t size() const { return cells.size(); }
  friend bool operator==(const CellPartition&, const CellPartition&) = default;
};

// A labeling of the cells of some partition, i.e. a classifier expressible
// over the representation that induced it.
struct Classifier {
  std::vector<Label> labels;  // one per cell, canonical cell order

  friend bool operator==(const Classifier&, const Classifier&) = default;
  friend auto operator<=>(const Classifier&, const Classifier&) = default;
};

// Throws Error(kInput) if a feature is not total over the domain.
CellPartition InduceCells(const DomainInstance& domain, const FeatureSet& fs);

// Lifts a cell labeling to a per-instance labeling.
Labeling Predictions(const Classifier& h, const CellPartition& cells);

// Quadrant masses P(X_{g,l}) indexed [group][label].
using QuadrantTable = std::array<std::array<Rational, 2>, 2>;

QuadrantTable QuadrantMasses(const DomainInstance& domain,
                             std::span<const Label> truth);
Rational QuadrantMass(const DomainInstance& domain, std::string_view task,
                      Quadrant q);

// s_t^P(C): weighted fraction of label-1 instances in the cell. A zero-mass
// cell has score 0 with `zero_mass` set.
struct Score {
  Rational value;
  bool zero_mass = false;
};
Score CellScore(const DomainInstance& domain, std::span<const Label> truth,
                std::span<const std::size_t> cell);
Score CellScore(const DomainInstance& domain, std::string_view task,
                const std::vector<std::string>& cell_ids);

// Per-cell quadrant masses P(C ∩ X_{g,l}) indexed [group][label]. Audits work
// from these tables rather than from the instances.
struct CellMass {
  QuadrantTable mass{};

  Rational Total() const;
  Rational OfLabel(Label l) const { return mass[0][l] + mass[1][l]; }
  Rational OfGroup(Group g) const {
    return mass[Index(g)][0] + mass[Index(g)][1];
  }
};
std::vector<CellMass> CellMasses(const DomainInstance& domain,
                                 std::span<const Label> truth,
                                 const CellPartition& cells);

// Instance ids of a cell, for reporting.
std::vector<std::string> CellIds(const DomainInstance& domain,
                                 std::span<const std::size_t> cell);

}  // namespace fairaudit

#endif  // FAIRAUDIT_DOMAIN_HPP_
