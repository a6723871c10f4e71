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

// Whether a feature helps or hurts fairness depends on the other features.
//
// A generic pair (f, P) admits sets C1, C2, C3 with
//   (1) P(C1) > P(C2)
//   (2) C1 ⊆ f⁻¹(y1), C2 ⊆ f⁻¹(y2), y1 ≠ y2
//   (3) C1 ⊆ t⁻¹(l1), C2 ⊆ X_{G1,l2}
//   (4) C3 ⊆ f⁻¹(y3)
//   (5) P(C3 ∩ t⁻¹(l1)) ≥ P(C3 ∩ t⁻¹(l2))
//   (6) P(C3 ∩ X_{G2,l2}) / P(X_{G2,l2}) ≥ P((C2∪C3) ∩ X_{G1,l2}) / P(X_{G1,l2})
// where l2, G2 are the other label and group. For such a pair one feature
// set F gains fairness from f and another, F', loses it (accuracy-driven EO
// audits at α = ½).
//
// The six conditions alone admit degenerate witnesses (empty or overlapping
// sets, C2 of mass zero, a tie in (5), an empty X_{G,l2}) under which the two
// feature sets do not separate. Witnesses here must also be nondegenerate;
// see GenericCheck.

#ifndef FAIRAUDIT_CONTEXT_HPP_
#define FAIRAUDIT_CONTEXT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "audit.hpp"
#include "domain.hpp"
#include "rational.hpp"

namespace fairaudit {

struct NonCommitting {
  bool value = false;
  // The first pair of distinct values, by first appearance, that both meet
  // all four quadrants.
  std::optional<std::pair<std::string, std::string>> values;
};

// Set-theoretic: weights play no role.
NonCommitting IsNonCommitting(const Feature& f, const DomainInstance& domain,
                              std::span<const Label> truth);

struct KAnonymity {
  bool value = true;
  // First (value, group, label) combination with 1..k-1 instances.
  std::optional<std::string> value_of_violation;
  std::optional<Group> group_of_violation;
  std::optional<Label> label_of_violation;
  std::size_t count_of_violation = 0;
};

// Throws Error(kInput) if k == 0.
KAnonymity IsKAnonymous(const Feature& f, const DomainInstance& domain,
                        std::span<const Label> truth, std::size_t k);

struct GenericWitness {
  std::vector<std::size_t> c1, c2, c3;  // instance positions, ascending
  std::string y1, y2, y3;
  Label l1 = 1;
  Group g1 = Group::kA;

  Label l2() const { return static_cast<Label>(1 - l1); }
  Group g2() const { return Other(g1); }
};

struct GenericCheck {
  std::array<bool, 6> conditions{};  // (1) .. (6) as printed
  // Nonempty pairwise-disjoint sets, P(C2) > 0, positive mass in X_{G1,l2}
  // and X_{G2,l2}, strict inequality in (5).
  bool nondegenerate = false;
  Rational condition6_lhs;  // P(C3 ∩ X_{G2,l2}) / P(X_{G2,l2})
  Rational condition6_rhs;  // P((C2∪C3) ∩ X_{G1,l2}) / P(X_{G1,l2})

  bool ok() const {
    for (bool c : conditions) {
      if (!c) return false;
    }
    return nondegenerate;
  }
};

GenericCheck VerifyGenericWitness(const Feature& f,
                                  const DomainInstance& domain,
                                  std::span<const Label> truth,
                                  const GenericWitness& w);

// Exhaustive search in a fixed order: (l1, G1) over (1,A), (1,D), (0,A),
// (0,D); values y1, y2, y3 in lexicographic order; C2 a single instance of
// positive mass; C3 a subset of f⁻¹(y3) \ C2 tried smallest-first; C1 the
// largest admissible set, f⁻¹(y1) ∩ t⁻¹(l1) \ C3. Every returned witness
// passes VerifyGenericWitness. Throws Error(kBoundExceeded) when the domain
// has more than `size_bound` instances.
std::optional<GenericWitness> FindGenericWitness(const Feature& f,
                                                 const DomainInstance& domain,
                                                 std::span<const Label> truth,
                                                 std::size_t size_bound = 16);

struct GenericConstruction {
  std::vector<Rational> weights;  // aligned with the domain's instances
  GenericWitness witness;
  std::vector<std::size_t> c4;
  bool two_anonymous = false;
  // C3 meets all four quadrants. Without 2-anonymity f⁻¹(y1) may hold a
  // single positive per group, and C3 then gives up one to C1.
  bool c3_meets_all_quadrants = false;
  GenericCheck check;
};

// Weights 1/5 on C1, 1/10 on C2, 3/10 on C3 ∩ t⁻¹(1), 1/5 on C3 ∩ X_{D,0},
// 1/5 on C4, each spread uniformly, 0 elsewhere; G1 = A, l1 = 1, y3 = y1.
// C2, C4 split f⁻¹(y2) ∩ X_{A,0}.
// Requires f non-committing (Error(kPrecondition) naming "non-committing"
// otherwise) and some non-committing pair whose X_{A,0} part for y2 has at
// least two instances. 2-anonymity is reported, not required.
GenericConstruction ConstructGenericDistribution(const Feature& f,
                                                 const DomainInstance& domain,
                                                 std::span<const Label> truth);

struct ContextPair {
  // Adding f raises U_acc for fs_increasing and lowers it for fs_decreasing.
  FeatureSet fs_increasing;  // C1∪C2 and C3 kept whole, rest split by label
  FeatureSet fs_decreasing;  // C1∪C2 kept whole, rest split by label
  Rational increasing_without, increasing_with;
  Rational decreasing_without, decreasing_with;
  bool increasing_holds = false;  // increasing_with > increasing_without
  bool decreasing_holds = false;  // decreasing_with < decreasing_without
};

// `domain` must carry the weights under which the witness is generic.
// Throws Error(kPrecondition) if it is not, and Error(kInternal) if either
// strict inequality fails.
ContextPair ConstructContextFeaturesets(const Feature& f,
                                        const DomainInstance& domain,
                                        std::span<const Label> truth,
                                        const GenericWitness& witness);

enum class Direction { kIncrease, kDecrease, kNeutral };
std::string_view DirectionName(Direction d);

struct DeletionParams {
  Notion notion = Notion::kEO;
  Rational alpha{1, 2};
  Rational epsilon{0};
  Rational eta{0};
  AuditOptions options;
};

struct DeletionEffect {
  Rational without, with;  // enabling audits report 1 or 0
  Direction direction = Direction::kNeutral;
};

DeletionEffect MeasureDeletionEffect(const DomainInstance& domain,
                                     std::span<const Label> truth,
                                     const FeatureSet& fs, const Feature& f,
                                     Objective objective,
                                     const DeletionParams& params = {});

}  // namespace fairaudit

#endif  // FAIRAUDIT_CONTEXT_HPP_
