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

// Classifier-level group fairness and loss.
//
// Every function comes in two forms: one over raw per-instance labelings
// (used by the constructors, which evaluate arbitrary functions X -> {0,1}),
// and one over a cell classifier of a feature set.

#ifndef FAIRAUDIT_METRICS_HPP_
#define FAIRAUDIT_METRICS_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "domain.hpp"
#include "rational.hpp"

namespace fairaudit {

enum class Notion { kDP, kEO, kPRP };

std::string_view NotionName(Notion n);
// Accepts "dp", "eo", "prp" (any case). Throws Error(kInput).
Notion ParseNotion(std::string_view text);

// A conditional rate. Rates over a zero-mass conditioning event are 0 with
// `zero_mass` set, so callers can tell "0" from "vacuous".
struct Rate {
  Rational value;
  bool zero_mass = false;
};

struct GroupRates {
  Rate fpr_a, fpr_d;  // P(h=1 | X_{g,0})
  Rate fnr_a, fnr_d;  // P(h=0 | X_{g,1})
};

struct UnfairnessReport {
  Notion notion = Notion::kEO;
  // DP/EO: the unfairness in [0,1]. PRP: 0 when fair, 1 when unfair.
  Rational value;
  std::optional<GroupRates> rates;                   // EO
  std::optional<std::array<Rational, 2>> positive;   // DP, [A, D]
  // PRP: P(t=1 | h=v, g) indexed [v][group].
  std::optional<std::array<std::array<Rate, 2>, 2>> conditional;
  std::optional<Classifier> witness;

  bool prp_fair() const { return value.IsZero(); }
};

GroupRates ComputeGroupRates(const DomainInstance& domain,
                             std::span<const Label> truth,
                             std::span<const Label> predictions);
GroupRates ComputeGroupRates(const Classifier& h, const DomainInstance& domain,
                             std::string_view task, const FeatureSet& fs);

// ½|FNR_A − FNR_D| + ½|FPR_A − FPR_D|.
Rational EoValue(const GroupRates& rates);

UnfairnessReport EoUnfairness(const DomainInstance& domain,
                              std::span<const Label> truth,
                              std::span<const Label> predictions);
UnfairnessReport EoUnfairness(const Classifier& h,
                              const DomainInstance& domain,
                              std::string_view task, const FeatureSet& fs);

// |P(h=1|A) − P(h=1|D)|. Throws Error(kPrecondition) if a group has zero mass.
UnfairnessReport DpUnfairness(const DomainInstance& domain,
                              std::span<const Label> predictions);
UnfairnessReport DpUnfairness(const Classifier& h,
                              const DomainInstance& domain,
                              const FeatureSet& fs);

// Fair iff, for each prediction value with positive mass in both groups, the
// label-1 rate given that prediction agrees across groups. Prediction values
// that are null in either group impose no constraint.
UnfairnessReport PrpFairness(const DomainInstance& domain,
                             std::span<const Label> truth,
                             std::span<const Label> predictions);
UnfairnessReport PrpIsFair(const Classifier& h, const DomainInstance& domain,
                           std::string_view task, const FeatureSet& fs);

// Unfairness value of `notion` (PRP as 0/1).
Rational UnfairnessValue(Notion notion, const DomainInstance& domain,
                         std::span<const Label> truth,
                         std::span<const Label> predictions);

// Throws Error(kInput) unless 0 < alpha < 1.
void CheckAlpha(const Rational& alpha);

// L_P^α(h) = α·P(h=0, t=1) + (1−α)·P(h=1, t=0).
Rational WeightedLoss(const DomainInstance& domain,
                      std::span<const Label> truth,
                      std::span<const Label> predictions,
                      const Rational& alpha);
Rational WeightedLoss(const Classifier& h, const DomainInstance& domain,
                      std::string_view task, const FeatureSet& fs,
                      const Rational& alpha);

struct SuccessRates {
  Rational rate_a;  // P(t=1 | A)
  Rational rate_d;  // P(t=1 | D)
  bool equal = false;
};
// Throws Error(kPrecondition) if a group has zero mass.
SuccessRates EqualSuccessRates(const DomainInstance& domain,
                               std::span<const Label> truth);
SuccessRates EqualSuccessRates(const DomainInstance& domain,
                               std::string_view task);

}  // namespace fairaudit

#endif  // FAIRAUDIT_METRICS_HPP_
