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

#include "metrics.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "error.hpp"

namespace fairaudit {
namespace {

Rate Ratio(const Rational& part, const Rational& whole) {
  if (whole.IsZero()) return Rate{Rational(0), true};
  return Rate{part / whole, false};
}

void CheckSizes(const DomainInstance& domain, std::span<const Label> a,
                std::span<const Label> b) {
  if (a.size() != domain.size() || b.size() != domain.size()) {
    ThrowInput("labeling size does not match the domain");
  }
}

}  // namespace

std::string_view NotionName(Notion n) {
  switch (n) {
    case Notion::kDP:
      return "dp";
    case Notion::kEO:
      return "eo";
    case Notion::kPRP:
      return "prp";
  }
  return "?";
}

Notion ParseNotion(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "dp") return Notion::kDP;
  if (s == "eo") return Notion::kEO;
  if (s == "prp") return Notion::kPRP;
  ThrowInput("unknown fairness notion '" + std::string(text) + "'");
}

GroupRates ComputeGroupRates(const DomainInstance& domain,
                             std::span<const Label> truth,
                             std::span<const Label> predictions) {
  CheckSizes(domain, truth, predictions);
  // [group][label] quadrant mass and the mass of its misclassified part.
  QuadrantTable total{};
  QuadrantTable wrong{};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto g = Index(domain.group(i));
    total[g][truth[i]] += domain.weight(i);
    if (predictions[i] != truth[i]) wrong[g][truth[i]] += domain.weight(i);
  }
  GroupRates r;
  r.fpr_a = Ratio(wrong[0][0], total[0][0]);
  r.fpr_d = Ratio(wrong[1][0], total[1][0]);
  r.fnr_a = Ratio(wrong[0][1], total[0][1]);
  r.fnr_d = Ratio(wrong[1][1], total[1][1]);
  return r;
}

GroupRates ComputeGroupRates(const Classifier& h, const DomainInstance& domain,
                             std::string_view task, const FeatureSet& fs) {
  const auto preds = Predictions(h, InduceCells(domain, fs));
  return ComputeGroupRates(domain, domain.Task(task), preds);
}

Rational EoValue(const GroupRates& r) {
  const Rational half(1, 2);
  return half * (r.fnr_a.value - r.fnr_d.value).Abs() +
         half * (r.fpr_a.value - r.fpr_d.value).Abs();
}

UnfairnessReport EoUnfairness(const DomainInstance& domain,
                              std::span<const Label> truth,
                              std::span<const Label> predictions) {
  UnfairnessReport out;
  out.notion = Notion::kEO;
  out.rates = ComputeGroupRates(domain, truth, predictions);
  out.value = EoValue(*out.rates);
  return out;
}

UnfairnessReport EoUnfairness(const Classifier& h,
                              const DomainInstance& domain,
                              std::string_view task, const FeatureSet& fs) {
  const auto preds = Predictions(h, InduceCells(domain, fs));
  auto out = EoUnfairness(domain, domain.Task(task), preds);
  out.witness = h;
  return out;
}

UnfairnessReport DpUnfairness(const DomainInstance& domain,
                              std::span<const Label> predictions) {
  if (predictions.size() != domain.size()) {
    ThrowInput("labeling size does not match the domain");
  }
  std::array<Rational, 2> group_mass{};
  std::array<Rational, 2> positive_mass{};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto g = Index(domain.group(i));
    group_mass[g] += domain.weight(i);
    if (predictions[i] == 1) positive_mass[g] += domain.weight(i);
  }
  if (group_mass[0].IsZero() || group_mass[1].IsZero()) {
    ThrowPrecondition("demographic parity is undefined: a group has zero mass");
  }
  UnfairnessReport out;
  out.notion = Notion::kDP;
  out.positive = std::array<Rational, 2>{positive_mass[0] / group_mass[0],
                                         positive_mass[1] / group_mass[1]};
  out.value = ((*out.positive)[0] - (*out.positive)[1]).Abs();
  return out;
}

UnfairnessReport DpUnfairness(const Classifier& h,
                              const DomainInstance& domain,
                              const FeatureSet& fs) {
  const auto preds = Predictions(h, InduceCells(domain, fs));
  auto out = DpUnfairness(domain, preds);
  out.witness = h;
  return out;
}

UnfairnessReport PrpFairness(const DomainInstance& domain,
                             std::span<const Label> truth,
                             std::span<const Label> predictions) {
  CheckSizes(domain, truth, predictions);
  // [prediction][group]
  std::array<std::array<Rational, 2>, 2> mass{};
  std::array<std::array<Rational, 2>, 2> positive{};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto g = Index(domain.group(i));
    mass[predictions[i]][g] += domain.weight(i);
    if (truth[i] == 1) positive[predictions[i]][g] += domain.weight(i);
  }
  std::array<std::array<Rate, 2>, 2> cond;
  bool fair = true;
  for (int v = 0; v < 2; ++v) {
    for (int g = 0; g < 2; ++g) cond[v][g] = Ratio(positive[v][g], mass[v][g]);
    if (!cond[v][0].zero_mass && !cond[v][1].zero_mass &&
        cond[v][0].value != cond[v][1].value) {
      fair = false;
    }
  }
  UnfairnessReport out;
  out.notion = Notion::kPRP;
  out.value = fair ? Rational(0) : Rational(1);
  out.conditional = cond;
  return out;
}

UnfairnessReport PrpIsFair(const Classifier& h, const DomainInstance& domain,
                           std::string_view task, const FeatureSet& fs) {
  const auto preds = Predictions(h, InduceCells(domain, fs));
  auto out = PrpFairness(domain, domain.Task(task), preds);
  out.witness = h;
  return out;
}

Rational UnfairnessValue(Notion notion, const DomainInstance& domain,
                         std::span<const Label> truth,
                         std::span<const Label> predictions) {
  switch (notion) {
    case Notion::kDP:
      return DpUnfairness(domain, predictions).value;
    case Notion::kEO:
      return EoUnfairness(domain, truth, predictions).value;
    case Notion::kPRP:
      return PrpFairness(domain, truth, predictions).value;
  }
  ThrowInternal("unhandled notion");
}

void CheckAlpha(const Rational& alpha) {
  if (alpha.Sign() <= 0 || alpha >= Rational(1)) {
    ThrowInput("alpha must lie strictly between 0 and 1, got " +
               alpha.ToString());
  }
}

Rational WeightedLoss(const DomainInstance& domain,
                      std::span<const Label> truth,
                      std::span<const Label> predictions,
                      const Rational& alpha) {
  CheckAlpha(alpha);
  CheckSizes(domain, truth, predictions);
  Rational false_negative;
  Rational false_positive;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (predictions[i] == truth[i]) continue;
    if (truth[i] == 1) {
      false_negative += domain.weight(i);
    } else {
      false_positive += domain.weight(i);
    }
  }
  return alpha * false_negative + (Rational(1) - alpha) * false_positive;
}

Rational WeightedLoss(const Classifier& h, const DomainInstance& domain,
                      std::string_view task, const FeatureSet& fs,
                      const Rational& alpha) {
  const auto preds = Predictions(h, InduceCells(domain, fs));
  return WeightedLoss(domain, domain.Task(task), preds, alpha);
}

SuccessRates EqualSuccessRates(const DomainInstance& domain,
                               std::span<const Label> truth) {
  const auto q = QuadrantMasses(domain, truth);
  const Rational mass_a = q[0][0] + q[0][1];
  const Rational mass_d = q[1][0] + q[1][1];
  if (mass_a.IsZero() || mass_d.IsZero()) {
    ThrowPrecondition("success rates are undefined: a group has zero mass");
  }
  SuccessRates out{q[0][1] / mass_a, q[1][1] / mass_d, false};
  out.equal = out.rate_a == out.rate_d;
  return out;
}

SuccessRates EqualSuccessRates(const DomainInstance& domain,
                               std::string_view task) {
  return EqualSuccessRates(domain, domain.Task(task));
}

}  // namespace fairaudit
