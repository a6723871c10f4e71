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

#include "constructors.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace fairaudit {
namespace {

using Members = std::vector<std::size_t>;

void CheckLabeling(const DomainInstance& domain, std::span<const Label> l,
                   const char* what) {
  if (l.size() != domain.size()) {
    ThrowInput(std::string(what) + " has " + std::to_string(l.size()) +
               " labels, domain has " + std::to_string(domain.size()));
  }
}

bool IsConstant(std::span<const Label> l) {
  return std::adjacent_find(l.begin(), l.end(), std::not_equal_to<>()) ==
         l.end();
}

void CheckBothGroups(const DomainInstance& domain) {
  bool a = false;
  bool d = false;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    (domain.group(i) == Group::kA ? a : d) = true;
  }
  if (!a || !d) ThrowPrecondition("both groups must be nonempty");
}

template <typename Pred>
Members Select(const DomainInstance& domain, Pred&& pred) {
  Members out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

// Mass ½ spread uniformly over each of the two sets.
std::vector<Rational> HalfAndHalf(std::size_t n, const Members& first,
                                  const Members& second) {
  std::vector<Rational> w(n);
  for (std::size_t i : first) {
    w[i] += Rational(1, 2 * static_cast<std::int64_t>(first.size()));
  }
  for (std::size_t i : second) {
    w[i] += Rational(1, 2 * static_cast<std::int64_t>(second.size()));
  }
  return w;
}

}  // namespace

AdversarialMarginal DpAdversarialMarginal(const DomainInstance& shape,
                                          std::span<const Label> h) {
  CheckLabeling(shape, h, "classifier");
  CheckBothGroups(shape);
  if (IsConstant(h)) {
    ThrowPrecondition("classifier is constant; no marginal separates it");
  }
  for (const auto& [y1, y2] : {std::pair<Label, Label>{1, 0}, {0, 1}}) {
    const Members in_a = Select(shape, [&](std::size_t i) {
      return shape.group(i) == Group::kA && h[i] == y1;
    });
    const Members in_d = Select(shape, [&](std::size_t i) {
      return shape.group(i) == Group::kD && h[i] == y2;
    });
    if (in_a.empty() || in_d.empty()) continue;
    AdversarialMarginal out;
    out.weights = HalfAndHalf(shape.size(), in_a, in_d);
    out.notion = Notion::kDP;
    out.target_unfairness = Rational(1);
    out.construction_case = "dp-split";
    out.achieved = DpUnfairness(shape.WithWeights(out.weights), h).value;
    if (out.achieved != out.target_unfairness) {
      ThrowInternal("DP marginal achieves " + out.achieved.ToString());
    }
    return out;
  }
  ThrowInternal("no orientation separates a non-constant classifier");
}

AdversarialMarginal EoAdversarialMarginal(const DomainInstance& shape,
                                          std::span<const Label> f,
                                          std::span<const Label> h) {
  CheckLabeling(shape, f, "ground truth");
  CheckLabeling(shape, h, "classifier");
  CheckBothGroups(shape);
  if (IsConstant(f)) ThrowPrecondition("ground truth is constant");
  if (IsConstant(h)) ThrowPrecondition("classifier is constant");
  bool equal = true;
  bool complement = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    equal = equal && f[i] == h[i];
    complement = complement && f[i] != h[i];
  }
  if (equal) ThrowPrecondition("classifier equals the ground truth");
  if (complement) {
    ThrowPrecondition("classifier is the complement of the ground truth");
  }

  auto group_has = [&](Group g, auto&& pred) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (shape.group(i) == g && pred(i)) return true;
    }
    return false;
  };
  auto constant_on = [&](Group g) {
    return !group_has(g, [&](std::size_t i) { return h[i] == 1; }) ||
           !group_has(g, [&](std::size_t i) { return h[i] == 0; });
  };

  AdversarialMarginal out;
  out.notion = Notion::kEO;
  out.target_unfairness = Rational(1, 2);
  out.h_constant_on_group = constant_on(Group::kA) || constant_on(Group::kD);

  auto b1 = [&](Label l, Group g) {
    return Select(shape, [&](std::size_t i) {
      return shape.group(i) == g && f[i] == l && h[i] != l;
    });
  };
  auto b2 = [&](Label l, Group g) {
    return Select(shape, [&](std::size_t i) {
      return shape.group(i) == g && f[i] == l && h[i] == l;
    });
  };

  bool found = false;
  for (int c = 1; c <= 3 && !found; ++c) {
    for (Label l : {Label{1}, Label{0}}) {
      Members first;
      Members second;
      if (c == 1) {
        first = b1(l, Group::kA);
        second = b2(l, Group::kD);
      } else if (c == 2) {
        first = b1(l, Group::kD);
        second = b2(l, Group::kA);
      } else {
        for (Group g : {Group::kA, Group::kD}) {
          if (group_has(g, [&](std::size_t i) { return f[i] == l; })) continue;
          first = Select(shape,
                         [&](std::size_t i) { return shape.group(i) == g; });
          second = b1(l, Other(g));
          if (!second.empty()) break;
        }
      }
      if (first.empty() || second.empty()) continue;
      out.weights = HalfAndHalf(shape.size(), first, second);
      out.construction_case = "eo-case" + std::to_string(c);
      out.label = l;
      found = true;
      break;
    }
  }
  if (!found) ThrowInternal("EO marginal construction cases exhausted");

  out.achieved = EoUnfairness(shape.WithWeights(out.weights), f, h).value;
  if (out.achieved < out.target_unfairness) {
    ThrowInternal("EO marginal achieves only " + out.achieved.ToString());
  }
  return out;
}

MutualEoReport MutualEoAudit(const DomainInstance& domain,
                             std::span<const Label> f,
                             std::span<const Label> g) {
  CheckLabeling(domain, f, "first labeling");
  CheckLabeling(domain, g, "second labeling");
  const Rational mass_a = domain.GroupMass(Group::kA);
  const Rational mass_d = domain.GroupMass(Group::kD);
  if (mass_a.IsZero() || mass_d.IsZero()) {
    ThrowPrecondition("mutual audit needs positive mass in both groups");
  }
  MutualEoReport out;
  out.eo_f_given_g = EoUnfairness(domain, g, f).value;
  out.eo_g_given_f = EoUnfairness(domain, f, g).value;
  std::array<Rational, 2> f_pos;
  std::array<Rational, 2> g_pos;
  out.complementary = true;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Rational& w = domain.weight(i);
    const auto k = Index(domain.group(i));
    if (f[i] == 1) f_pos[k] += w;
    if (g[i] == 1) g_pos[k] += w;
    if (f[i] != g[i]) {
      out.disagreement_mass += w;
    } else if (!w.IsZero()) {
      out.complementary = false;
    }
  }
  out.pos_rate_f_a = f_pos[0] / mass_a;
  out.pos_rate_f_d = f_pos[1] / mass_d;
  out.pos_rate_g_a = g_pos[0] / mass_a;
  out.pos_rate_g_d = g_pos[1] / mass_d;
  out.premise = out.eo_f_given_g.IsZero() && out.eo_g_given_f.IsZero() &&
                out.disagreement_mass.Sign() > 0;
  out.conclusion_holds = !out.premise ||
                         (out.pos_rate_f_a == out.pos_rate_f_d &&
                          out.pos_rate_g_a == out.pos_rate_g_d);
  return out;
}

MultitaskCertificate AssembleCertificate(bool adv_fair_task1,
                                         bool adv_fair_task2,
                                         bool perfect_accuracy_both,
                                         bool tasks_differ_on_support,
                                         bool equal_success_rates_1,
                                         bool equal_success_rates_2,
                                         bool tasks_complementary) {
  MultitaskCertificate c;
  c.adv_fair_task1 = adv_fair_task1;
  c.adv_fair_task2 = adv_fair_task2;
  c.perfect_accuracy_both = perfect_accuracy_both;
  c.tasks_differ_on_support = tasks_differ_on_support;
  c.equal_success_rates_1 = equal_success_rates_1;
  c.equal_success_rates_2 = equal_success_rates_2;
  c.tasks_complementary = tasks_complementary;
  const bool applies = tasks_differ_on_support &&
                       (!equal_success_rates_1 || !equal_success_rates_2);
  c.invariant_holds =
      !(applies && adv_fair_task1 && adv_fair_task2 && perfect_accuracy_both);
  return c;
}

bool CellsLabelHomogeneous(const DomainInstance& domain,
                           std::span<const Label> truth,
                           const CellPartition& cells) {
  for (const auto& cell : cells.cells) {
    int seen = -1;
    for (std::size_t i : cell) {
      if (domain.weight(i).IsZero()) continue;
      if (seen < 0) {
        seen = truth[i];
      } else if (seen != truth[i]) {
        return false;
      }
    }
  }
  return true;
}

MultitaskCertificate MultitaskCertificateFor(const DomainInstance& domain,
                                             std::span<const Label> task1,
                                             std::span<const Label> task2,
                                             const CellPartition& cells) {
  CheckLabeling(domain, task1, "first task");
  CheckLabeling(domain, task2, "second task");
  const SuccessRates r1 = EqualSuccessRates(domain, task1);
  const SuccessRates r2 = EqualSuccessRates(domain, task2);
  bool differ = false;
  bool complementary = true;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain.weight(i).IsZero()) continue;
    if (task1[i] != task2[i]) {
      differ = true;
    } else {
      complementary = false;
    }
  }
  const bool fair1 =
      AdversarialUnfairness(domain, task1, cells, Notion::kEO).value.IsZero();
  const bool fair2 =
      AdversarialUnfairness(domain, task2, cells, Notion::kEO).value.IsZero();
  const bool perfect = CellsLabelHomogeneous(domain, task1, cells) &&
                       CellsLabelHomogeneous(domain, task2, cells);
  return AssembleCertificate(fair1, fair2, perfect, differ, r1.equal, r2.equal,
                             complementary);
}

MultitaskCertificate MultitaskCertificateFor(const DomainInstance& domain,
                                             const FeatureSet& fs,
                                             std::string_view task1,
                                             std::string_view task2) {
  return MultitaskCertificateFor(domain, domain.Task(task1),
                                 domain.Task(task2), InduceCells(domain, fs));
}

PrpFeasibility CheckPrpFeasibility(const DomainInstance& domain,
                                   std::span<const Label> truth) {
  PrpFeasibility out;
  out.rates = EqualSuccessRates(domain, truth);
  out.feasible = out.rates.equal;
  const Labeling all_one(domain.size(), 1);
  out.all_one = PrpFairness(domain, truth, all_one);
  return out;
}

}  // namespace fairaudit
