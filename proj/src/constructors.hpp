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

// Constructions behind the impossibility results: marginals that make a
// fixed classifier maximally DP- or EO-unfair, the mutual equalized-odds
// audit of two labelings, the two-task certificate and the PRP feasibility
// test.
//
// Constructors take a domain only for its shape (ids and groups); its
// weights are ignored and replaced by the constructed marginal.

#ifndef FAIRAUDIT_CONSTRUCTORS_HPP_
#define FAIRAUDIT_CONSTRUCTORS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "audit.hpp"
#include "domain.hpp"
#include "metrics.hpp"
#include "rational.hpp"

namespace fairaudit {

struct AdversarialMarginal {
  std::vector<Rational> weights;  // aligned with the domain's instances
  Notion notion = Notion::kDP;
  Rational target_unfairness;  // the bound the construction guarantees
  Rational achieved;           // re-evaluated under `weights`
  // "dp-split", "eo-case1", "eo-case2" or "eo-case3".
  std::string construction_case;
  // EO only: the label l the construction is built around.
  Label label = 1;
  // EO only: h is constant on A or on D. Not an error; case 3 covers it.
  bool h_constant_on_group = false;
};

// Half the mass uniformly on {x in A : h(x)=y1}, half on {x in D : h(x)=y2}
// for the first of (y1,y2) = (1,0), (0,1) where both sets are nonempty. The
// achieved DP unfairness is exactly 1.
// Throws Error(kPrecondition) if h is constant or a group is empty.
AdversarialMarginal DpAdversarialMarginal(const DomainInstance& shape,
                                          std::span<const Label> h);

// A marginal under which h has EO unfairness at least 1/2 w.r.t. ground
// truth f. Cases are tried in order 1, 2, 3, each for l = 1 then l = 0, with
// B1 = {f=l, h≠l} and B2 = {f=l, h=l}:
//   case 1: ½ on B1∩A, ½ on B2∩D
//   case 2: ½ on B1∩D, ½ on B2∩A
//   case 3: group G has no instance with f=l; ½ on G, ½ on B1∩G'
// Throws Error(kPrecondition) unless f and h are non-constant, h ∉ {f, 1−f}
// and both groups are nonempty.
AdversarialMarginal EoAdversarialMarginal(const DomainInstance& shape,
                                          std::span<const Label> f,
                                          std::span<const Label> h);

struct MutualEoReport {
  Rational eo_f_given_g;  // EO of f with g as ground truth
  Rational eo_g_given_f;
  Rational pos_rate_f_a, pos_rate_f_d;
  Rational pos_rate_g_a, pos_rate_g_d;
  Rational disagreement_mass;  // P[f ≠ g]
  // f and g disagree on every instance of positive mass.
  bool complementary = false;
  // Both EO values are 0 and the functions disagree somewhere.
  bool premise = false;
  // The positive rates of f and of g match across groups whenever the
  // premise holds. False is a counterexample to the implication, reported
  // rather than thrown.
  bool conclusion_holds = true;
};

// Throws Error(kPrecondition) if a group has zero mass.
MutualEoReport MutualEoAudit(const DomainInstance& domain,
                             std::span<const Label> f,
                             std::span<const Label> g);

struct MultitaskCertificate {
  bool adv_fair_task1 = false;         // U_adv^EO(F) = 0 under task 1
  bool adv_fair_task2 = false;
  bool perfect_accuracy_both = false;  // cells label-homogeneous for both
  bool tasks_differ_on_support = false;
  bool equal_success_rates_1 = false;
  bool equal_success_rates_2 = false;
  // The tasks disagree on every instance of positive mass.
  bool tasks_complementary = false;
  // False when the tasks differ on the support, some task lacks equal
  // success rates, and yet all three criteria hold.
  bool invariant_holds = true;
};

// Combines the six criteria and derives `invariant_holds`.
MultitaskCertificate AssembleCertificate(bool adv_fair_task1,
                                         bool adv_fair_task2,
                                         bool perfect_accuracy_both,
                                         bool tasks_differ_on_support,
                                         bool equal_success_rates_1,
                                         bool equal_success_rates_2,
                                         bool tasks_complementary);

// True iff every cell's positive-mass instances share one label.
bool CellsLabelHomogeneous(const DomainInstance& domain,
                           std::span<const Label> truth,
                           const CellPartition& cells);

// Both tasks share the domain's single weight vector by construction.
// Throws Error(kPrecondition) if a group has zero mass.
MultitaskCertificate MultitaskCertificateFor(const DomainInstance& domain,
                                             std::span<const Label> task1,
                                             std::span<const Label> task2,
                                             const CellPartition& cells);
MultitaskCertificate MultitaskCertificateFor(const DomainInstance& domain,
                                             const FeatureSet& fs,
                                             std::string_view task1,
                                             std::string_view task2);

struct PrpFeasibility {
  // Equal success rates. False means no representation is adversarially
  // PRP-fair: the all-one classifier is expressible everywhere and unfair.
  bool feasible = false;
  SuccessRates rates;
  UnfairnessReport all_one;  // PRP report of the all-one classifier
};

// Throws Error(kPrecondition) if a group has zero mass.
PrpFeasibility CheckPrpFeasibility(const DomainInstance& domain,
                                   std::span<const Label> truth);

}  // namespace fairaudit

#endif  // FAIRAUDIT_CONSTRUCTORS_HPP_
