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

#include "audit.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <type_traits>

#include "error.hpp"

namespace fairaudit {
namespace {

constexpr std::size_t kMaxEnumerableCells = 62;

void CheckCellBound(std::size_t cells, std::size_t bound) {
  if (cells > bound || cells > kMaxEnumerableCells) {
    ThrowBound("representation has " + std::to_string(cells) +
               " cells, enumeration bound is " + std::to_string(bound));
  }
}

Rational Fraction(const Rational& part, const Rational& whole) {
  return whole.IsZero() ? Rational(0) : part / whole;
}

// Visits the labelings of `positions` in lexicographic order (earlier
// positions more significant), keeping `eval` in sync. All other cells keep
// whatever label `eval` already holds. A callback returning bool stops the
// walk by returning false.
template <typename Fn>
void ForEachAssignment(LabelingEvaluator& eval,
                       const std::vector<std::size_t>& positions, Fn&& fn) {
  const auto visit = [&] {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&>, bool>) {
      return fn();
    } else {
      fn();
      return true;
    }
  };
  for (std::size_t p : positions) eval.Set(p, 0);
  if (!visit()) return;
  if (positions.empty()) return;
  const std::size_t k = positions.size();
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < count; ++step) {
    std::size_t j = k - 1;
    while (eval.labels()[positions[j]] == 1) {
      eval.Set(positions[j], 0);
      --j;
    }
    eval.Set(positions[j], 1);
    if (!visit()) return;
  }
}

std::vector<std::size_t> AllCells(std::size_t k) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = i;
  return out;
}

Classifier ToClassifier(const std::vector<Label>& labels) {
  return Classifier{labels};
}

// Lexicographically smallest maximizer across the sign patterns that attain
// the maximum. `coefficients[p][c]` is cell c's linear weight under pattern p
// and `offsets[p]` the pattern's constant term.
AuditResult MaximizeOverPatterns(
    const std::vector<std::vector<Rational>>& coefficients,
    const std::vector<Rational>& offsets, const Rational& scale) {
  const std::size_t patterns = coefficients.size();
  std::vector<Rational> values(patterns);
  for (std::size_t p = 0; p < patterns; ++p) {
    Rational v = offsets[p];
    for (const auto& c : coefficients[p]) {
      if (c.Sign() > 0) v += c;
    }
    values[p] = scale * v;
  }
  const Rational best = *std::max_element(values.begin(), values.end());
  std::optional<std::vector<Label>> witness;
  for (std::size_t p = 0; p < patterns; ++p) {
    if (values[p] != best) continue;
    std::vector<Label> labels(coefficients[p].size());
    for (std::size_t c = 0; c < labels.size(); ++c) {
      labels[c] = coefficients[p][c].Sign() > 0 ? 1 : 0;
    }
    if (!witness || labels < *witness) witness = std::move(labels);
  }
  AuditResult out;
  out.value = best;
  out.witnesses.push_back(ToClassifier(*witness));
  return out;
}

}  // namespace

std::string_view ObjectiveName(Objective o) {
  switch (o) {
    case Objective::kAdversarial:
      return "adversarial";
    case Objective::kAccuracyDriven:
      return "accuracy";
    case Objective::kFairnessEnabling:
      return "enabling";
  }
  return "?";
}

Objective ParseObjective(std::string_view text) {
  if (text == "adversarial") return Objective::kAdversarial;
  if (text == "accuracy" || text == "accuracy-driven") {
    return Objective::kAccuracyDriven;
  }
  if (text == "enabling" || text == "fairness-enabling") {
    return Objective::kFairnessEnabling;
  }
  ThrowInput("unknown objective '" + std::string(text) + "'");
}

LabelingEvaluator::LabelingEvaluator(const DomainInstance& domain,
                                     std::span<const Label> truth,
                                     const CellPartition& cells)
    : cells_(CellMasses(domain, truth, cells)),
      quadrants_(QuadrantMasses(domain, truth)),
      labels_(cells.size(), 0) {}

void LabelingEvaluator::Reset() {
  for (auto& row : predicted_positive_) {
    for (auto& v : row) v = Rational(0);
  }
  std::fill(labels_.begin(), labels_.end(), Label{0});
}

void LabelingEvaluator::Set(std::size_t cell, Label label) {
  if (labels_[cell] == label) return;
  labels_[cell] = label;
  const auto& m = cells_[cell].mass;
  for (int g = 0; g < 2; ++g) {
    for (int l = 0; l < 2; ++l) {
      if (m[g][l].IsZero()) continue;
      if (label == 1) {
        predicted_positive_[g][l] += m[g][l];
      } else {
        predicted_positive_[g][l] -= m[g][l];
      }
    }
  }
}

void LabelingEvaluator::Assign(std::span<const Label> labels) {
  for (std::size_t c = 0; c < labels.size(); ++c) Set(c, labels[c]);
}

Rational LabelingEvaluator::Eo() const {
  const auto& q = quadrants_;
  const auto& pp = predicted_positive_;
  const Rational fpr_a = Fraction(pp[0][0], q[0][0]);
  const Rational fpr_d = Fraction(pp[1][0], q[1][0]);
  const Rational fnr_a = Fraction(q[0][1] - pp[0][1], q[0][1]);
  const Rational fnr_d = Fraction(q[1][1] - pp[1][1], q[1][1]);
  return Rational(1, 2) * ((fnr_a - fnr_d).Abs() + (fpr_a - fpr_d).Abs());
}

Rational LabelingEvaluator::Dp() const {
  const auto& q = quadrants_;
  const auto& pp = predicted_positive_;
  const Rational mass_a = q[0][0] + q[0][1];
  const Rational mass_d = q[1][0] + q[1][1];
  if (mass_a.IsZero() || mass_d.IsZero()) {
    ThrowPrecondition("demographic parity is undefined: a group has zero mass");
  }
  return ((pp[0][0] + pp[0][1]) / mass_a - (pp[1][0] + pp[1][1]) / mass_d)
      .Abs();
}

Rational LabelingEvaluator::Prp() const {
  const auto& q = quadrants_;
  const auto& pp = predicted_positive_;
  for (int v = 0; v < 2; ++v) {
    std::array<Rational, 2> mass;
    std::array<Rational, 2> positive;
    for (int g = 0; g < 2; ++g) {
      const Rational predicted_one = pp[g][0] + pp[g][1];
      if (v == 1) {
        mass[g] = predicted_one;
        positive[g] = pp[g][1];
      } else {
        mass[g] = q[g][0] + q[g][1] - predicted_one;
        positive[g] = q[g][1] - pp[g][1];
      }
    }
    if (mass[0].IsZero() || mass[1].IsZero()) continue;
    if (positive[0] * mass[1] != positive[1] * mass[0]) return Rational(1);
  }
  return Rational(0);
}

Rational LabelingEvaluator::Unfairness(Notion notion) const {
  switch (notion) {
    case Notion::kDP:
      return Dp();
    case Notion::kEO:
      return Eo();
    case Notion::kPRP:
      return Prp();
  }
  ThrowInternal("unhandled notion");
}

Rational LabelingEvaluator::Loss(const Rational& alpha) const {
  const auto& q = quadrants_;
  const auto& pp = predicted_positive_;
  const Rational false_negative = q[0][1] + q[1][1] - pp[0][1] - pp[1][1];
  const Rational false_positive = pp[0][0] + pp[1][0];
  return alpha * false_negative + (Rational(1) - alpha) * false_positive;
}

AuditResult AdversarialUnfairnessOracle(const DomainInstance& domain,
                                        std::span<const Label> truth,
                                        const CellPartition& cells,
                                        Notion notion,
                                        std::size_t cell_bound) {
  CheckCellBound(cells.size(), cell_bound);
  LabelingEvaluator eval(domain, truth, cells);
  std::optional<Rational> best;
  std::vector<Label> witness;
  ForEachAssignment(eval, AllCells(cells.size()), [&] {
    Rational u = eval.Unfairness(notion);
    if (!best || u > *best) {
      best = std::move(u);
      witness = eval.labels();
    }
  });
  AuditResult out;
  out.objective = Objective::kAdversarial;
  out.notion = notion;
  out.value = *best;
  out.witnesses.push_back(ToClassifier(witness));
  return out;
}

AuditResult AdversarialUnfairnessOracle(const DomainInstance& domain,
                                        std::string_view task,
                                        const FeatureSet& fs, Notion notion,
                                        std::size_t cell_bound) {
  return AdversarialUnfairnessOracle(domain, domain.Task(task),
                                     InduceCells(domain, fs), notion,
                                     cell_bound);
}

AuditResult AdversarialUnfairness(const DomainInstance& domain,
                                  std::span<const Label> truth,
                                  const CellPartition& cells, Notion notion,
                                  const AuditOptions& options) {
  if (notion == Notion::kPRP) {
    return AdversarialUnfairnessOracle(domain, truth, cells, notion,
                                       options.cell_bound);
  }
  const auto masses = CellMasses(domain, truth, cells);
  const auto q = QuadrantMasses(domain, truth);
  const std::size_t k = cells.size();
  AuditResult out;

  if (notion == Notion::kDP) {
    const Rational mass_a = q[0][0] + q[0][1];
    const Rational mass_d = q[1][0] + q[1][1];
    if (mass_a.IsZero() || mass_d.IsZero()) {
      ThrowPrecondition(
          "demographic parity is undefined: a group has zero mass");
    }
    // Labeling C positive moves P(h=1|A) − P(h=1|D) by delta_C.
    std::vector<std::vector<Rational>> coeff(2, std::vector<Rational>(k));
    for (std::size_t c = 0; c < k; ++c) {
      const Rational delta = masses[c].OfGroup(Group::kA) / mass_a -
                             masses[c].OfGroup(Group::kD) / mass_d;
      coeff[0][c] = delta;
      coeff[1][c] = -delta;
    }
    out = MaximizeOverPatterns(coeff, {Rational(0), Rational(0)}, Rational(1));
  } else {
    // FNR_A − FNR_D = c1 + Σ_{h(C)=1} u_C and FPR_A − FPR_D = Σ_{h(C)=1} v_C,
    // with empty quadrants contributing nothing (their rates are pinned to 0).
    const Rational c1 = Rational(q[0][1].IsZero() ? 0 : 1) -
                        Rational(q[1][1].IsZero() ? 0 : 1);
    std::vector<Rational> u(k);
    std::vector<Rational> v(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto& m = masses[c].mass;
      u[c] = Fraction(m[1][1], q[1][1]) - Fraction(m[0][1], q[0][1]);
      v[c] = Fraction(m[0][0], q[0][0]) - Fraction(m[1][0], q[1][0]);
    }
    constexpr std::array<std::array<int, 2>, 4> kSigns{
        {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    std::vector<std::vector<Rational>> coeff(4, std::vector<Rational>(k));
    std::vector<Rational> offsets(4);
    for (std::size_t p = 0; p < 4; ++p) {
      const Rational s1(kSigns[p][0]);
      const Rational s2(kSigns[p][1]);
      offsets[p] = s1 * c1;
      for (std::size_t c = 0; c < k; ++c) coeff[p][c] = s1 * u[c] + s2 * v[c];
    }
    out = MaximizeOverPatterns(coeff, offsets, Rational(1, 2));
  }
  out.objective = Objective::kAdversarial;
  out.notion = notion;
  return out;
}

AuditResult AdversarialUnfairness(const DomainInstance& domain,
                                  std::string_view task, const FeatureSet& fs,
                                  Notion notion, const AuditOptions& options) {
  return AdversarialUnfairness(domain, domain.Task(task),
                               InduceCells(domain, fs), notion, options);
}

namespace {

// Per-cell decision of the loss minimizer: 0, 1, or -1 for a tie.
std::vector<int> CellDecisions(const std::vector<CellMass>& masses,
                               const Rational& alpha, bool pin_zero_mass,
                               Rational* min_loss) {
  std::vector<int> decision(masses.size());
  Rational loss;
  const Rational one_minus = Rational(1) - alpha;
  for (std::size_t c = 0; c < masses.size(); ++c) {
    const Rational cost_one = one_minus * masses[c].OfLabel(0);
    const Rational cost_zero = alpha * masses[c].OfLabel(1);
    if (cost_one < cost_zero) {
      decision[c] = 1;
      loss += cost_one;
    } else if (cost_zero < cost_one) {
      decision[c] = 0;
      loss += cost_zero;
    } else {
      const bool pinned = pin_zero_mass && masses[c].Total().IsZero();
      decision[c] = pinned ? 0 : -1;
      loss += cost_zero;
    }
  }
  if (min_loss) *min_loss = loss;
  return decision;
}

std::vector<std::size_t> TiedCells(const std::vector<int>& decision,
                                   std::size_t tie_cap) {
  std::vector<std::size_t> tied;
  for (std::size_t c = 0; c < decision.size(); ++c) {
    if (decision[c] < 0) tied.push_back(c);
  }
  if (tied.size() >= 63 || (std::uint64_t{1} << tied.size()) > tie_cap) {
    ThrowBound("loss minimizer set has 2^" + std::to_string(tied.size()) +
               " members, cap is " + std::to_string(tie_cap));
  }
  return tied;
}

}  // namespace

MinimizerSet BayesOptimalSet(const DomainInstance& domain,
                             std::span<const Label> truth,
                             const CellPartition& cells, const Rational& alpha,
                             const AuditOptions& options) {
  CheckAlpha(alpha);
  const auto masses = CellMasses(domain, truth, cells);
  MinimizerSet out;
  const auto decision = CellDecisions(masses, alpha,
                                      options.pin_zero_mass_cells,
                                      &out.min_loss);
  const auto tied = TiedCells(decision, options.tie_cap);
  std::vector<Label> labels(cells.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    labels[c] = decision[c] == 1 ? 1 : 0;
  }
  const std::uint64_t count = std::uint64_t{1} << tied.size();
  out.classifiers.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t j = 0; j < tied.size(); ++j) {
      labels[tied[j]] = (mask >> (tied.size() - 1 - j)) & 1U;
    }
    out.classifiers.push_back(Classifier{labels});
  }
  return out;
}

std::vector<Classifier> BayesOptimalSet(const DomainInstance& domain,
                                        std::string_view task,
                                        const FeatureSet& fs,
                                        const Rational& alpha,
                                        const AuditOptions& options) {
  return BayesOptimalSet(domain, domain.Task(task), InduceCells(domain, fs),
                         alpha, options)
      .classifiers;
}

Classifier ThresholdClassifier(const DomainInstance& domain,
                               std::span<const Label> truth,
                               const CellPartition& cells,
                               const Rational& threshold) {
  Classifier h;
  h.labels.reserve(cells.size());
  for (const auto& cell : cells.cells) {
    const Score s = CellScore(domain, truth, cell);
    h.labels.push_back(s.value > threshold ? 1 : 0);
  }
  return h;
}

AuditResult AccuracyDrivenUnfairness(const DomainInstance& domain,
                                     std::span<const Label> truth,
                                     const CellPartition& cells,
                                     const Rational& alpha, Notion notion,
                                     const AuditOptions& options) {
  CheckAlpha(alpha);
  LabelingEvaluator eval(domain, truth, cells);
  Rational min_loss;
  const auto decision = CellDecisions(eval.cell_masses(), alpha,
                                      options.pin_zero_mass_cells, &min_loss);
  const auto tied = TiedCells(decision, options.tie_cap);
  for (std::size_t c = 0; c < decision.size(); ++c) {
    eval.Set(c, decision[c] == 1 ? 1 : 0);
  }
  std::optional<Rational> best;
  std::vector<Label> witness;
  ForEachAssignment(eval, tied, [&] {
    Rational u = eval.Unfairness(notion);
    if (!best || u > *best) {
      best = std::move(u);
      witness = eval.labels();
    }
  });
  AuditResult out;
  out.objective = Objective::kAccuracyDriven;
  out.notion = notion;
  out.value = *best;
  out.witnesses.push_back(ToClassifier(witness));
  out.alpha = alpha;
  out.min_loss = min_loss;
  out.minimizer_count = std::size_t{1} << tied.size();
  return out;
}

AuditResult AccuracyDrivenUnfairness(const DomainInstance& domain,
                                     std::string_view task,
                                     const FeatureSet& fs,
                                     const Rational& alpha, Notion notion,
                                     const AuditOptions& options) {
  return AccuracyDrivenUnfairness(domain, domain.Task(task),
                                  InduceCells(domain, fs), alpha, notion,
                                  options);
}

AuditResult FairnessEnabling(const DomainInstance& domain,
                             std::span<const Label> truth,
                             const CellPartition& cells,
                             const Rational& epsilon, const Rational& eta,
                             const Rational& alpha, Notion notion,
                             const AuditOptions& options) {
  CheckAlpha(alpha);
  CheckCellBound(cells.size(), options.cell_bound);
  LabelingEvaluator eval(domain, truth, cells);
  std::optional<std::vector<Label>> witness;
  ForEachAssignment(eval, AllCells(cells.size()), [&] {
    if (eval.Loss(alpha) <= epsilon && eval.Unfairness(notion) <= eta) {
      witness = eval.labels();
      return false;
    }
    return true;
  });
  AuditResult out;
  out.objective = Objective::kFairnessEnabling;
  out.notion = notion;
  out.value = witness ? Rational(1) : Rational(0);
  if (witness) out.witnesses.push_back(ToClassifier(*witness));
  out.alpha = alpha;
  out.epsilon = epsilon;
  out.eta = eta;
  return out;
}

AuditResult FairnessEnabling(const DomainInstance& domain,
                             std::string_view task, const FeatureSet& fs,
                             const Rational& epsilon, const Rational& eta,
                             const Rational& alpha, Notion notion,
                             const AuditOptions& options) {
  return FairnessEnabling(domain, domain.Task(task), InduceCells(domain, fs),
                          epsilon, eta, alpha, notion, options);
}

std::vector<FrontierPoint> Frontier(const DomainInstance& domain,
                                    std::span<const Label> truth,
                                    const CellPartition& cells,
                                    const Rational& alpha, Notion notion,
                                    const AuditOptions& options) {
  CheckAlpha(alpha);
  CheckCellBound(cells.size(), options.cell_bound);
  LabelingEvaluator eval(domain, truth, cells);
  // Loss -> point; unfairness strictly decreases along the map.
  std::map<Rational, FrontierPoint> front;
  ForEachAssignment(eval, AllCells(cells.size()), [&] {
    Rational loss = eval.Loss(alpha);
    Rational unfairness = eval.Unfairness(notion);
    auto it = front.upper_bound(loss);
    if (it != front.begin() && std::prev(it)->second.unfairness <= unfairness) {
      return;  // weakly dominated by an earlier (lexicographically smaller) h
    }
    while (it != front.end() && it->second.unfairness >= unfairness) {
      it = front.erase(it);
    }
    front.insert_or_assign(
        loss, FrontierPoint{loss, unfairness, ToClassifier(eval.labels())});
  });
  std::vector<FrontierPoint> out;
  out.reserve(front.size());
  for (auto& [loss, point] : front) out.push_back(std::move(point));
  return out;
}

std::vector<FrontierPoint> Frontier(const DomainInstance& domain,
                                    std::string_view task,
                                    const FeatureSet& fs,
                                    const Rational& alpha, Notion notion,
                                    const AuditOptions& options) {
  return Frontier(domain, domain.Task(task), InduceCells(domain, fs), alpha,
                  notion, options);
}

}  // namespace fairaudit
