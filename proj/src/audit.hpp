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

// Auditing a representation against three kinds of decision maker:
//
//   adversarial       U_adv(F)   = max over every h in H_F of U(h)
//   accuracy-driven   U_acc^α(F) = max of U(h) over the minimizers of L_P^α
//   fairness-enabling            some h in H_F has L_P^α(h) <= ε, U(h) <= η
//
// A classifier over F is a labeling of the cells of F, so H_F has exactly
// 2^|cells| members. Whenever several classifiers are optimal the reported
// witness is the lexicographically smallest labeling (cells in canonical
// order, 0 < 1).

#ifndef FAIRAUDIT_AUDIT_HPP_
#define FAIRAUDIT_AUDIT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "domain.hpp"
#include "metrics.hpp"
#include "rational.hpp"

namespace fairaudit {

enum class Objective { kAdversarial, kAccuracyDriven, kFairnessEnabling };

std::string_view ObjectiveName(Objective o);
// Accepts "adversarial", "accuracy" (or "accuracy-driven"), "enabling".
Objective ParseObjective(std::string_view text);

struct AuditOptions {
  // Largest cell count any exhaustive enumeration will accept.
  std::size_t cell_bound = 22;
  // Largest minimizer set BayesOptimalSet will expand.
  std::size_t tie_cap = std::size_t{1} << 16;
  // Give zero-mass cells label 0 instead of expanding both labels.
  bool pin_zero_mass_cells = false;
};

struct AuditResult {
  Objective objective = Objective::kAdversarial;
  Notion notion = Notion::kEO;
  // Unfairness for adversarial and accuracy-driven audits; 1 or 0 for
  // fairness-enabling (enabling or not).
  Rational value;
  std::vector<Classifier> witnesses;
  std::optional<Rational> alpha, epsilon, eta;
  // Accuracy-driven audits also report the minimal loss and how many
  // classifiers attain it.
  std::optional<Rational> min_loss;
  std::size_t minimizer_count = 0;

  bool enabling() const { return !value.IsZero(); }
};

// Exact maximum of DP or EO unfairness over H_F without enumeration. Each
// cell's effect on the (linear) rate differences is fixed; the maximum of a
// sum of absolute values is the maximum over sign patterns of the matching
// linear form, which a per-cell sign test maximizes. PRP falls back to
// enumeration under `options.cell_bound`.
AuditResult AdversarialUnfairness(const DomainInstance& domain,
                                  std::span<const Label> truth,
                                  const CellPartition& cells, Notion notion,
                                  const AuditOptions& options = {});
AuditResult AdversarialUnfairness(const DomainInstance& domain,
                                  std::string_view task, const FeatureSet& fs,
                                  Notion notion,
                                  const AuditOptions& options = {});

// Same contract by brute force over all labelings. Throws
// Error(kBoundExceeded) when the cell count exceeds `cell_bound`.
AuditResult AdversarialUnfairnessOracle(const DomainInstance& domain,
                                        std::span<const Label> truth,
                                        const CellPartition& cells,
                                        Notion notion,
                                        std::size_t cell_bound = 22);
AuditResult AdversarialUnfairnessOracle(const DomainInstance& domain,
                                        std::string_view task,
                                        const FeatureSet& fs, Notion notion,
                                        std::size_t cell_bound = 22);

struct MinimizerSet {
  std::vector<Classifier> classifiers;  // lexicographic order
  Rational min_loss;
};

// Every minimizer of L_P^α over H_F. Labeling a cell 1 is strictly better iff
// (1−α)·P(C, t=0) < α·P(C, t=1); equal costs are ties and expand into both
// labels. Throws Error(kBoundExceeded) past `options.tie_cap` minimizers.
MinimizerSet BayesOptimalSet(const DomainInstance& domain,
                             std::span<const Label> truth,
                             const CellPartition& cells, const Rational& alpha,
                             const AuditOptions& options = {});
std::vector<Classifier> BayesOptimalSet(const DomainInstance& domain,
                                        std::string_view task,
                                        const FeatureSet& fs,
                                        const Rational& alpha,
                                        const AuditOptions& options = {});

// The textbook threshold predictor: label 1 iff s(C) > threshold. With
// threshold α this is the rule usually quoted for cost-weighted loss; the
// loss-minimizing threshold for L_P^α is 1−α. The two agree at α = ½.
Classifier ThresholdClassifier(const DomainInstance& domain,
                               std::span<const Label> truth,
                               const CellPartition& cells,
                               const Rational& threshold);

AuditResult AccuracyDrivenUnfairness(const DomainInstance& domain,
                                     std::span<const Label> truth,
                                     const CellPartition& cells,
                                     const Rational& alpha,
                                     Notion notion = Notion::kEO,
                                     const AuditOptions& options = {});
AuditResult AccuracyDrivenUnfairness(const DomainInstance& domain,
                                     std::string_view task,
                                     const FeatureSet& fs,
                                     const Rational& alpha,
                                     Notion notion = Notion::kEO,
                                     const AuditOptions& options = {});

AuditResult FairnessEnabling(const DomainInstance& domain,
                             std::span<const Label> truth,
                             const CellPartition& cells,
                             const Rational& epsilon, const Rational& eta,
                             const Rational& alpha,
                             Notion notion = Notion::kEO,
                             const AuditOptions& options = {});
AuditResult FairnessEnabling(const DomainInstance& domain,
                             std::string_view task, const FeatureSet& fs,
                             const Rational& epsilon, const Rational& eta,
                             const Rational& alpha,
                             Notion notion = Notion::kEO,
                             const AuditOptions& options = {});

struct FrontierPoint {
  Rational loss;
  Rational unfairness;
  Classifier classifier;
};

// Pareto-minimal (loss, unfairness) pairs over H_F, sorted by loss.
std::vector<FrontierPoint> Frontier(const DomainInstance& domain,
                                    std::span<const Label> truth,
                                    const CellPartition& cells,
                                    const Rational& alpha,
                                    Notion notion = Notion::kEO,
                                    const AuditOptions& options = {});
std::vector<FrontierPoint> Frontier(const DomainInstance& domain,
                                    std::string_view task,
                                    const FeatureSet& fs,
                                    const Rational& alpha,
                                    Notion notion = Notion::kEO,
                                    const AuditOptions& options = {});

// Incremental evaluator for labelings of a fixed partition. Keeps the
// predicted-positive mass of every quadrant so that flipping one cell is
// O(1) and every quantity follows from the definitions directly.
class LabelingEvaluator {
 public:
  LabelingEvaluator(const DomainInstance& domain, std::span<const Label> truth,
                    const CellPartition& cells);

  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<CellMass>& cell_masses() const { return cells_; }
  const QuadrantTable& quadrants() const { return quadrants_; }

  void Reset();                          // every cell labeled 0
  void Set(std::size_t cell, Label label);
  void Assign(std::span<const Label> labels);
  const std::vector<Label>& labels() const { return labels_; }

  Rational Eo() const;
  Rational Dp() const;  // Throws Error(kPrecondition) on an empty group.
  Rational Prp() const;
  Rational Unfairness(Notion notion) const;
  Rational Loss(const Rational& alpha) const;

 private:
  std::vector<CellMass> cells_;
  QuadrantTable quadrants_{};
  QuadrantTable predicted_positive_{};
  std::vector<Label> labels_;
};

}  // namespace fairaudit

#endif  // FAIRAUDIT_AUDIT_HPP_
