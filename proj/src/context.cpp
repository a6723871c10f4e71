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

#include "context.hpp"

#include <algorithm>

#include "error.hpp"
#include "metrics.hpp"

namespace fairaudit {
namespace {

using Members = std::vector<std::size_t>;

// Quadrant bit: (A,0)=1, (A,1)=2, (D,0)=4, (D,1)=8.
unsigned QuadrantBit(Group g, Label l) { return 1U << (Index(g) * 2 + l); }

void CheckAligned(const Feature& f, const DomainInstance& domain,
                  std::span<const Label> truth) {
  if (f.values().size() != domain.size() || truth.size() != domain.size()) {
    ThrowInput("feature '" + f.name() + "' or task is not total over the domain");
  }
}

std::vector<std::string> FullQuadrantValues(const Feature& f,
                                            const DomainInstance& domain,
                                            std::span<const Label> truth) {
  std::vector<std::string> out;
  for (const auto& v : f.Image()) {
    unsigned hit = 0;
    for (std::size_t i : f.Preimage(v)) {
      hit |= QuadrantBit(domain.group(i), truth[i]);
    }
    if (hit == 0xF) out.push_back(v);
  }
  return out;
}

bool Contains(const Members& set, std::size_t i) {
  return std::binary_search(set.begin(), set.end(), i);
}

Rational Mass(const DomainInstance& domain, const Members& set) {
  Rational m;
  for (std::size_t i : set) m += domain.weight(i);
  return m;
}

Rational Ratio(const Rational& part, const Rational& whole) {
  return whole.IsZero() ? Rational(0) : part / whole;
}

// Positions 0..n-1 of `pool` chosen by `pick`, as a sorted member list.
Members Pick(const Members& pool, const std::vector<std::size_t>& pick) {
  Members out;
  out.reserve(pick.size());
  for (std::size_t j : pick) out.push_back(pool[j]);
  return out;
}

// Advances `idx` to the next size-|idx| combination of 0..n-1 in
// lexicographic order; false when exhausted.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t j = k; j-- > 0;) {
    if (idx[j] < n - k + j) {
      ++idx[j];
      for (std::size_t m = j + 1; m < k; ++m) idx[m] = idx[m - 1] + 1;
      return true;
    }
  }
  return false;
}

Feature ContextFeature(const Feature& f, const DomainInstance& domain,
                       std::span<const Label> truth, const GenericWitness& w,
                       bool keep_c3) {
  std::string name = "context";
  while (name == f.name()) name += "_";
  std::vector<std::string> values(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (Contains(w.c1, i) || Contains(w.c2, i)) {
      values[i] = "c12";
    } else if (keep_c3 && Contains(w.c3, i)) {
      values[i] = "c3";
    } else {
      values[i] = truth[i] == 1 ? "l1" : "l0";
    }
  }
  return Feature(std::move(name), std::move(values));
}

}  // namespace

NonCommitting IsNonCommitting(const Feature& f, const DomainInstance& domain,
                              std::span<const Label> truth) {
  CheckAligned(f, domain, truth);
  const auto full = FullQuadrantValues(f, domain, truth);
  NonCommitting out;
  if (full.size() >= 2) {
    out.value = true;
    out.values = std::make_pair(full[0], full[1]);
  }
  return out;
}

KAnonymity IsKAnonymous(const Feature& f, const DomainInstance& domain,
                        std::span<const Label> truth, std::size_t k) {
  CheckAligned(f, domain, truth);
  if (k == 0) ThrowInput("k must be at least 1");
  KAnonymity out;
  for (const auto& v : f.Image()) {
    std::array<std::array<std::size_t, 2>, 2> count{};
    for (std::size_t i : f.Preimage(v)) ++count[Index(domain.group(i))][truth[i]];
    for (Group g : {Group::kA, Group::kD}) {
      for (Label l : {Label{0}, Label{1}}) {
        const std::size_t c = count[Index(g)][l];
        if (c == 0 || c >= k) continue;
        out.value = false;
        out.value_of_violation = v;
        out.group_of_violation = g;
        out.label_of_violation = l;
        out.count_of_violation = c;
        return out;
      }
    }
  }
  return out;
}

GenericCheck VerifyGenericWitness(const Feature& f,
                                  const DomainInstance& domain,
                                  std::span<const Label> truth,
                                  const GenericWitness& w) {
  CheckAligned(f, domain, truth);
  const Label l1 = w.l1;
  const Label l2 = w.l2();
  const Group g1 = w.g1;
  const Group g2 = w.g2();
  auto all_of = [&](const Members& set, auto&& pred) {
    return std::all_of(set.begin(), set.end(), pred);
  };
  auto in_range = [&](const Members& set) {
    return all_of(set, [&](std::size_t i) { return i < domain.size(); });
  };
  GenericCheck out;
  if (!in_range(w.c1) || !in_range(w.c2) || !in_range(w.c3)) return out;

  const auto q = QuadrantMasses(domain, truth);
  out.conditions[0] = Mass(domain, w.c1) > Mass(domain, w.c2);
  out.conditions[1] =
      w.y1 != w.y2 &&
      all_of(w.c1, [&](std::size_t i) { return f.value(i) == w.y1; }) &&
      all_of(w.c2, [&](std::size_t i) { return f.value(i) == w.y2; });
  out.conditions[2] =
      all_of(w.c1, [&](std::size_t i) { return truth[i] == l1; }) &&
      all_of(w.c2, [&](std::size_t i) {
        return truth[i] == l2 && domain.group(i) == g1;
      });
  out.conditions[3] =
      all_of(w.c3, [&](std::size_t i) { return f.value(i) == w.y3; });

  Rational c3_l1;
  Rational c3_l2;
  Rational c3_g2_l2;
  Rational c23_g1_l2;
  for (std::size_t i : w.c3) {
    const Rational& p = domain.weight(i);
    (truth[i] == l1 ? c3_l1 : c3_l2) += p;
    if (truth[i] == l2 && domain.group(i) == g2) c3_g2_l2 += p;
  }
  Members c23 = w.c2;
  c23.insert(c23.end(), w.c3.begin(), w.c3.end());
  std::sort(c23.begin(), c23.end());
  c23.erase(std::unique(c23.begin(), c23.end()), c23.end());
  for (std::size_t i : c23) {
    if (truth[i] == l2 && domain.group(i) == g1) c23_g1_l2 += domain.weight(i);
  }
  out.conditions[4] = c3_l1 >= c3_l2;
  const Rational& x_g1_l2 = q[Index(g1)][l2];
  const Rational& x_g2_l2 = q[Index(g2)][l2];
  out.condition6_lhs = Ratio(c3_g2_l2, x_g2_l2);
  out.condition6_rhs = Ratio(c23_g1_l2, x_g1_l2);
  out.conditions[5] = out.condition6_lhs >= out.condition6_rhs;

  auto disjoint = [](const Members& a, const Members& b) {
    for (std::size_t i : a) {
      if (Contains(b, i)) return false;
    }
    return true;
  };
  auto sorted = [](const Members& a) {
    return std::adjacent_find(a.begin(), a.end(),
                              std::greater_equal<>()) == a.end();
  };
  out.nondegenerate = !w.c1.empty() && !w.c2.empty() && !w.c3.empty() &&
                      sorted(w.c1) && sorted(w.c2) && sorted(w.c3) &&
                      disjoint(w.c1, w.c2) && disjoint(w.c1, w.c3) &&
                      disjoint(w.c2, w.c3) &&
                      Mass(domain, w.c2).Sign() > 0 && x_g1_l2.Sign() > 0 &&
                      x_g2_l2.Sign() > 0 && c3_l1 > c3_l2;
  return out;
}

std::optional<GenericWitness> FindGenericWitness(const Feature& f,
                                                 const DomainInstance& domain,
                                                 std::span<const Label> truth,
                                                 std::size_t size_bound) {
  CheckAligned(f, domain, truth);
  if (domain.size() > size_bound) {
    ThrowBound("generic witness search is bounded at " +
               std::to_string(size_bound) + " instances, domain has " +
               std::to_string(domain.size()));
  }
  std::vector<std::string> values = f.Image();
  std::sort(values.begin(), values.end());
  constexpr std::array<std::pair<Label, Group>, 4> kOrder{
      {{1, Group::kA}, {1, Group::kD}, {0, Group::kA}, {0, Group::kD}}};

  GenericWitness w;
  for (const auto& [l1, g1] : kOrder) {
    w.l1 = l1;
    w.g1 = g1;
    const Label l2 = w.l2();
    for (const auto& y1 : values) {
      Members positives;  // f⁻¹(y1) ∩ t⁻¹(l1)
      for (std::size_t i : f.Preimage(y1)) {
        if (truth[i] == l1) positives.push_back(i);
      }
      if (positives.empty()) continue;
      for (const auto& y2 : values) {
        if (y2 == y1) continue;
        Members c2_candidates;
        for (std::size_t i : f.Preimage(y2)) {
          if (truth[i] == l2 && domain.group(i) == g1 &&
              domain.weight(i).Sign() > 0) {
            c2_candidates.push_back(i);
          }
        }
        for (const auto& y3 : values) {
          const Members y3_members = f.Preimage(y3);
          for (std::size_t c2 : c2_candidates) {
            Members pool;
            for (std::size_t i : y3_members) {
              if (i != c2) pool.push_back(i);
            }
            for (std::size_t size = 1; size <= pool.size(); ++size) {
              std::vector<std::size_t> idx(size);
              for (std::size_t j = 0; j < size; ++j) idx[j] = j;
              do {
                w.c3 = Pick(pool, idx);
                w.c1.clear();
                for (std::size_t i : positives) {
                  if (!Contains(w.c3, i)) w.c1.push_back(i);
                }
                if (w.c1.empty()) continue;
                w.c2 = {c2};
                w.y1 = y1;
                w.y2 = y2;
                w.y3 = y3;
                if (VerifyGenericWitness(f, domain, truth, w).ok()) return w;
              } while (NextCombination(idx, pool.size()));
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

GenericConstruction ConstructGenericDistribution(const Feature& f,
                                                 const DomainInstance& domain,
                                                 std::span<const Label> truth) {
  CheckAligned(f, domain, truth);
  const auto full = FullQuadrantValues(f, domain, truth);
  if (full.size() < 2) {
    ThrowPrecondition("feature '" + f.name() +
                      "' is not non-committing: fewer than two values meet "
                      "all four quadrants");
  }
  auto quadrant_members = [&](const std::string& v, Group g, Label l) {
    Members out;
    for (std::size_t i : f.Preimage(v)) {
      if (domain.group(i) == g && truth[i] == l) out.push_back(i);
    }
    return out;
  };

  std::optional<std::pair<std::string, std::string>> pair;
  for (const auto& y1 : full) {
    for (const auto& y2 : full) {
      if (y1 == y2) continue;
      if (quadrant_members(y2, Group::kA, 0).size() >= 2) {
        pair = std::make_pair(y1, y2);
        break;
      }
    }
    if (pair) break;
  }
  if (!pair) {
    ThrowPrecondition("feature '" + f.name() +
                      "' has no non-committing value with two instances in "
                      "X_{A,0} to split into C2 and C4");
  }
  const auto& [y1, y2] = *pair;

  GenericConstruction out;
  const Members b = quadrant_members(y2, Group::kA, 0);
  GenericWitness& w = out.witness;
  w.c2 = {b.front()};
  out.c4.assign(b.begin() + 1, b.end());

  for (Group g : {Group::kA, Group::kD}) {
    for (Label l : {Label{0}, Label{1}}) {
      w.c3.push_back(quadrant_members(y1, g, l).front());
    }
  }
  std::sort(w.c3.begin(), w.c3.end());
  out.c3_meets_all_quadrants = true;
  for (std::size_t i : f.Preimage(y1)) {
    if (truth[i] == 1 && !Contains(w.c3, i)) w.c1.push_back(i);
  }
  if (w.c1.empty()) {
    // Every positive of f⁻¹(y1) sits in C3; hand the first one to C1.
    const auto it = std::find_if(w.c3.begin(), w.c3.end(),
                                 [&](std::size_t i) { return truth[i] == 1; });
    w.c1.push_back(*it);
    w.c3.erase(it);
    out.c3_meets_all_quadrants = false;
  }
  w.y1 = y1;
  w.y2 = y2;
  w.y3 = y1;
  w.l1 = 1;
  w.g1 = Group::kA;

  Members c3_positive;
  Members c3_d0;
  for (std::size_t i : w.c3) {
    if (truth[i] == 1) {
      c3_positive.push_back(i);
    } else if (domain.group(i) == Group::kD) {
      c3_d0.push_back(i);
    }
  }
  out.weights.assign(domain.size(), Rational(0));
  auto spread = [&](const Members& set, const Rational& mass) {
    const Rational each = mass / Rational(static_cast<std::int64_t>(set.size()));
    for (std::size_t i : set) out.weights[i] = each;
  };
  spread(w.c1, Rational(1, 5));
  spread(w.c2, Rational(1, 10));
  spread(c3_positive, Rational(3, 10));
  spread(c3_d0, Rational(1, 5));
  spread(out.c4, Rational(1, 5));

  out.two_anonymous = IsKAnonymous(f, domain, truth, 2).value;
  out.check =
      VerifyGenericWitness(f, domain.WithWeights(out.weights), truth, w);
  if (!out.check.ok()) {
    ThrowInternal("constructed distribution is not generic for '" + f.name() +
                  "'");
  }
  return out;
}

ContextPair ConstructContextFeaturesets(const Feature& f,
                                        const DomainInstance& domain,
                                        std::span<const Label> truth,
                                        const GenericWitness& witness) {
  const GenericCheck check = VerifyGenericWitness(f, domain, truth, witness);
  if (!check.ok()) {
    for (std::size_t c = 0; c < check.conditions.size(); ++c) {
      if (!check.conditions[c]) {
        ThrowPrecondition("witness fails generic condition (" +
                          std::to_string(c + 1) + ")");
      }
    }
    ThrowPrecondition("witness is degenerate");
  }
  ContextPair out;
  out.fs_decreasing =
      FeatureSet({ContextFeature(f, domain, truth, witness, false)});
  out.fs_increasing =
      FeatureSet({ContextFeature(f, domain, truth, witness, true)});
  const Rational half(1, 2);
  auto u_acc = [&](const FeatureSet& fs) {
    return AccuracyDrivenUnfairness(domain, truth, InduceCells(domain, fs),
                                    half, Notion::kEO)
        .value;
  };
  out.decreasing_without = u_acc(out.fs_decreasing);
  out.decreasing_with = u_acc(out.fs_decreasing.With(f));
  out.increasing_without = u_acc(out.fs_increasing);
  out.increasing_with = u_acc(out.fs_increasing.With(f));
  out.decreasing_holds = out.decreasing_with < out.decreasing_without;
  out.increasing_holds = out.increasing_with > out.increasing_without;
  if (!out.decreasing_holds || !out.increasing_holds) {
    ThrowInternal("context feature sets do not separate: " +
                  out.decreasing_without.ToString() + " -> " +
                  out.decreasing_with.ToString() + ", " +
                  out.increasing_without.ToString() + " -> " +
                  out.increasing_with.ToString());
  }
  return out;
}

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kIncrease:
      return "increase";
    case Direction::kDecrease:
      return "decrease";
    case Direction::kNeutral:
      return "neutral";
  }
  return "?";
}

DeletionEffect MeasureDeletionEffect(const DomainInstance& domain,
                                     std::span<const Label> truth,
                                     const FeatureSet& fs, const Feature& f,
                                     Objective objective,
                                     const DeletionParams& params) {
  auto value = [&](const FeatureSet& set) {
    const CellPartition cells = InduceCells(domain, set);
    switch (objective) {
      case Objective::kAdversarial:
        return AdversarialUnfairness(domain, truth, cells, params.notion,
                                     params.options)
            .value;
      case Objective::kAccuracyDriven:
        return AccuracyDrivenUnfairness(domain, truth, cells, params.alpha,
                                        params.notion, params.options)
            .value;
      case Objective::kFairnessEnabling:
        return FairnessEnabling(domain, truth, cells, params.epsilon,
                                params.eta, params.alpha, params.notion,
                                params.options)
            .value;
    }
    ThrowInternal("unhandled objective");
  };
  DeletionEffect out;
  out.without = value(fs);
  out.with = value(fs.With(f));
  if (out.with > out.without) {
    out.direction = Direction::kIncrease;
  } else if (out.with < out.without) {
    out.direction = Direction::kDecrease;
  }
  return out;
}

}  // namespace fairaudit
