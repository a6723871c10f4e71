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

#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "audit.hpp"
#include "constructors.hpp"
#include "context.hpp"
#include "document.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "metrics.hpp"

namespace fairaudit {
namespace {

using nlohmann::ordered_json;

std::string Id(std::size_t i) { return "x" + std::to_string(i + 1); }

DomainInstance MakeDomain(const std::vector<Group>& groups,
                          const std::vector<Rational>& weights,
                          std::map<std::string, Labeling> tasks = {},
                          std::map<std::string, Feature> features = {}) {
  std::vector<Instance> instances;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    instances.push_back(Instance{Id(i), groups[i], weights[i]});
  }
  return DomainInstance(std::move(instances), std::move(tasks),
                        std::move(features));
}

std::vector<Group> GroupsFromMask(std::size_t n, std::uint64_t mask) {
  std::vector<Group> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = ((mask >> (n - 1 - i)) & 1U) ? Group::kD : Group::kA;
  }
  return g;
}

Labeling LabelsFromMask(std::size_t n, std::uint64_t mask) {
  Labeling l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = (mask >> (n - 1 - i)) & 1U;
  return l;
}

// Calls fn(parts) for each composition of `total` into `n` positive parts,
// in lexicographic order.
void ForEachComposition(int total, std::size_t n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      parts[i] = left;
      fn(parts);
      return;
    }
    const int rest = static_cast<int>(n - i - 1);
    for (int v = 1; v <= left - rest; ++v) {
      parts[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (static_cast<int>(n) <= total) rec(0, total);
}

// Calls fn(cell_of, cell_count) for every set partition of n elements as a
// restricted growth string.
void ForEachPartition(
    std::size_t n,
    const std::function<void(const std::vector<std::size_t>&, std::size_t)>&
        fn) {
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t blocks) {
    if (i == n) {
      fn(a, blocks);
      return;
    }
    for (std::size_t v = 0; v <= blocks; ++v) {
      a[i] = v;
      rec(i + 1, std::max(blocks, v + 1));
    }
  };
  if (n > 0) {
    a[0] = 0;
    rec(1, 1);
  }
}

CellPartition PartitionFrom(const std::vector<std::size_t>& cell_of,
                            std::size_t blocks) {
  CellPartition p;
  p.cells.resize(blocks);
  p.cell_of = cell_of;
  for (std::size_t i = 0; i < cell_of.size(); ++i) {
    p.cells[cell_of[i]].push_back(i);
  }
  return p;
}

Feature PartitionFeature(const std::string& name,
                         const std::vector<std::size_t>& cell_of) {
  std::vector<std::string> values;
  for (std::size_t c : cell_of) values.push_back("c" + std::to_string(c + 1));
  return Feature(name, std::move(values));
}

FeatureSet RandomSubset(const DomainInstance& d, Rng& rng, bool nonempty) {
  std::vector<Feature> picked;
  for (const auto& [name, feature] : d.features()) {
    if (rng.Coin()) picked.push_back(feature);
  }
  if (nonempty && picked.empty() && !d.features().empty()) {
    auto it = d.features().begin();
    std::advance(it, rng.Uniform(0, d.features().size() - 1));
    picked.push_back(it->second);
  }
  return FeatureSet(std::move(picked));
}

const Feature& RandomFeature(const DomainInstance& d, Rng& rng) {
  auto it = d.features().begin();
  std::advance(it, rng.Uniform(0, d.features().size() - 1));
  return it->second;
}

DomainInstance RandomDomain(Rng& rng, std::size_t max_size,
                            std::size_t min_features = 1,
                            std::size_t max_features = 4) {
  GeneratorParams p;
  p.seed = rng.Next();
  p.min_instances = 2;
  p.max_instances = std::max<std::size_t>(2, max_size);
  p.min_features = min_features;
  p.max_features = max_features;
  p.alphabet = rng.Uniform(2, 3);
  p.weights = rng.Coin() ? WeightStyle::kRandom : WeightStyle::kUniform;
  p.max_denominator = 4 * p.max_instances;
  return GenerateDomain(p);
}

ordered_json Document(const DomainInstance& d) { return DomainToJson(d); }

ordered_json FeatureSetJson(const FeatureSet& fs) {
  ordered_json names = ordered_json::array();
  for (const auto& n : fs.Names()) names.push_back(n);
  return names;
}

class Tally {
 public:
  explicit Tally(VerifyReport& r) : r_(r) {}
  void Check() { ++r_.checked; }
  void Violation(const std::function<ordered_json()>& example,
                 bool complementary = false) {
    ++r_.violations;
    if (r_.violations_excluding_complements && !complementary) {
      ++*r_.violations_excluding_complements;
    }
    if (!r_.counterexample) r_.counterexample = example();
  }

 private:
  VerifyReport& r_;
};

void MutualEoRates(VerifyReport& r) {
  constexpr int kGrid = 6;
  r.exhaustive = true;
  r.violations_excluding_complements = 0;
  r.detail = "all domains of 2.." + std::to_string(r.params.max_size) +
             " instances, weights from the grid i/" + std::to_string(kGrid) +
             " (positive), all group assignments with both groups present, "
             "all pairs (f, g)";
  Tally tally(r);
  for (std::size_t n = 2; n <= r.params.max_size; ++n) {
    ForEachComposition(kGrid, n, [&](const std::vector<int>& parts) {
      std::vector<Rational> weights;
      for (int p : parts) weights.emplace_back(p, kGrid);
      const std::uint64_t masks = std::uint64_t{1} << n;
      for (std::uint64_t gm = 1; gm + 1 < masks; ++gm) {
        const DomainInstance d = MakeDomain(GroupsFromMask(n, gm), weights);
        for (std::uint64_t fm = 0; fm < masks; ++fm) {
          const Labeling f = LabelsFromMask(n, fm);
          for (std::uint64_t hm = 0; hm < masks; ++hm) {
            const Labeling g = LabelsFromMask(n, hm);
            const MutualEoReport rep = MutualEoAudit(d, f, g);
            if (!rep.premise) continue;
            tally.Check();
            if (rep.conclusion_holds) continue;
            tally.Violation(
                [&] {
                  ordered_json ex;
                  ex["document"] =
                      Document(d.WithTask("f", f).WithTask("g", g));
                  ex["f"] = "f";
                  ex["g"] = "g";
                  ex["positive_rates"] = {
                      {"f_A", rep.pos_rate_f_a.ToString()},
                      {"f_D", rep.pos_rate_f_d.ToString()},
                      {"g_A", rep.pos_rate_g_a.ToString()},
                      {"g_D", rep.pos_rate_g_d.ToString()}};
                  return ex;
                },
                rep.complementary);
          }
        }
      }
    });
  }
}

void MultitaskCertificates(VerifyReport& r) {
  r.exhaustive = true;
  r.violations_excluding_complements = 0;
  r.detail =
      "all domains of 2.." + std::to_string(r.params.max_size) +
      " instances, uniform weights, both groups present, every partition as "
      "the representation, every pair of distinct tasks with some unequal "
      "success rate; task pairs that are not constant on cells fail perfect "
      "accuracy outright and are not enumerated";
  Tally tally(r);
  for (std::size_t n = 2; n <= r.params.max_size; ++n) {
    const std::vector<Rational> weights(
        n, Rational(1, static_cast<std::int64_t>(n)));
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t gm = 1; gm + 1 < masks; ++gm) {
      const std::vector<Group> groups = GroupsFromMask(n, gm);
      const DomainInstance d = MakeDomain(groups, weights);
      ForEachPartition(n, [&](const std::vector<std::size_t>& cell_of,
                              std::size_t k) {
        const CellPartition cells = PartitionFrom(cell_of, k);
        const std::uint64_t tasks = std::uint64_t{1} << k;
        std::vector<Labeling> labels(tasks);
        std::vector<char> fair(tasks);
        std::vector<char> equal(tasks);
        for (std::uint64_t t = 0; t < tasks; ++t) {
          const Labeling by_cell = LabelsFromMask(k, t);
          labels[t].resize(n);
          for (std::size_t i = 0; i < n; ++i) labels[t][i] = by_cell[cell_of[i]];
          fair[t] = AdversarialUnfairness(d, labels[t], cells, Notion::kEO)
                        .value.IsZero();
          equal[t] = EqualSuccessRates(d, labels[t]).equal;
        }
        const std::uint64_t all = tasks - 1;
        for (std::uint64_t t1 = 0; t1 < tasks; ++t1) {
          for (std::uint64_t t2 = t1 + 1; t2 < tasks; ++t2) {
            if (equal[t1] && equal[t2]) continue;
            tally.Check();
            // Uniform weights: every instance is in the support, and the
            // tasks are constant on cells, so perfect accuracy holds.
            const MultitaskCertificate c = AssembleCertificate(
                fair[t1], fair[t2], true, true, equal[t1], equal[t2],
                (t1 ^ t2) == all);
            if (c.invariant_holds) continue;
            tally.Violation(
                [&] {
                  std::map<std::string, Labeling> ts{{"t1", labels[t1]},
                                                     {"t2", labels[t2]}};
                  std::map<std::string, Feature> fs;
                  fs.emplace("cells", PartitionFeature("cells", cell_of));
                  ordered_json ex;
                  ex["document"] =
                      Document(MakeDomain(groups, weights, ts, fs));
                  ex["features"] = {"cells"};
                  ex["task1"] = "t1";
                  ex["task2"] = "t2";
                  return ex;
                },
                c.tasks_complementary);
          }
        }
      });
    }
  }
}

void MonotonicityAdv(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances, random F and f, DP and EO: U_adv(F) <= U_adv(F+f)";
  Tally tally(r);
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    const Labeling& t = d.Task("t");
    const FeatureSet fs = RandomSubset(d, rng, false);
    const Feature& f = RandomFeature(d, rng);
    for (Notion notion : {Notion::kDP, Notion::kEO}) {
      DeletionParams p;
      p.notion = notion;
      const DeletionEffect e =
          MeasureDeletionEffect(d, t, fs, f, Objective::kAdversarial, p);
      tally.Check();
      if (e.direction != Direction::kDecrease) continue;
      tally.Violation([&] {
        ordered_json ex;
        ex["document"] = Document(d);
        ex["features"] = FeatureSetJson(fs);
        ex["added"] = f.name();
        ex["notion"] = NotionName(notion);
        ex["without"] = e.without.ToString();
        ex["with"] = e.with.ToString();
        return ex;
      });
    }
  }
}

void MonotonicityEnabling(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances, random F, f, eps, eta and alpha in {1/4,1/2,3/4}: "
             "enabling(F) implies enabling(F+f)";
  Tally tally(r);
  const Rational alphas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    const Labeling& t = d.Task("t");
    const FeatureSet fs = RandomSubset(d, rng, false);
    const Feature& f = RandomFeature(d, rng);
    DeletionParams p;
    p.notion = trial % 2 == 0 ? Notion::kEO : Notion::kDP;
    p.alpha = alphas[rng.Uniform(0, 2)];
    p.epsilon = Rational(static_cast<std::int64_t>(rng.Uniform(0, 8)), 16);
    p.eta = Rational(static_cast<std::int64_t>(rng.Uniform(0, 8)), 8);
    const DeletionEffect e = MeasureDeletionEffect(
        d, t, fs, f, Objective::kFairnessEnabling, p);
    tally.Check();
    if (e.direction != Direction::kDecrease) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d);
      ex["features"] = FeatureSetJson(fs);
      ex["added"] = f.name();
      ex["notion"] = NotionName(p.notion);
      ex["alpha"] = p.alpha.ToString();
      ex["epsilon"] = p.epsilon.ToString();
      ex["eta"] = p.eta.ToString();
      return ex;
    });
  }
}

void NeutralExtension(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances; f is a coarsening of F's cells, so F and F+f induce "
             "the same cells; adversarial (DP, EO), accuracy-driven and "
             "enabling audits must agree";
  Tally tally(r);
  const Rational alphas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    const Labeling& t = d.Task("t");
    const FeatureSet fs = RandomSubset(d, rng, true);
    const CellPartition cells = InduceCells(d, fs);
    const std::size_t buckets = rng.Uniform(1, cells.size());
    std::vector<std::string> relabel(cells.size());
    for (auto& v : relabel) v = "v" + std::to_string(rng.Uniform(1, buckets));
    std::vector<std::string> values(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      values[i] = relabel[cells.cell_of[i]];
    }
    const Feature f("coarse", std::move(values));
    const FeatureSet extended = fs.With(f);

    DeletionParams p;
    p.alpha = alphas[rng.Uniform(0, 2)];
    p.epsilon = Rational(static_cast<std::int64_t>(rng.Uniform(0, 8)), 16);
    p.eta = Rational(static_cast<std::int64_t>(rng.Uniform(0, 8)), 8);
    bool same = InduceCells(d, extended) == cells;
    for (Objective o : {Objective::kAdversarial, Objective::kAccuracyDriven,
                        Objective::kFairnessEnabling}) {
      for (Notion notion : {Notion::kDP, Notion::kEO}) {
        p.notion = notion;
        const DeletionEffect e = MeasureDeletionEffect(d, t, fs, f, o, p);
        same = same && e.direction == Direction::kNeutral;
      }
    }
    tally.Check();
    if (same) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d.WithFeature(f));
      ex["features"] = FeatureSetJson(fs);
      ex["added"] = f.name();
      return ex;
    });
  }
}

void OracleEquivalence(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances, random F, DP and EO: the sign-pattern optimizer and "
             "exhaustive enumeration agree on value and witness";
  Tally tally(r);
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    const Labeling& t = d.Task("t");
    const FeatureSet fs = RandomSubset(d, rng, false);
    const CellPartition cells = InduceCells(d, fs);
    for (Notion notion : {Notion::kDP, Notion::kEO}) {
      const AuditResult fast = AdversarialUnfairness(d, t, cells, notion);
      const AuditResult slow = AdversarialUnfairnessOracle(d, t, cells, notion);
      tally.Check();
      if (fast.value == slow.value && fast.witnesses == slow.witnesses) {
        continue;
      }
      tally.Violation([&] {
        ordered_json ex;
        ex["document"] = Document(d);
        ex["features"] = FeatureSetJson(fs);
        ex["notion"] = NotionName(notion);
        ex["optimizer"] = fast.value.ToString();
        ex["oracle"] = slow.value.ToString();
        return ex;
      });
    }
  }
}

void PrpEquivalence(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances: unequal success rates exactly when the all-one "
             "classifier is PRP-unfair";
  Tally tally(r);
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    const PrpFeasibility p = CheckPrpFeasibility(d, d.Task("t"));
    tally.Check();
    if (p.feasible == p.all_one.prp_fair()) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d);
      ex["feasible"] = p.feasible;
      ex["all_one_fair"] = p.all_one.prp_fair();
      return ex;
    });
  }
}

void DpMarginal(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances, random non-constant h: the constructed marginal "
             "makes h exactly 1 DP-unfair";
  Tally tally(r);
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = RandomDomain(rng, r.params.max_size);
    Labeling h(d.size());
    for (auto& l : h) l = rng.Coin() ? 1 : 0;
    if (std::all_of(h.begin(), h.end(), [&](Label l) { return l == h[0]; })) {
      const std::size_t i = rng.Uniform(0, d.size() - 1);
      h[i] = 1 - h[i];
    }
    tally.Check();
    bool ok = false;
    try {
      const AdversarialMarginal m = DpAdversarialMarginal(d, h);
      ok = m.achieved == Rational(1) &&
           DpUnfairness(d.WithWeights(m.weights), h).value == Rational(1);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d.WithTask("h", h));
      ex["h"] = "h";
      return ex;
    });
  }
}

void EoMarginal(VerifyReport& r, Rng& rng) {
  r.detail = "random domains of 2.." + std::to_string(r.params.max_size) +
             " instances, random (f, h) with f, h non-constant and h not f or "
             "1-f: the constructed marginal makes h at least 1/2 EO-unfair";
  Tally tally(r);
  auto constant = [](const Labeling& l) {
    return std::all_of(l.begin(), l.end(), [&](Label x) { return x == l[0]; });
  };
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    Labeling f;
    Labeling h;
    std::optional<DomainInstance> d;
    while (true) {
      d.emplace(RandomDomain(rng, std::max<std::size_t>(3, r.params.max_size)));
      f.assign(d->size(), 0);
      h.assign(d->size(), 0);
      for (auto& l : f) l = rng.Coin() ? 1 : 0;
      for (auto& l : h) l = rng.Coin() ? 1 : 0;
      bool same = true;
      bool flipped = true;
      for (std::size_t i = 0; i < f.size(); ++i) {
        same = same && f[i] == h[i];
        flipped = flipped && f[i] != h[i];
      }
      if (!constant(f) && !constant(h) && !same && !flipped) break;
    }
    tally.Check();
    bool ok = false;
    try {
      const AdversarialMarginal m = EoAdversarialMarginal(*d, f, h);
      ok = m.achieved >= Rational(1, 2) &&
           EoUnfairness(d->WithWeights(m.weights), f, h).value >=
               Rational(1, 2);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d->WithTask("f", f).WithTask("h", h));
      ex["f"] = "f";
      ex["h"] = "h";
      return ex;
    });
  }
}

// A domain in which feature "f" is non-committing and 2-anonymous: two
// values meet every quadrant two or three times, an optional third value
// meets each quadrant zero or two times. Instance order is shuffled.
DomainInstance NonTrivialFeatureDomain(Rng& rng) {
  struct Row {
    Group g;
    Label l;
    std::string v;
  };
  std::vector<Row> rows;
  const std::size_t values = rng.Uniform(2, 3);
  for (std::size_t v = 0; v < values; ++v) {
    for (Group g : {Group::kA, Group::kD}) {
      for (Label l : {Label{0}, Label{1}}) {
        const std::size_t count =
            v < 2 ? rng.Uniform(2, 3) : 2 * rng.Uniform(0, 1);
        for (std::size_t c = 0; c < count; ++c) {
          rows.push_back(Row{g, l, std::to_string(v)});
        }
      }
    }
  }
  for (std::size_t i = rows.size(); i > 1; --i) {
    std::swap(rows[i - 1], rows[rng.Uniform(0, i - 1)]);
  }
  const std::size_t n = rows.size();
  std::vector<Group> groups;
  Labeling t;
  std::vector<std::string> fv;
  for (const auto& row : rows) {
    groups.push_back(row.g);
    t.push_back(row.l);
    fv.push_back(row.v);
  }
  std::map<std::string, Feature> features;
  features.emplace("f", Feature("f", std::move(fv)));
  return MakeDomain(groups,
                    std::vector<Rational>(
                        n, Rational(1, static_cast<std::int64_t>(n))),
                    {{"t", std::move(t)}}, std::move(features));
}

void GenericConstructionProperty(VerifyReport& r, Rng& rng) {
  r.detail =
      "random non-committing 2-anonymous features (16 to 36 instances): the "
      "constructed distribution follows the 1/5, 1/10, 3/10, 1/5, 1/5 "
      "schedule, its witness re-verifies, and the two context feature sets "
      "move accuracy-driven EO unfairness in opposite directions";
  Tally tally(r);
  for (std::uint64_t trial = 0; trial < r.params.trials; ++trial) {
    const DomainInstance d = NonTrivialFeatureDomain(rng);
    const Labeling& t = d.Task("t");
    const Feature& f = d.GetFeature("f");
    tally.Check();
    std::string failure;
    try {
      const GenericConstruction g = ConstructGenericDistribution(f, d, t);
      const DomainInstance weighted = d.WithWeights(g.weights);
      const GenericWitness& w = g.witness;
      Rational c1, c2, c3_pos, c3_d0, c4;
      for (std::size_t i : w.c1) c1 += g.weights[i];
      for (std::size_t i : w.c2) c2 += g.weights[i];
      for (std::size_t i : g.c4) c4 += g.weights[i];
      for (std::size_t i : w.c3) {
        if (t[i] == 1) c3_pos += g.weights[i];
        if (t[i] == 0 && d.group(i) == Group::kD) c3_d0 += g.weights[i];
      }
      if (c1 != Rational(1, 5) || c2 != Rational(1, 10) ||
          c3_pos != Rational(3, 10) || c3_d0 != Rational(1, 5) ||
          c4 != Rational(1, 5)) {
        failure = "weight schedule";
      } else if (!g.two_anonymous || !g.c3_meets_all_quadrants) {
        failure = "carving";
      } else if (!VerifyGenericWitness(f, weighted, t, w).ok()) {
        failure = "witness re-verification";
      } else {
        const ContextPair cp = ConstructContextFeaturesets(f, weighted, t, w);
        if (!cp.increasing_holds || !cp.decreasing_holds) {
          failure = "context inequalities";
        }
      }
    } catch (const Error& e) {
      failure = e.what();
    }
    if (failure.empty()) continue;
    tally.Violation([&] {
      ordered_json ex;
      ex["document"] = Document(d);
      ex["feature"] = "f";
      ex["failure"] = failure;
      return ex;
    });
  }
}

struct Property {
  const char* name;
  std::uint64_t trials;
  std::size_t max_size;
  void (*exhaustive)(VerifyReport&);
  void (*sampled)(VerifyReport&, Rng&);
};

const std::vector<Property>& Properties() {
  static const std::vector<Property> kProperties = {
      {"mutual-eo-rates", 1, 5, MutualEoRates, nullptr},
      {"multitask-certificate", 1, 6, MultitaskCertificates, nullptr},
      {"monotonicity-adv", 1000, 10, nullptr, MonotonicityAdv},
      {"monotonicity-enabling", 1000, 8, nullptr, MonotonicityEnabling},
      {"neutral-extension", 200, 8, nullptr, NeutralExtension},
      {"oracle-equivalence", 1000, 12, nullptr, OracleEquivalence},
      {"prp-equivalence", 500, 10, nullptr, PrpEquivalence},
      {"dp-marginal", 1000, 12, nullptr, DpMarginal},
      {"eo-marginal", 1000, 12, nullptr, EoMarginal},
      {"generic-construction", 200, 36, nullptr, GenericConstructionProperty},
  };
  return kProperties;
}

}  // namespace

const std::vector<std::string>& PropertyNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& p : Properties()) out.emplace_back(p.name);
    return out;
  }();
  return kNames;
}

VerifyReport RunVerification(std::string_view property,
                             const VerifyParams& params) {
  const auto& all = Properties();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Property& p) {
    return property == p.name;
  });
  if (it == all.end()) {
    ThrowInput("unknown property '" + std::string(property) + "'");
  }
  VerifyReport r;
  r.property = it->name;
  r.params = params;
  if (r.params.trials == 0) r.params.trials = it->trials;
  if (r.params.max_size == 0) r.params.max_size = it->max_size;
  if (it->exhaustive) {
    if (r.params.max_size > 8) {
      ThrowBound("exhaustive property '" + r.property +
                 "' is bounded at 8 instances");
    }
    it->exhaustive(r);
  } else {
    if (r.params.max_size < 2) ThrowInput("max-size must be at least 2");
    Rng rng(r.params.seed);
    it->sampled(r, rng);
  }
  r.passed = r.violations == 0;
  return r;
}

}  // namespace fairaudit
