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

#include "report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "audit.hpp"
#include "constructors.hpp"
#include "context.hpp"
#include "document.hpp"
#include "error.hpp"
#include "metrics.hpp"

namespace fairaudit {
namespace {

using nlohmann::ordered_json;

ordered_json Ids(const DomainInstance& d, std::span<const std::size_t> set) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : set) out.push_back(d.id(i));
  return out;
}

ordered_json CellsJson(const DomainInstance& d, const CellPartition& cells) {
  ordered_json out = ordered_json::array();
  for (const auto& c : cells.cells) out.push_back(Ids(d, c));
  return out;
}

ordered_json ClassifierJson(const DomainInstance& d, const CellPartition& cells,
                            const Classifier& h) {
  ordered_json out = ordered_json::array();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out.push_back({{"cell", Ids(d, cells.cells[c])},
                   {"label", static_cast<int>(h.labels[c])}});
  }
  return out;
}

ordered_json WeightsJson(const DomainInstance& d,
                         const std::vector<Rational>& w) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < d.size(); ++i) out[d.id(i)] = w[i].ToString();
  return out;
}

ordered_json LabelingJson(const DomainInstance& d, std::span<const Label> l) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < d.size(); ++i) out[d.id(i)] = static_cast<int>(l[i]);
  return out;
}

ordered_json NamesJson(const std::vector<std::string>& names) {
  ordered_json out = ordered_json::array();
  for (const auto& n : names) out.push_back(n);
  return out;
}

ordered_json Skeleton(std::string_view command, ordered_json args,
                      const LoadedDomain* input) {
  ordered_json body;
  body["schema"] = kReportSchema;
  body["command"] = {{"name", command}, {"args", std::move(args)}};
  body["inputs_digest"] =
      input ? ordered_json(Sha256Digest(input->bytes)) : ordered_json(nullptr);
  body["results"] = ordered_json::object();
  if (input && !input->domain.annotations_json().empty()) {
    body["annotations"] =
        ordered_json::parse(input->domain.annotations_json());
  } else {
    body["annotations"] = nullptr;
  }
  return body;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rational RequireRational(const std::optional<std::string>& text,
                         const char* flag) {
  if (!text) ThrowInput(std::string("missing --") + flag);
  return Rational::Parse(*text);
}

Rational AlphaOrHalf(const std::optional<std::string>& text) {
  const Rational alpha = text ? Rational::Parse(*text) : Rational(1, 2);
  CheckAlpha(alpha);
  return alpha;
}

Labeling ClassifierFrom(const DomainInstance& d, const ConstructArgs& a) {
  if (a.h_task && a.labeling) {
    ThrowInput("give the classifier as --h-task or --labeling, not both");
  }
  if (a.h_task) return d.Task(*a.h_task);
  if (!a.labeling) ThrowInput("missing classifier: pass --h-task or --labeling");
  std::vector<std::string> parts = SplitList(*a.labeling);
  std::string digits = parts.size() == 1 ? parts[0] : "";
  if (parts.size() > 1) {
    for (const auto& p : parts) digits += p;
  }
  if (digits.size() != d.size()) {
    ThrowInput("--labeling has " + std::to_string(digits.size()) +
               " labels, domain has " + std::to_string(d.size()));
  }
  Labeling h(d.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != '0' && digits[i] != '1') {
      ThrowInput("--labeling must consist of 0 and 1");
    }
    h[i] = static_cast<Label>(digits[i] - '0');
  }
  return h;
}

ordered_json WitnessJson(const DomainInstance& d, const GenericWitness& w) {
  return {{"C1", Ids(d, w.c1)},
          {"C2", Ids(d, w.c2)},
          {"C3", Ids(d, w.c3)},
          {"y1", w.y1},
          {"y2", w.y2},
          {"y3", w.y3},
          {"l1", static_cast<int>(w.l1)},
          {"G1", GroupName(w.g1)}};
}

ordered_json CheckJson(const GenericCheck& c) {
  ordered_json conditions = ordered_json::array();
  for (bool b : c.conditions) conditions.push_back(b);
  return {{"conditions", conditions},
          {"nondegenerate", c.nondegenerate},
          {"condition6_lhs", RationalJson(c.condition6_lhs)},
          {"condition6_rhs", RationalJson(c.condition6_rhs)},
          {"generic", c.ok()}};
}

ordered_json ArgsCommon(const LoadedDomain& input) {
  ordered_json args;
  args["input"] = input.source;
  return args;
}

}  // namespace

ordered_json RationalJson(const Rational& r) {
  return {{"exact", r.ToString()}, {"decimal", r.ToDecimal(6)}};
}

std::string Sha256Digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    ThrowInternal("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

LoadedDomain ParseDocument(std::string source, std::string bytes) {
  DomainInstance d = ParseDomain(bytes);
  return LoadedDomain{std::move(source), std::move(bytes), std::move(d)};
}

LoadedDomain LoadDocument(std::string_view name_or_path) {
  const std::string path = ResolveInputPath(name_or_path);
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInput("cannot open input '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDocument(std::string(name_or_path), buffer.str());
}

Report RunAudit(const LoadedDomain& input, const AuditArgs& a) {
  const DomainInstance& d = input.domain;
  const Notion notion = ParseNotion(a.notion);
  const bool frontier = a.objective == "frontier";
  const Objective objective =
      frontier ? Objective::kAccuracyDriven : ParseObjective(a.objective);
  const bool uses_alpha = frontier || objective != Objective::kAdversarial;
  const bool enabling = !frontier && objective == Objective::kFairnessEnabling;

  ordered_json args = ArgsCommon(input);
  args["features"] = NamesJson(a.features);
  args["task"] = a.task;
  args["notion"] = NotionName(notion);
  args["objective"] = frontier ? "frontier" : ObjectiveName(objective);
  std::optional<Rational> alpha, epsilon, eta;
  if (uses_alpha) {
    alpha = AlphaOrHalf(a.alpha);
    args["alpha"] = alpha->ToString();
  }
  if (enabling) {
    epsilon = RequireRational(a.epsilon, "epsilon");
    eta = RequireRational(a.eta, "eta");
    args["epsilon"] = epsilon->ToString();
    args["eta"] = eta->ToString();
  }
  args["cell_bound"] = a.cell_bound;

  const Labeling& truth = d.Task(a.task);
  const FeatureSet fs = d.Features(a.features);
  const CellPartition cells = InduceCells(d, fs);
  AuditOptions options;
  options.cell_bound = a.cell_bound;

  Report report;
  report.body = Skeleton("audit", std::move(args), &input);
  ordered_json& r = report.body["results"];
  r["cells"] = CellsJson(d, cells);

  if (frontier) {
    ordered_json points = ordered_json::array();
    for (const auto& p : Frontier(d, truth, cells, *alpha, notion, options)) {
      points.push_back({{"loss", RationalJson(p.loss)},
                        {"unfairness", RationalJson(p.unfairness)},
                        {"classifier", ClassifierJson(d, cells, p.classifier)}});
    }
    r["frontier"] = std::move(points);
    return report;
  }

  AuditResult result;
  switch (objective) {
    case Objective::kAdversarial:
      result = AdversarialUnfairness(d, truth, cells, notion, options);
      break;
    case Objective::kAccuracyDriven:
      result =
          AccuracyDrivenUnfairness(d, truth, cells, *alpha, notion, options);
      break;
    case Objective::kFairnessEnabling:
      result = FairnessEnabling(d, truth, cells, *epsilon, *eta, *alpha,
                                notion, options);
      break;
  }
  if (enabling) {
    r["enabling"] = result.enabling();
  } else {
    r["value"] = RationalJson(result.value);
    if (notion == Notion::kPRP) r["prp_fair"] = result.value.IsZero();
  }
  ordered_json witnesses = ordered_json::array();
  for (const auto& h : result.witnesses) {
    const Labeling preds = Predictions(h, cells);
    ordered_json w;
    w["classifier"] = ClassifierJson(d, cells, h);
    w["unfairness"] = RationalJson(UnfairnessValue(notion, d, truth, preds));
    if (alpha) w["loss"] = RationalJson(WeightedLoss(d, truth, preds, *alpha));
    witnesses.push_back(std::move(w));
  }
  r["witnesses"] = std::move(witnesses);
  if (result.min_loss) {
    r["min_loss"] = RationalJson(*result.min_loss);
    r["minimizer_count"] = result.minimizer_count;
  }
  return report;
}

Report RunConstruct(const LoadedDomain& input, const ConstructArgs& a) {
  const DomainInstance& d = input.domain;
  ordered_json args = ArgsCommon(input);
  args["kind"] = a.kind;
  Report report;
  auto start = [&](ordered_json&& resolved) -> ordered_json& {
    report.body = Skeleton("construct", std::move(resolved), &input);
    return report.body["results"];
  };
  auto require_feature = [&]() -> const Feature& {
    if (!a.feature) ThrowInput("missing --feature");
    return d.GetFeature(*a.feature);
  };
  auto require_task2 = [&]() -> const std::string& {
    if (!a.task2) ThrowInput("missing --task2");
    return *a.task2;
  };

  if (a.kind == "dp-marginal" || a.kind == "eo-marginal") {
    const bool eo = a.kind == "eo-marginal";
    const Labeling h = ClassifierFrom(d, a);
    if (eo) args["task"] = a.task;
    if (a.h_task) args["h_task"] = *a.h_task;
    if (a.labeling) args["labeling"] = *a.labeling;
    const AdversarialMarginal m =
        eo ? EoAdversarialMarginal(d, d.Task(a.task), h)
           : DpAdversarialMarginal(d, h);
    ordered_json& r = start(std::move(args));
    r["notion"] = NotionName(m.notion);
    r["construction_case"] = m.construction_case;
    if (eo) {
      r["label"] = static_cast<int>(m.label);
      r["h_constant_on_group"] = m.h_constant_on_group;
    }
    r["classifier"] = LabelingJson(d, h);
    r["weights"] = WeightsJson(d, m.weights);
    r["target_unfairness"] = RationalJson(m.target_unfairness);
    r["achieved_unfairness"] = RationalJson(m.achieved);
    return report;
  }

  if (a.kind == "generic-pair" || a.kind == "context-pair") {
    const Feature& f = require_feature();
    args["task"] = a.task;
    args["feature"] = f.name();
    if (a.kind == "generic-pair") args["search_bound"] = a.search_bound;
    const Labeling& truth = d.Task(a.task);
    const GenericConstruction g = ConstructGenericDistribution(f, d, truth);
    const DomainInstance weighted = d.WithWeights(g.weights);
    ordered_json& r = start(std::move(args));
    const NonCommitting nc = IsNonCommitting(f, d, truth);
    r["non_committing"] = {nc.values->first, nc.values->second};
    r["two_anonymous"] = g.two_anonymous;
    r["c3_meets_all_quadrants"] = g.c3_meets_all_quadrants;
    r["witness"] = WitnessJson(d, g.witness);
    r["witness"]["C4"] = Ids(d, g.c4);
    r["weights"] = WeightsJson(d, g.weights);
    r["check"] = CheckJson(g.check);
    if (a.kind == "generic-pair") {
      ordered_json search;
      if (d.size() <= a.search_bound) {
        const auto found = FindGenericWitness(f, weighted, truth, a.search_bound);
        search["found"] = found.has_value();
        if (found) search["witness"] = WitnessJson(d, *found);
      } else {
        search["skipped"] = "domain exceeds the search bound";
      }
      r["search"] = std::move(search);
      return report;
    }
    const ContextPair cp =
        ConstructContextFeaturesets(f, weighted, truth, g.witness);
    auto side = [&](const FeatureSet& fs, const Rational& without,
                    const Rational& with, bool holds) {
      return ordered_json{
          {"cells", CellsJson(d, InduceCells(weighted, fs))},
          {"cells_with_feature", CellsJson(d, InduceCells(weighted, fs.With(f)))},
          {"u_acc_without", RationalJson(without)},
          {"u_acc_with", RationalJson(with)},
          {"strict", holds}};
    };
    r["alpha"] = "1/2";
    r["increasing"] = side(cp.fs_increasing, cp.increasing_without,
                           cp.increasing_with, cp.increasing_holds);
    r["decreasing"] = side(cp.fs_decreasing, cp.decreasing_without,
                           cp.decreasing_with, cp.decreasing_holds);
    report.passed = cp.increasing_holds && cp.decreasing_holds;
    return report;
  }

  if (a.kind == "mutual-eo") {
    const std::string& t2 = require_task2();
    args["task"] = a.task;
    args["task2"] = t2;
    const MutualEoReport m = MutualEoAudit(d, d.Task(a.task), d.Task(t2));
    ordered_json& r = start(std::move(args));
    r["eo_f_given_g"] = RationalJson(m.eo_f_given_g);
    r["eo_g_given_f"] = RationalJson(m.eo_g_given_f);
    r["positive_rates"] = {{"f_A", RationalJson(m.pos_rate_f_a)},
                           {"f_D", RationalJson(m.pos_rate_f_d)},
                           {"g_A", RationalJson(m.pos_rate_g_a)},
                           {"g_D", RationalJson(m.pos_rate_g_d)}};
    r["disagreement_mass"] = RationalJson(m.disagreement_mass);
    r["complementary"] = m.complementary;
    r["premise"] = m.premise;
    r["conclusion_holds"] = m.conclusion_holds;
    report.passed = m.conclusion_holds;
    return report;
  }

  if (a.kind == "multitask") {
    const std::string& t2 = require_task2();
    args["features"] = NamesJson(a.features);
    args["task"] = a.task;
    args["task2"] = t2;
    const MultitaskCertificate c =
        MultitaskCertificateFor(d, d.Features(a.features), a.task, t2);
    ordered_json& r = start(std::move(args));
    r["adv_fair_task1"] = c.adv_fair_task1;
    r["adv_fair_task2"] = c.adv_fair_task2;
    r["perfect_accuracy_both"] = c.perfect_accuracy_both;
    r["tasks_differ_on_support"] = c.tasks_differ_on_support;
    r["equal_success_rates_1"] = c.equal_success_rates_1;
    r["equal_success_rates_2"] = c.equal_success_rates_2;
    r["tasks_complementary"] = c.tasks_complementary;
    r["invariant_holds"] = c.invariant_holds;
    report.passed = c.invariant_holds;
    return report;
  }

  if (a.kind == "prp") {
    args["task"] = a.task;
    const PrpFeasibility p = CheckPrpFeasibility(d, d.Task(a.task));
    ordered_json& r = start(std::move(args));
    r["feasible"] = p.feasible;
    r["success_rate_A"] = RationalJson(p.rates.rate_a);
    r["success_rate_D"] = RationalJson(p.rates.rate_d);
    r["all_one_prp_fair"] = p.all_one.prp_fair();
    return report;
  }

  if (a.kind == "deletion") {
    const Feature& f = require_feature();
    const Notion notion = ParseNotion(a.notion);
    const Objective objective = ParseObjective(a.objective);
    DeletionParams p;
    p.notion = notion;
    p.options.cell_bound = a.cell_bound;
    args["features"] = NamesJson(a.features);
    args["feature"] = f.name();
    args["task"] = a.task;
    args["notion"] = NotionName(notion);
    args["objective"] = ObjectiveName(objective);
    if (objective != Objective::kAdversarial) {
      p.alpha = AlphaOrHalf(a.alpha);
      args["alpha"] = p.alpha.ToString();
    }
    if (objective == Objective::kFairnessEnabling) {
      p.epsilon = RequireRational(a.epsilon, "epsilon");
      p.eta = RequireRational(a.eta, "eta");
      args["epsilon"] = p.epsilon.ToString();
      args["eta"] = p.eta.ToString();
    }
    args["cell_bound"] = a.cell_bound;
    const DeletionEffect e = MeasureDeletionEffect(
        d, d.Task(a.task), d.Features(a.features), f, objective, p);
    ordered_json& r = start(std::move(args));
    r["without"] = RationalJson(e.without);
    r["with"] = RationalJson(e.with);
    r["direction"] = DirectionName(e.direction);
    return report;
  }

  ThrowInput("unknown construction kind '" + a.kind + "'");
}

Report RunVerify(std::string_view property, const VerifyParams& params) {
  const VerifyReport v = RunVerification(property, params);
  ordered_json args;
  args["property"] = v.property;
  args["seed"] = v.params.seed;
  args["trials"] = v.params.trials;
  args["max_size"] = v.params.max_size;
  Report report;
  report.body = Skeleton("verify", std::move(args), nullptr);
  ordered_json& r = report.body["results"];
  r["passed"] = v.passed;
  r["exhaustive"] = v.exhaustive;
  r["checked"] = v.checked;
  r["violations"] = v.violations;
  if (v.violations_excluding_complements) {
    r["violations_excluding_complements"] = *v.violations_excluding_complements;
  }
  r["quantified_over"] = v.detail;
  r["counterexample"] =
      v.counterexample ? *v.counterexample : ordered_json(nullptr);
  report.passed = v.passed;
  return report;
}

std::string GenerateDocument(const GeneratorParams& params) {
  return DomainToJson(GenerateDomain(params)).dump(2) + "\n";
}

std::string RenderJson(const Report& report) {
  return report.body.dump(2) + "\n";
}

namespace {

bool IsRational(const ordered_json& v) {
  return v.is_object() && v.size() == 2 && v.contains("exact") &&
         v.contains("decimal");
}

std::string Scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (IsRational(v)) {
    return v["exact"].get<std::string>() + " (" +
           v["decimal"].get<std::string>() + ")";
  }
  return v.dump();
}

// [{"cell": [...], "label": l}, ...]
bool IsClassifier(const ordered_json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& e : v) {
    if (!e.is_object() || e.size() != 2 || !e.contains("cell") ||
        !e.contains("label")) {
      return false;
    }
  }
  return true;
}

bool Inline(const ordered_json& v) {
  if (!v.is_structured() || IsRational(v) || IsClassifier(v)) return true;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object()) return false;
      if (e.is_array()) {
        for (const auto& x : e) {
          if (x.is_structured()) return false;
        }
      }
    }
    return true;
  }
  return false;
}

std::string InlineText(const ordered_json& v) {
  if (IsClassifier(v)) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += " ";
      out += "{" + InlineText(e["cell"]) + "}->" + e["label"].dump();
    }
    return out;
  }
  if (!v.is_array()) return Scalar(v);
  std::string out;
  for (const auto& e : v) {
    if (!out.empty()) out += e.is_array() ? " " : ", ";
    out += e.is_array() ? "{" + InlineText(e) + "}" : Scalar(e);
  }
  return out;
}

void Render(const std::string& key, const ordered_json& v, int depth,
            std::string& out) {
  const std::string pad(2 * depth, ' ');
  if (key == "document" || Inline(v)) {
    out += pad + key + ": " + (key == "document" ? v.dump() : InlineText(v)) +
           "\n";
    return;
  }
  out += pad + key + ":\n";
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      Render("[" + std::to_string(i) + "]", v[i], depth + 1, out);
    }
    return;
  }
  for (const auto& [k, child] : v.items()) Render(k, child, depth + 1, out);
}

}  // namespace

std::string RenderText(const Report& report) {
  const ordered_json& b = report.body;
  std::string out;
  out += b["command"]["name"].get<std::string>() + " (" +
         b["schema"].get<std::string>() + ")\n";
  for (const auto& [k, v] : b["command"]["args"].items()) {
    out += "  " + k + ": " + InlineText(v) + "\n";
  }
  if (!b["inputs_digest"].is_null()) {
    out += "inputs digest: " + b["inputs_digest"].get<std::string>() + "\n";
  }
  for (const auto& [k, v] : b["results"].items()) Render(k, v, 0, out);
  if (!b["annotations"].is_null()) Render("annotations", b["annotations"], 0, out);
  return out;
}

}  // namespace fairaudit
