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

// Command-line front end. Talks to the library through the C interface only.
//
// Exit codes: 0 ok, 1 internal error, 2 input error, 3 precondition,
// 4 bound exceeded, 5 a verified invariant failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fairaudit/fairaudit.h"

namespace {

constexpr int kVerifyFailed = 5;

const char* OrNull(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

int Fail(fa_status status) {
  std::cerr << "fairaudit: error: " << fa_last_error() << "\n";
  return static_cast<int>(status);
}

// Renders, prints and frees `report`; returns the exit code.
int Emit(fa_report* report, const std::string& format) {
  char* text = nullptr;
  const fa_status s = fa_report_render(report, format.c_str(), &text);
  if (s != FA_OK) {
    fa_report_free(report);
    return Fail(s);
  }
  std::cout << text;
  fa_string_free(text);
  const bool passed = fa_report_passed(report) != 0;
  fa_report_free(report);
  return passed ? 0 : kVerifyFailed;
}

struct DomainArgs {
  std::string input;
  std::string features;
  std::string task = "t";
  std::string notion = "eo";
  std::string objective = "adversarial";
  std::optional<std::string> alpha, epsilon, eta;
  std::size_t cell_bound = 22;
  std::string format = "text";
};

void AddDomainOptions(CLI::App* cmd, DomainArgs& a) {
  cmd->add_option("--input,-i", a.input,
                  "Domain document: a path, or fix-12, fix-8a, fix-8b")
      ->required();
  cmd->add_option("--features", a.features,
                  "Comma-separated feature names (empty: one cell)");
  cmd->add_option("--task", a.task, "Ground-truth task")->capture_default_str();
  cmd->add_option("--notion", a.notion, "dp, eo or prp")->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "Loss weight on false negatives, p/q");
  cmd->add_option("--epsilon", a.epsilon, "Loss budget, p/q");
  cmd->add_option("--eta", a.eta, "Unfairness budget, p/q");
  cmd->add_option("--cell-bound", a.cell_bound,
                  "Largest cell count to enumerate")
      ->capture_default_str();
  cmd->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

int LoadDomain(const std::string& input, fa_domain** out) {
  const fa_status s = fa_domain_load(input.c_str(), out);
  return s == FA_OK ? 0 : Fail(s);
}

int RunAudit(const DomainArgs& a) {
  fa_domain* domain = nullptr;
  if (int rc = LoadDomain(a.input, &domain)) return rc;
  fa_audit_options o{};
  o.features = a.features.c_str();
  o.task = a.task.c_str();
  o.notion = a.notion.c_str();
  o.objective = a.objective.c_str();
  o.alpha = OrNull(a.alpha);
  o.epsilon = OrNull(a.epsilon);
  o.eta = OrNull(a.eta);
  o.cell_bound = a.cell_bound;
  fa_report* report = nullptr;
  const fa_status s = fa_audit(domain, &o, &report);
  fa_domain_free(domain);
  return s == FA_OK ? Emit(report, a.format) : Fail(s);
}

struct ConstructExtra {
  std::string kind;
  std::optional<std::string> h_task, labeling, feature, task2;
  std::size_t search_bound = 16;
};

int RunConstruct(const DomainArgs& a, const ConstructExtra& x) {
  fa_domain* domain = nullptr;
  if (int rc = LoadDomain(a.input, &domain)) return rc;
  fa_construct_options o{};
  o.kind = x.kind.c_str();
  o.task = a.task.c_str();
  o.features = a.features.c_str();
  o.notion = a.notion.c_str();
  o.objective = a.objective.c_str();
  o.alpha = OrNull(a.alpha);
  o.epsilon = OrNull(a.epsilon);
  o.eta = OrNull(a.eta);
  o.h_task = OrNull(x.h_task);
  o.labeling = OrNull(x.labeling);
  o.feature = OrNull(x.feature);
  o.task2 = OrNull(x.task2);
  o.cell_bound = a.cell_bound;
  o.search_bound = x.search_bound;
  fa_report* report = nullptr;
  const fa_status s = fa_construct(domain, &o, &report);
  fa_domain_free(domain);
  return s == FA_OK ? Emit(report, a.format) : Fail(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit classifier fairness over feature sets, exactly."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fa_version()));

  DomainArgs audit;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Evaluate an objective over classifiers constant on cells");
  AddDomainOptions(audit_cmd, audit);
  audit_cmd
      ->add_option("--objective", audit.objective,
                   "adversarial, accuracy, enabling or frontier")
      ->check(CLI::IsMember({"adversarial", "accuracy", "enabling", "frontier"}))
      ->capture_default_str();

  DomainArgs construct;
  ConstructExtra extra;
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "Build a distribution, feature set or certificate");
  construct_cmd
      ->add_option("kind", extra.kind,
                   "dp-marginal, eo-marginal, generic-pair, context-pair, "
                   "mutual-eo, multitask, prp or deletion")
      ->required();
  AddDomainOptions(construct_cmd, construct);
  construct_cmd
      ->add_option("--objective", construct.objective,
                   "deletion: adversarial, accuracy or enabling")
      ->capture_default_str();
  construct_cmd->add_option("--h-task", extra.h_task,
                            "Classifier given as a task of the document");
  construct_cmd->add_option("--labeling", extra.labeling,
                            "Classifier given as 0/1 labels in instance order");
  construct_cmd->add_option("--feature", extra.feature, "Feature under study");
  construct_cmd->add_option("--task2", extra.task2, "Second task");
  construct_cmd
      ->add_option("--search-bound", extra.search_bound,
                   "Largest domain for the witness search")
      ->capture_default_str();

  std::string property;
  fa_verify_options verify{};
  std::string verify_format = "text";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a quantified property");
  verify_cmd->add_option("property", property, "Property name")->required();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials,
                         "Random trials (0: property default)");
  verify_cmd->add_option("--max-size", verify.max_size,
                         "Largest domain (0: property default)");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  fa_generate_options gen{};
  std::string weights = "uniform";
  std::optional<std::string> output;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random domain");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--min-instances", gen.min_instances, "Default 8");
  gen_cmd->add_option("--max-instances", gen.max_instances, "Default 8");
  gen_cmd->add_option("--min-features", gen.min_features, "Default 1");
  gen_cmd->add_option("--max-features", gen.max_features, "Default 3");
  gen_cmd->add_option("--alphabet", gen.alphabet, "Values per feature, default 2");
  gen_cmd->add_option("--weights", weights, "uniform or random")
      ->check(CLI::IsMember({"uniform", "random"}))
      ->capture_default_str();
  gen_cmd->add_option("--max-denominator", gen.max_denominator,
                      "Denominator of random weights, default 24");
  gen_cmd->add_option("--output,-o", output, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return FA_ERR_INPUT;
  }

  if (audit_cmd->parsed()) return RunAudit(audit);
  if (construct_cmd->parsed()) return RunConstruct(construct, extra);
  if (verify_cmd->parsed()) {
    verify.property = property.c_str();
    fa_report* report = nullptr;
    const fa_status s = fa_verify(&verify, &report);
    return s == FA_OK ? Emit(report, verify_format) : Fail(s);
  }
  // gen
  gen.weights = weights.c_str();
  char* doc = nullptr;
  const fa_status s = fa_generate(&gen, &doc);
  if (s != FA_OK) return Fail(s);
  int rc = 0;
  if (output) {
    std::ofstream out(*output, std::ios::binary);
    out << doc;
    if (!out) {
      std::cerr << "fairaudit: error: cannot write '" << *output << "'\n";
      rc = FA_ERR_INPUT;
    }
  } else {
    std::cout << doc;
  }
  fa_string_free(doc);
  return rc;
}
