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

#include "fairaudit/fairaudit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "error.hpp"
#include "report.hpp"

struct fa_domain {
  fairaudit::LoadedDomain loaded;
};

struct fa_report {
  fairaudit::Report report;
};

namespace {

static_assert(FA_ERR_INPUT == static_cast<int>(fairaudit::ErrorCode::kInput));
static_assert(FA_ERR_PRECONDITION ==
              static_cast<int>(fairaudit::ErrorCode::kPrecondition));
static_assert(FA_ERR_BOUND ==
              static_cast<int>(fairaudit::ErrorCode::kBoundExceeded));
static_assert(FA_ERR_INTERNAL ==
              static_cast<int>(fairaudit::ErrorCode::kInternal));

thread_local std::string last_error;

template <typename F>
fa_status Guard(F&& body) {
  last_error.clear();
  try {
    body();
    return FA_OK;
  } catch (const fairaudit::Error& e) {
    last_error = e.what();
    return static_cast<fa_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("internal invariant violated: ") + e.what();
  } catch (...) {
    last_error = "internal invariant violated: unknown exception";
  }
  return FA_ERR_INTERNAL;
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) fairaudit::ThrowInput(std::string(what) + " is NULL");
}

std::optional<std::string> Opt(const char* s) {
  return s ? std::optional<std::string>(s) : std::nullopt;
}

std::vector<std::string> SplitList(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

fa_status fa_domain_load(const char* name_or_path, fa_domain** out) {
  return Guard([&] {
    RequireNonNull(name_or_path, "input name");
    RequireNonNull(out, "output handle");
    *out = new fa_domain{fairaudit::LoadDocument(name_or_path)};
  });
}

fa_status fa_domain_parse(const char* source, const char* bytes, size_t len,
                          fa_domain** out) {
  return Guard([&] {
    RequireNonNull(bytes, "document bytes");
    RequireNonNull(out, "output handle");
    *out = new fa_domain{fairaudit::ParseDocument(
        source ? source : "<memory>", std::string(bytes, len))};
  });
}

void fa_domain_free(fa_domain* domain) { delete domain; }

size_t fa_domain_size(const fa_domain* domain) {
  return domain ? domain->loaded.domain.size() : 0;
}

fa_status fa_audit(const fa_domain* domain, const fa_audit_options* options,
                   fa_report** out) {
  return Guard([&] {
    RequireNonNull(domain, "domain");
    RequireNonNull(options, "options");
    RequireNonNull(out, "output handle");
    fairaudit::AuditArgs a;
    a.features = SplitList(options->features);
    if (options->task) a.task = options->task;
    if (options->notion) a.notion = options->notion;
    if (options->objective) a.objective = options->objective;
    a.alpha = Opt(options->alpha);
    a.epsilon = Opt(options->epsilon);
    a.eta = Opt(options->eta);
    if (options->cell_bound) a.cell_bound = options->cell_bound;
    *out = new fa_report{fairaudit::RunAudit(domain->loaded, a)};
  });
}

fa_status fa_construct(const fa_domain* domain,
                       const fa_construct_options* options, fa_report** out) {
  return Guard([&] {
    RequireNonNull(domain, "domain");
    RequireNonNull(options, "options");
    RequireNonNull(options->kind, "construction kind");
    RequireNonNull(out, "output handle");
    fairaudit::ConstructArgs a;
    a.kind = options->kind;
    if (options->task) a.task = options->task;
    a.features = SplitList(options->features);
    if (options->notion) a.notion = options->notion;
    if (options->objective) a.objective = options->objective;
    a.alpha = Opt(options->alpha);
    a.epsilon = Opt(options->epsilon);
    a.eta = Opt(options->eta);
    a.h_task = Opt(options->h_task);
    a.labeling = Opt(options->labeling);
    a.feature = Opt(options->feature);
    a.task2 = Opt(options->task2);
    if (options->cell_bound) a.cell_bound = options->cell_bound;
    if (options->search_bound) a.search_bound = options->search_bound;
    *out = new fa_report{fairaudit::RunConstruct(domain->loaded, a)};
  });
}

fa_status fa_verify(const fa_verify_options* options, fa_report** out) {
  return Guard([&] {
    RequireNonNull(options, "options");
    RequireNonNull(options->property, "property");
    RequireNonNull(out, "output handle");
    fairaudit::VerifyParams p;
    p.seed = options->seed;
    p.trials = options->trials;
    p.max_size = options->max_size;
    *out = new fa_report{fairaudit::RunVerify(options->property, p)};
  });
}

fa_status fa_generate(const fa_generate_options* options, char** out) {
  return Guard([&] {
    RequireNonNull(options, "options");
    RequireNonNull(out, "output string");
    fairaudit::GeneratorParams p;
    p.seed = options->seed;
    if (options->min_instances) p.min_instances = options->min_instances;
    if (options->max_instances) p.max_instances = options->max_instances;
    if (options->min_features) p.min_features = options->min_features;
    if (options->max_features) p.max_features = options->max_features;
    if (options->alphabet) p.alphabet = options->alphabet;
    if (options->weights) p.weights = fairaudit::ParseWeightStyle(options->weights);
    if (options->max_denominator) p.max_denominator = options->max_denominator;
    *out = Copy(fairaudit::GenerateDocument(p));
  });
}

fa_status fa_report_render(const fa_report* report, const char* format,
                           char** out) {
  return Guard([&] {
    RequireNonNull(report, "report");
    RequireNonNull(out, "output string");
    const std::string f = format ? format : "text";
    if (f == "json") {
      *out = Copy(fairaudit::RenderJson(report->report));
    } else if (f == "text") {
      *out = Copy(fairaudit::RenderText(report->report));
    } else {
      fairaudit::ThrowInput("unknown format '" + f + "'; use json or text");
    }
  });
}

int fa_report_passed(const fa_report* report) {
  return report && report->report.passed ? 1 : 0;
}

void fa_report_free(fa_report* report) { delete report; }

void fa_string_free(char* s) { std::free(s); }

const char* fa_last_error(void) { return last_error.c_str(); }

const char* fa_version(void) { return "0.1.0"; }

}  // extern "C"
