/* Copyright 2026 The fairaudit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the auditing library.
 *
 * Domains and reports are opaque handles. Every call returns an fa_status;
 * on failure fa_last_error() holds a message for the calling thread until
 * its next call into the library. Strings handed out by the library are
 * released with fa_string_free. Optional string fields in option structs
 * are NULL when absent. */

#ifndef FAIRAUDIT_FAIRAUDIT_H_
#define FAIRAUDIT_FAIRAUDIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FAIRAUDIT_BUILDING)
#define FA_API __attribute__((visibility("default")))
#else
#define FA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fa_status {
  FA_OK = 0,
  FA_ERR_INTERNAL = 1,
  FA_ERR_INPUT = 2,        /* malformed document or argument */
  FA_ERR_PRECONDITION = 3, /* well-formed input outside a routine's domain */
  FA_ERR_BOUND = 4,        /* a size bound would be exceeded */
} fa_status;

typedef struct fa_domain fa_domain;
typedef struct fa_report fa_report;

/* `name_or_path` is a fixture name (fix-12, fix-8a, fix-8b) or a file path. */
FA_API fa_status fa_domain_load(const char* name_or_path, fa_domain** out);
/* Parses `len` bytes of a JSON document; `source` labels it in reports. */
FA_API fa_status fa_domain_parse(const char* source, const char* bytes,
                                 size_t len, fa_domain** out);
FA_API void fa_domain_free(fa_domain* domain);
FA_API size_t fa_domain_size(const fa_domain* domain);

typedef struct fa_audit_options {
  const char* features;  /* comma-separated feature names; "" for none */
  const char* task;      /* NULL: "t" */
  const char* notion;    /* dp, eo, prp; NULL: eo */
  const char* objective; /* adversarial, accuracy, enabling, frontier */
  const char* alpha;     /* "p/q" */
  const char* epsilon;
  const char* eta;
  size_t cell_bound; /* 0: 22 */
} fa_audit_options;

FA_API fa_status fa_audit(const fa_domain* domain,
                          const fa_audit_options* options, fa_report** out);

typedef struct fa_construct_options {
  const char* kind; /* dp-marginal, eo-marginal, generic-pair, context-pair,
                       mutual-eo, multitask, prp, deletion */
  const char* task;
  const char* features;
  const char* notion;
  const char* objective;
  const char* alpha;
  const char* epsilon;
  const char* eta;
  const char* h_task;   /* classifier as a task name */
  const char* labeling; /* or as a 0/1 string in instance order */
  const char* feature;
  const char* task2;
  size_t cell_bound;   /* 0: 22 */
  size_t search_bound; /* 0: 16 */
} fa_construct_options;

FA_API fa_status fa_construct(const fa_domain* domain,
                              const fa_construct_options* options,
                              fa_report** out);

typedef struct fa_verify_options {
  const char* property;
  uint64_t seed;
  uint64_t trials;   /* 0: the property's default */
  size_t max_size;   /* 0: the property's default */
} fa_verify_options;

FA_API fa_status fa_verify(const fa_verify_options* options, fa_report** out);

typedef struct fa_generate_options {
  uint64_t seed;
  size_t min_instances;  /* 0: 8 */
  size_t max_instances;  /* 0: 8 */
  size_t min_features;   /* 0: 1 */
  size_t max_features;   /* 0: 3 */
  size_t alphabet;       /* 0: 2 */
  const char* weights;   /* uniform or random; NULL: uniform */
  size_t max_denominator; /* 0: 24 */
} fa_generate_options;

/* Writes a JSON domain document to *out. */
FA_API fa_status fa_generate(const fa_generate_options* options, char** out);

/* `format` is "json" or "text". */
FA_API fa_status fa_report_render(const fa_report* report, const char* format,
                                  char** out);
/* 0 when a verified invariant failed, 1 otherwise. */
FA_API int fa_report_passed(const fa_report* report);
FA_API void fa_report_free(fa_report* report);

FA_API void fa_string_free(char* s);
FA_API const char* fa_last_error(void);
FA_API const char* fa_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FAIRAUDIT_FAIRAUDIT_H_ */
