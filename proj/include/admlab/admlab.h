// Copyright 2026 The admlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADMLAB_ADMLAB_H_
#define ADMLAB_ADMLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ADMLAB_API __declspec(dllexport)
#else
#define ADMLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum admlab_status {
  ADMLAB_OK = 0,
  /* The computation succeeded and its verdict is negative (inadmissible,
     infeasible, condition fails). A report is still produced. */
  ADMLAB_NEGATIVE = 1,
  ADMLAB_INPUT_ERROR = 2,
  ADMLAB_INTERNAL_ERROR = 3
} admlab_status;

typedef struct admlab_problem admlab_problem;
typedef struct admlab_report admlab_report;

ADMLAB_API const char* admlab_version(void);

/* Message for the most recent failure on the calling thread; "" if none. */
ADMLAB_API const char* admlab_last_error(void);

ADMLAB_API admlab_status admlab_problem_load(const char* json_text, admlab_problem** out);
ADMLAB_API admlab_status admlab_problem_load_file(const char* path, admlab_problem** out);
ADMLAB_API admlab_status admlab_problem_generate(size_t num_thetas, size_t num_procs,
                                                uint64_t seed, int allow_mixtures,
                                                admlab_problem** out);
/* Serializes the problem as a JSON report. */
ADMLAB_API admlab_status admlab_problem_save(const admlab_problem* problem, admlab_report** out);
ADMLAB_API size_t admlab_problem_num_thetas(const admlab_problem* problem);
ADMLAB_API size_t admlab_problem_num_procs(const admlab_problem* problem);
ADMLAB_API void admlab_problem_free(admlab_problem* problem);

/* Labels refer to the problem file. Rationals are text such as "1/10",
   "0.1" or "1e-1". */

/* With delta == NULL reports the admissible set (always ADMLAB_OK);
   otherwise the hull dominance verdict for delta. */
ADMLAB_API admlab_status admlab_check(const admlab_problem* problem, const char* delta,
                                      admlab_report** out);
ADMLAB_API admlab_status admlab_certify(const admlab_problem* problem, const char* delta,
                                        admlab_report** out);
ADMLAB_API admlab_status admlab_witness(const admlab_problem* problem, const char* delta,
                                        admlab_report** out);
ADMLAB_API admlab_status admlab_stein(const admlab_problem* problem, const char* delta,
                                      const char* theta0, const char* eps, admlab_report** out);

/* prior: name of a prior stored in the problem file, or a list such as
   "t1=1 - eps,t2=eps". family: "singletons", "whole" (one set holding
   every parameter), or sets separated by ';' with members separated by
   ',' (e.g. "t1;t1,t2"). mode "stein" uses eps (default 1); mode "blyth"
   uses rho (default: the smallest prior weight). */
ADMLAB_API admlab_status admlab_ns(const admlab_problem* problem, const char* delta,
                                   const char* prior, const char* family, const char* mode,
                                   const char* eps, const char* rho, admlab_report** out);
ADMLAB_API admlab_status admlab_game(const admlab_problem* problem, const char* delta,
                                     const char* theta0, const char* gamma, admlab_report** out);

typedef enum admlab_gd_kind {
  ADMLAB_GD_RISK = 0,
  ADMLAB_GD_DIFF = 1,
  ADMLAB_GD_EXCESS = 2,
  ADMLAB_GD_MASS = 3,
  ADMLAB_GD_BLYTH = 4
} admlab_gd_kind;

typedef struct admlab_gd_config {
  admlab_gd_kind kind;
  /* Sampling model. */
  double mu;
  double sigma1_sq;
  double sigma2_sq;
  int n;
  /* Inverse-gamma prior. */
  double alpha;
  double beta;
  /* Rectangle [a1,b1]x[a2,b2]. */
  double a1, b1, a2, b2;
  /* Decreasing beta sequence for ADMLAB_GD_BLYTH. */
  const double* betas;
  size_t num_betas;
  /* Choices of phi: "gd", "bayes", "oracle", "zero", "half", "one". */
  const char* phi0;
  const char* phi1;
  uint64_t seed;
  uint64_t samples;
  unsigned shards;
  unsigned threads;
} admlab_gd_config;

/* Fills defaults: n = 5, alpha = 0.25, beta = 1e-3, unit variances,
   rectangle [1,2]^2, phi0 = "gd", phi1 = "bayes", seed 1, 10^6 samples,
   16 shards. */
ADMLAB_API void admlab_gd_config_init(admlab_gd_config* config);

/* JSON report, or CSV for ADMLAB_GD_BLYTH. */
ADMLAB_API admlab_status admlab_gd(const admlab_gd_config* config, admlab_report** out);

ADMLAB_API const char* admlab_report_text(const admlab_report* report);
/* "application/json" or "text/csv". */
ADMLAB_API const char* admlab_report_format(const admlab_report* report);
ADMLAB_API void admlab_report_free(admlab_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ADMLAB_ADMLAB_H_ */
