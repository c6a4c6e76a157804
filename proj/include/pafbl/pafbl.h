// SPDX-License-Identifier: Apache-2.0
//
// pa-fbl: link-level analysis library for predictor-antenna relays
// Copyright (C) 2026 The pa-fbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PAFBL_PAFBL_H
#define PAFBL_PAFBL_H

/* C interface of libpafbl. Handles are opaque; every fallible call returns a
 * pafbl_status and records a message retrievable with pafbl_last_error().
 * A context must not be used from two threads at once. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PAFBL_BUILDING_LIBRARY)
#    define PAFBL_API __declspec(dllexport)
#  else
#    define PAFBL_API __declspec(dllimport)
#  endif
#else
#  define PAFBL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pafbl_status {
    PAFBL_OK = 0,
    PAFBL_ERR_DOMAIN = 1,    /* argument outside the model's domain */
    PAFBL_ERR_CONFIG = 2,    /* invalid sweep configuration */
    PAFBL_PARTIAL = 3,       /* sweep finished, some rows carry an error */
    PAFBL_ERR_IO = 4,
    PAFBL_ERR_NUMERIC = 5,   /* non-convergence or overflow */
    PAFBL_ERR_STATE = 6,
    PAFBL_ERR_ARGUMENT = 7,  /* null handle or pointer, unknown enum value */
    PAFBL_ERR_INTERNAL = 8
} pafbl_status;

typedef enum pafbl_kernel {
    PAFBL_KERNEL_THEOREM1 = 0,  /* semi-linear closed form, Poisson-weighted series */
    PAFBL_KERNEL_THEOREM2 = 1,  /* F_{g|ghat}((e^R - 1) / P) */
    PAFBL_KERNEL_NUMERIC = 2    /* adaptive quadrature of the exact expectation */
} pafbl_kernel;

typedef enum pafbl_policy {
    PAFBL_POLICY_THEOREM1 = 0,
    PAFBL_POLICY_THEOREM2_CLOSED_FORM = 1,
    PAFBL_POLICY_NUMERIC_REFINED = 2
} pafbl_policy;

typedef struct pafbl_context pafbl_context;
typedef struct pafbl_sweep pafbl_sweep;
typedef struct pafbl_result pafbl_result;

/* One output row. Non-applicable numeric fields are NaN; strings stay valid
 * for the lifetime of the owning result and are never NULL. */
typedef struct pafbl_row {
    size_t index;
    const char* command;
    const char* regime;
    double snr_db;
    double sigma;
    double mismatch_d;
    double d_a;
    double v;
    double delta;
    double f_c;
    int length;
    double rate;
    double throughput;
    double error_prob;
    double rate_opt;
    const char* method;
    double mc_std_error;
    double mc_error_std_error;
    const char* error; /* empty on success */
} pafbl_row;

PAFBL_API const char* pafbl_version(void);
PAFBL_API const char* pafbl_status_name(pafbl_status status);

PAFBL_API pafbl_status pafbl_context_create(pafbl_context** out);
PAFBL_API void pafbl_context_destroy(pafbl_context* ctx);
/* Message of the last failed call on ctx; "" after a success. */
PAFBL_API const char* pafbl_last_error(const pafbl_context* ctx);

/* Scalar kernels. Powers are given as SNR in dB, rates in nats per channel use. */
PAFBL_API pafbl_status pafbl_fbl_error(pafbl_context* ctx, double g, double snr_db, int length, double rate,
                                       double* out);
PAFBL_API pafbl_status pafbl_marcum_q1(pafbl_context* ctx, double s, double rho, double* out);
PAFBL_API pafbl_status pafbl_sigma_from_geometry(pafbl_context* ctx, double d_a, double v, double delta, double f_c,
                                                 double* sigma);
PAFBL_API pafbl_status pafbl_conditional_error(pafbl_context* ctx, double ghat, double sigma, double snr_db,
                                               int length, double rate, pafbl_kernel kernel, double* out);
PAFBL_API pafbl_status pafbl_rate_opt(pafbl_context* ctx, double ghat, double sigma, double snr_db, int length,
                                      double* closed_form, double* refined);
PAFBL_API pafbl_status pafbl_average_throughput(pafbl_context* ctx, double sigma, double snr_db, int length,
                                                pafbl_policy policy, double* throughput, double* error_prob);
PAFBL_API pafbl_status pafbl_fixed_rate(pafbl_context* ctx, double sigma, double snr_db, int length, double rate,
                                        pafbl_kernel kernel, double* throughput, double* error_prob);
PAFBL_API pafbl_status pafbl_no_csit(pafbl_context* ctx, double snr_db, int length, double* rate,
                                     double* throughput, double* error_prob);
PAFBL_API pafbl_status pafbl_genie(pafbl_context* ctx, double snr_db, int length, double* eps_hat,
                                   double* throughput);

/* Sweeps. Constructors and pafbl_sweep_run set *out to NULL on failure. */
PAFBL_API pafbl_status pafbl_sweep_from_text(pafbl_context* ctx, const char* text, pafbl_sweep** out);
PAFBL_API pafbl_status pafbl_sweep_from_file(pafbl_context* ctx, const char* path, pafbl_sweep** out);
PAFBL_API pafbl_status pafbl_sweep_from_preset(pafbl_context* ctx, const char* name, pafbl_sweep** out);
/* Single operating point; rate NaN selects the adaptive rate. regime uses the config spelling. */
PAFBL_API pafbl_status pafbl_sweep_point(pafbl_context* ctx, double snr_db, double sigma, int length, double rate,
                                         const char* regime, pafbl_sweep** out);
PAFBL_API void pafbl_sweep_destroy(pafbl_sweep* sweep);

PAFBL_API pafbl_status pafbl_sweep_set_seed(pafbl_context* ctx, pafbl_sweep* sweep, uint64_t seed);
/* Sets the Monte Carlo sample count and adds the monte-carlo regime when absent. */
PAFBL_API pafbl_status pafbl_sweep_set_mc_samples(pafbl_context* ctx, pafbl_sweep* sweep, uint64_t samples);
/* 0 selects the hardware concurrency. Output does not depend on the thread count. */
PAFBL_API pafbl_status pafbl_sweep_set_threads(pafbl_context* ctx, pafbl_sweep* sweep, unsigned threads);
/* Output path named by the configuration, "" when none. */
PAFBL_API const char* pafbl_sweep_output_path(const pafbl_sweep* sweep);
PAFBL_API size_t pafbl_sweep_point_count(const pafbl_sweep* sweep);

PAFBL_API pafbl_status pafbl_preset_count(size_t* count);
PAFBL_API pafbl_status pafbl_preset_name(size_t index, const char** name);
PAFBL_API pafbl_status pafbl_preset_text(pafbl_context* ctx, const char* name, const char** text);

/* Runs the sweep. Returns PAFBL_PARTIAL (with a result) when some rows failed. */
PAFBL_API pafbl_status pafbl_sweep_run(pafbl_context* ctx, const pafbl_sweep* sweep, pafbl_result** out);
PAFBL_API void pafbl_result_destroy(pafbl_result* result);
PAFBL_API size_t pafbl_result_row_count(const pafbl_result* result);
PAFBL_API size_t pafbl_result_failure_count(const pafbl_result* result);
PAFBL_API pafbl_status pafbl_result_row(pafbl_context* ctx, const pafbl_result* result, size_t i, pafbl_row* out);
/* path "-" writes to standard output. */
PAFBL_API pafbl_status pafbl_result_write_csv(pafbl_context* ctx, const pafbl_result* result, const char* path);
PAFBL_API pafbl_status pafbl_result_write_gnuplot(pafbl_context* ctx, const pafbl_result* result, const char* path);

#ifdef __cplusplus
}
#endif

#endif
