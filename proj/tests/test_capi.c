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

/* Exercises libpafbl through its C interface only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "pafbl/pafbl.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,    \
                    __LINE__, #cond);                                       \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static int near(double a, double b, double tol) { return fabs(a - b) <= tol; }

static void test_scalars(pafbl_context* ctx) {
    double x = 0.0, y = 0.0, z = 0.0;
    EXPECT(pafbl_marcum_q1(ctx, 0.0, 1.0, &x) == PAFBL_OK);
    EXPECT(near(x, exp(-0.5), 1e-13));
    EXPECT(pafbl_marcum_q1(ctx, -1.0, 1.0, &x) == PAFBL_ERR_DOMAIN);
    EXPECT(strlen(pafbl_last_error(ctx)) > 0);
    EXPECT(pafbl_fbl_error(ctx, (exp(2.0) - 1.0) / pow(10.0, 1.5), 15.0, 300, 2.0, &x) == PAFBL_OK);
    EXPECT(near(x, 0.5, 1e-12));
    EXPECT(strcmp(pafbl_last_error(ctx), "") == 0);

    EXPECT(pafbl_sigma_from_geometry(ctx, 1.5, 300.0, 0.005, 2.68e9, &x) == PAFBL_OK);
    EXPECT(near(x, 0.0, 1e-7));
    EXPECT(pafbl_sigma_from_geometry(ctx, 1.0, 10.0, 0.005, 0.0, &x) == PAFBL_ERR_DOMAIN);

    EXPECT(pafbl_conditional_error(ctx, 1.0, 0.5, 15.0, 300, 2.0, PAFBL_KERNEL_NUMERIC, &x) == PAFBL_OK);
    EXPECT(near(x, 0.070145232474045960469, 1e-7));
    EXPECT(pafbl_conditional_error(ctx, 1.0, 0.5, 15.0, 300, 2.0, (pafbl_kernel)9, &x) == PAFBL_ERR_ARGUMENT);

    EXPECT(pafbl_rate_opt(ctx, 1.0, 0.5, 15.0, 300, &x, &y) == PAFBL_OK);
    EXPECT(x > 0.0 && y > 0.0 && fabs(x - y) / y < 0.05);

    EXPECT(pafbl_average_throughput(ctx, 0.5, 15.0, 300, PAFBL_POLICY_THEOREM1, &x, &y) == PAFBL_OK);
    EXPECT(x > 1.5 && x < 2.5 && y > 0.0 && y < 1.0);
    EXPECT(pafbl_fixed_rate(ctx, 0.5, 15.0, 300, 0.0, PAFBL_KERNEL_THEOREM2, &x, &y) == PAFBL_OK);
    EXPECT(x == 0.0 && y == 0.0);

    EXPECT(pafbl_no_csit(ctx, 15.0, 300, &x, &y, &z) == PAFBL_OK);
    EXPECT(x > 0.0 && y > 0.0 && z > 0.0 && z < 1.0);
    EXPECT(pafbl_genie(ctx, 15.0, 300, &x, &y) == PAFBL_OK);
    EXPECT(x > 0.0 && x < 0.5 && near(y, 2.84189, 1e-4));
    EXPECT(pafbl_genie(ctx, 15.0, 300, NULL, &y) == PAFBL_ERR_ARGUMENT);
}

static void test_sweep(pafbl_context* ctx) {
    const char* text =
        "command: sweep-snr\n"
        "axes:\n"
        "  - snr_db: [10, 20]\n"
        "fixed: {sigma: 0.5, length: 200}\n"
        "regimes: [pa-theorem2, genie]\n"
        "output: capi.csv\n";
    pafbl_sweep* sweep = NULL;
    pafbl_result* result = NULL;
    pafbl_row row;
    EXPECT(pafbl_sweep_from_text(ctx, text, &sweep) == PAFBL_OK);
    EXPECT(pafbl_sweep_point_count(sweep) == 2);
    EXPECT(strcmp(pafbl_sweep_output_path(sweep), "capi.csv") == 0);
    EXPECT(pafbl_sweep_set_threads(ctx, sweep, 2) == PAFBL_OK);
    EXPECT(pafbl_sweep_run(ctx, sweep, &result) == PAFBL_OK);
    EXPECT(pafbl_result_row_count(result) == 4);
    EXPECT(pafbl_result_failure_count(result) == 0);
    EXPECT(pafbl_result_row(ctx, result, 3, &row) == PAFBL_OK);
    EXPECT(strcmp(row.regime, "genie") == 0);
    EXPECT(row.snr_db == 20.0);
    EXPECT(isnan(row.rate) && isnan(row.mc_std_error));
    EXPECT(row.throughput > 0.0);
    EXPECT(strcmp(row.error, "") == 0);
    EXPECT(pafbl_result_row(ctx, result, 4, &row) == PAFBL_ERR_ARGUMENT);
    pafbl_result_destroy(result);

    /* adding Monte Carlo samples appends the regime */
    EXPECT(pafbl_sweep_set_mc_samples(ctx, sweep, 5000) == PAFBL_OK);
    EXPECT(pafbl_sweep_set_seed(ctx, sweep, 3) == PAFBL_OK);
    EXPECT(pafbl_sweep_run(ctx, sweep, &result) == PAFBL_OK);
    EXPECT(pafbl_result_row_count(result) == 6);
    EXPECT(pafbl_result_row(ctx, result, 2, &row) == PAFBL_OK);
    EXPECT(strcmp(row.regime, "monte-carlo") == 0);
    EXPECT(!isnan(row.mc_std_error));
    EXPECT(pafbl_result_write_csv(ctx, result, "/nonexistent-dir/out.csv") == PAFBL_ERR_IO);
    pafbl_result_destroy(result);
    pafbl_sweep_destroy(sweep);

    EXPECT(pafbl_sweep_from_text(ctx, "command: sweep-snr\nregimes: []\n", &sweep) == PAFBL_ERR_CONFIG);
    EXPECT(sweep == NULL);
    EXPECT(strstr(pafbl_last_error(ctx), "regimes") != NULL);
    EXPECT(pafbl_sweep_from_file(ctx, "/nonexistent-dir/cfg.yaml", &sweep) != PAFBL_OK);

    EXPECT(pafbl_sweep_point(ctx, 15.0, 0.5, 300, 1.0, "genie", &sweep) == PAFBL_ERR_CONFIG);
    EXPECT(pafbl_sweep_point(ctx, 15.0, 0.5, 300, NAN, "no-such", &sweep) == PAFBL_ERR_CONFIG);
    EXPECT(pafbl_sweep_point(ctx, 15.0, 0.5, 300, NAN, "pa-numeric", &sweep) == PAFBL_OK);
    EXPECT(pafbl_sweep_run(ctx, sweep, &result) == PAFBL_OK);
    EXPECT(pafbl_result_row_count(result) == 1);
    pafbl_result_destroy(result);
    pafbl_sweep_destroy(sweep);
}

static void test_presets(pafbl_context* ctx) {
    size_t n = 0;
    const char* name = NULL;
    const char* text = NULL;
    pafbl_sweep* sweep = NULL;
    EXPECT(pafbl_preset_count(&n) == PAFBL_OK);
    EXPECT(n == 7);
    EXPECT(pafbl_preset_name(0, &name) == PAFBL_OK && strcmp(name, "fig2") == 0);
    EXPECT(pafbl_preset_name(n, &name) == PAFBL_ERR_ARGUMENT);
    EXPECT(pafbl_preset_text(ctx, "fig5", &text) == PAFBL_OK);
    EXPECT(strstr(text, "sweep-speed") != NULL);
    EXPECT(pafbl_preset_text(ctx, "fig1", &text) == PAFBL_ERR_CONFIG);
    EXPECT(pafbl_sweep_from_preset(ctx, "fig2", &sweep) == PAFBL_OK);
    EXPECT(pafbl_sweep_point_count(sweep) == 31);
    pafbl_sweep_destroy(sweep);
}

int main(void) {
    pafbl_context* ctx = NULL;
    EXPECT(pafbl_context_create(NULL) == PAFBL_ERR_ARGUMENT);
    if (pafbl_context_create(&ctx) != PAFBL_OK) {
        fprintf(stderr, "cannot create context\n");
        return 1;
    }
    EXPECT(strlen(pafbl_version()) > 0);
    EXPECT(strcmp(pafbl_status_name(PAFBL_PARTIAL), "partial failure") == 0);
    EXPECT(strcmp(pafbl_status_name((pafbl_status)99), "unknown status") == 0);
    test_scalars(ctx);
    test_sweep(ctx);
    test_presets(ctx);
    pafbl_context_destroy(ctx);
    pafbl_context_destroy(NULL);
    pafbl_sweep_destroy(NULL);
    pafbl_result_destroy(NULL);
    if (failures) {
        fprintf(stderr, "%d expectation(s) failed\n", failures);
        return 1;
    }
    printf("all C API checks passed\n");
    return 0;
}
