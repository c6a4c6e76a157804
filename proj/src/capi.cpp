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

#include "pafbl/pafbl.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "pafbl/benchmarks.hpp"
#include "pafbl/channel.hpp"
#include "pafbl/error.hpp"
#include "pafbl/fbl.hpp"
#include "pafbl/rate_adapt.hpp"
#include "pafbl/specfun.hpp"
#include "pafbl/sweep.hpp"

struct pafbl_context {
    std::string last_error;
};

struct pafbl_sweep {
    pafbl::sweep::SweepSpec spec;
    pafbl::sweep::RunOptions options;
};

struct pafbl_result {
    pafbl::sweep::SweepSpec spec;
    std::vector<pafbl::sweep::SweepRow> rows;
    std::vector<std::string> commands;  // stable storage for pafbl_row strings
    std::vector<std::string> regimes;
};

namespace {

using namespace pafbl;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs f, translating exceptions into status codes and the context message.
template <typename F>
pafbl_status guarded(pafbl_context* ctx, F&& f) {
    if (ctx == nullptr) return PAFBL_ERR_ARGUMENT;
    ctx->last_error.clear();
    try {
        return f();
    } catch (const ConfigError& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_CONFIG;
    } catch (const IoError& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_IO;
    } catch (const NumericError& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_NUMERIC;
    } catch (const StateError& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_STATE;
    } catch (const std::domain_error& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_DOMAIN;
    } catch (const std::overflow_error& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_NUMERIC;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return PAFBL_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown exception";
        return PAFBL_ERR_INTERNAL;
    }
}

pafbl_status fail(pafbl_context* ctx, pafbl_status status, const char* msg) {
    ctx->last_error = msg;
    return status;
}

bool kernel_of(pafbl_kernel k, rate::Method& out) {
    switch (k) {
        case PAFBL_KERNEL_THEOREM1: out = rate::Method::theorem1; return true;
        case PAFBL_KERNEL_THEOREM2: out = rate::Method::theorem2; return true;
        case PAFBL_KERNEL_NUMERIC: out = rate::Method::numeric; return true;
    }
    return false;
}

bool policy_of(pafbl_policy p, rate::RatePolicy& out) {
    switch (p) {
        case PAFBL_POLICY_THEOREM1: out = rate::RatePolicy::theorem1; return true;
        case PAFBL_POLICY_THEOREM2_CLOSED_FORM: out = rate::RatePolicy::theorem2_closed_form; return true;
        case PAFBL_POLICY_NUMERIC_REFINED: out = rate::RatePolicy::numeric_refined; return true;
    }
    return false;
}

double or_nan(const std::optional<double>& x) { return x ? *x : kNaN; }

}  // namespace

extern "C" {

const char* pafbl_version(void) { return "0.1.0"; }

const char* pafbl_status_name(pafbl_status status) {
    switch (status) {
        case PAFBL_OK: return "ok";
        case PAFBL_ERR_DOMAIN: return "domain error";
        case PAFBL_ERR_CONFIG: return "config error";
        case PAFBL_PARTIAL: return "partial failure";
        case PAFBL_ERR_IO: return "i/o error";
        case PAFBL_ERR_NUMERIC: return "numeric error";
        case PAFBL_ERR_STATE: return "state error";
        case PAFBL_ERR_ARGUMENT: return "invalid argument";
        case PAFBL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

pafbl_status pafbl_context_create(pafbl_context** out) {
    if (out == nullptr) return PAFBL_ERR_ARGUMENT;
    *out = new (std::nothrow) pafbl_context;
    return *out ? PAFBL_OK : PAFBL_ERR_INTERNAL;
}

void pafbl_context_destroy(pafbl_context* ctx) { delete ctx; }

const char* pafbl_last_error(const pafbl_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

pafbl_status pafbl_fbl_error(pafbl_context* ctx, double g, double snr_db, int length, double rate, double* out) {
    return guarded(ctx, [&] {
        if (!out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        *out = fbl::fbl_error(g, LinkBudget::from_db(snr_db), {length, rate});
        return PAFBL_OK;
    });
}

pafbl_status pafbl_marcum_q1(pafbl_context* ctx, double s, double rho, double* out) {
    return guarded(ctx, [&] {
        if (!out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        *out = specfun::marcum_q1(s, rho);
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sigma_from_geometry(pafbl_context* ctx, double d_a, double v, double delta, double f_c,
                                       double* sigma) {
    return guarded(ctx, [&] {
        if (!sigma) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        *sigma = channel::resolve_sigma(channel::CorrelationSpec::from_geometry({d_a, v, delta, f_c}));
        return PAFBL_OK;
    });
}

pafbl_status pafbl_conditional_error(pafbl_context* ctx, double ghat, double sigma, double snr_db, int length,
                                     double rate, pafbl_kernel kernel, double* out) {
    return guarded(ctx, [&] {
        rate::Method m{};
        if (!out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        if (!kernel_of(kernel, m)) return fail(ctx, PAFBL_ERR_ARGUMENT, "unknown kernel");
        *out = rate::conditional_error({ghat, sigma, LinkBudget::from_db(snr_db), length}, rate, m);
        return PAFBL_OK;
    });
}

pafbl_status pafbl_rate_opt(pafbl_context* ctx, double ghat, double sigma, double snr_db, int length,
                            double* closed_form, double* refined) {
    return guarded(ctx, [&] {
        if (!closed_form || !refined) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        const auto r = rate::rate_opt_given_ghat({ghat, sigma, LinkBudget::from_db(snr_db), length});
        *closed_form = r.closed_form;
        *refined = r.refined;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_average_throughput(pafbl_context* ctx, double sigma, double snr_db, int length, pafbl_policy policy,
                                      double* throughput, double* error_prob) {
    return guarded(ctx, [&] {
        rate::RatePolicy p{};
        if (!throughput || !error_prob) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        if (!policy_of(policy, p)) return fail(ctx, PAFBL_ERR_ARGUMENT, "unknown policy");
        const auto a = rate::average_throughput(sigma, LinkBudget::from_db(snr_db), length, p);
        *throughput = a.throughput;
        *error_prob = a.error_prob;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_fixed_rate(pafbl_context* ctx, double sigma, double snr_db, int length, double rate,
                              pafbl_kernel kernel, double* throughput, double* error_prob) {
    return guarded(ctx, [&] {
        rate::Method m{};
        if (!throughput || !error_prob) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        if (!kernel_of(kernel, m)) return fail(ctx, PAFBL_ERR_ARGUMENT, "unknown kernel");
        const auto f = rate::fixed_rate_performance(sigma, LinkBudget::from_db(snr_db), length, rate, m);
        *throughput = f.throughput;
        *error_prob = f.error_prob;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_no_csit(pafbl_context* ctx, double snr_db, int length, double* rate, double* throughput,
                           double* error_prob) {
    return guarded(ctx, [&] {
        if (!rate || !throughput || !error_prob) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        const auto o = bench::no_csit_rate_opt(LinkBudget::from_db(snr_db), length);
        *rate = o.rate;
        *throughput = o.throughput;
        *error_prob = o.error_prob;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_genie(pafbl_context* ctx, double snr_db, int length, double* eps_hat, double* throughput) {
    return guarded(ctx, [&] {
        if (!eps_hat || !throughput) return fail(ctx, PAFBL_ERR_ARGUMENT, "null output pointer");
        const auto g = bench::genie_throughput(LinkBudget::from_db(snr_db), length);
        *eps_hat = g.eps_hat;
        *throughput = g.throughput;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_from_text(pafbl_context* ctx, const char* text, pafbl_sweep** out) {
    return guarded(ctx, [&] {
        if (!text || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        *out = new pafbl_sweep{sweep::parse_config(text), {}};
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_from_file(pafbl_context* ctx, const char* path, pafbl_sweep** out) {
    return guarded(ctx, [&] {
        if (!path || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        *out = new pafbl_sweep{sweep::load_config(path), {}};
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_from_preset(pafbl_context* ctx, const char* name, pafbl_sweep** out) {
    return guarded(ctx, [&] {
        if (!name || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        *out = new pafbl_sweep{sweep::preset(name), {}};
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_point(pafbl_context* ctx, double snr_db, double sigma, int length, double rate,
                               const char* regime, pafbl_sweep** out) {
    return guarded(ctx, [&] {
        if (!regime || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        const auto reg = sweep::parse_regime(regime);
        if (!reg) throw ConfigError("unknown regime '" + std::string(regime) + "'");
        sweep::SweepSpec spec;
        spec.command = sweep::Command::point;
        spec.fixed[sweep::Param::snr_db] = snr_db;
        spec.fixed[sweep::Param::sigma] = sigma;
        spec.fixed[sweep::Param::length] = length;
        if (!std::isnan(rate)) spec.fixed[sweep::Param::rate] = rate;
        spec.regimes = {*reg};
        spec.validate();
        *out = new pafbl_sweep{std::move(spec), {}};
        return PAFBL_OK;
    });
}

void pafbl_sweep_destroy(pafbl_sweep* sweep) { delete sweep; }

pafbl_status pafbl_sweep_set_seed(pafbl_context* ctx, pafbl_sweep* sweep, uint64_t seed) {
    return guarded(ctx, [&] {
        if (!sweep) return fail(ctx, PAFBL_ERR_ARGUMENT, "null sweep");
        if (!sweep->spec.mc) sweep->spec.mc = mc::McConfig{};
        sweep->spec.mc->master_seed = seed;
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_set_mc_samples(pafbl_context* ctx, pafbl_sweep* sweep, uint64_t samples) {
    return guarded(ctx, [&] {
        if (!sweep) return fail(ctx, PAFBL_ERR_ARGUMENT, "null sweep");
        if (samples == 0) throw ConfigError("mc samples must be positive");
        if (!sweep->spec.mc) sweep->spec.mc = mc::McConfig{};
        sweep->spec.mc->samples = samples;
        auto& regs = sweep->spec.regimes;
        if (std::find(regs.begin(), regs.end(), sweep::Regime::monte_carlo) == regs.end()) {
            regs.push_back(sweep::Regime::monte_carlo);
        }
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_set_threads(pafbl_context* ctx, pafbl_sweep* sweep, unsigned threads) {
    return guarded(ctx, [&] {
        if (!sweep) return fail(ctx, PAFBL_ERR_ARGUMENT, "null sweep");
        sweep->options.threads = threads;
        return PAFBL_OK;
    });
}

const char* pafbl_sweep_output_path(const pafbl_sweep* sweep) { return sweep ? sweep->spec.output_path.c_str() : ""; }

size_t pafbl_sweep_point_count(const pafbl_sweep* sweep) { return sweep ? sweep->spec.point_count() : 0; }

pafbl_status pafbl_preset_count(size_t* count) {
    if (!count) return PAFBL_ERR_ARGUMENT;
    *count = sweep::preset_names().size();
    return PAFBL_OK;
}

pafbl_status pafbl_preset_name(size_t index, const char** name) {
    if (!name) return PAFBL_ERR_ARGUMENT;
    const auto names = sweep::preset_names();
    if (index >= names.size()) return PAFBL_ERR_ARGUMENT;
    *name = names[index].data();  // backed by static storage, NUL-terminated literal
    return PAFBL_OK;
}

pafbl_status pafbl_preset_text(pafbl_context* ctx, const char* name, const char** text) {
    return guarded(ctx, [&] {
        if (!name || !text) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *text = sweep::preset_text(name).data();
        return PAFBL_OK;
    });
}

pafbl_status pafbl_sweep_run(pafbl_context* ctx, const pafbl_sweep* sweep, pafbl_result** out) {
    return guarded(ctx, [&] {
        if (!sweep || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        auto* result = new pafbl_result;
        try {
            result->spec = sweep->spec;
            result->rows = sweep::run_sweep(sweep->spec, sweep->options);
        } catch (...) {
            delete result;
            throw;
        }
        for (const auto& r : result->rows) {
            result->commands.emplace_back(sweep::to_string(r.command));
            result->regimes.emplace_back(sweep::to_string(r.regime));
        }
        *out = result;
        if (sweep::has_failures(result->rows)) {
            ctx->last_error = "some rows failed; see the error column";
            return PAFBL_PARTIAL;
        }
        return PAFBL_OK;
    });
}

void pafbl_result_destroy(pafbl_result* result) { delete result; }

size_t pafbl_result_row_count(const pafbl_result* result) { return result ? result->rows.size() : 0; }

size_t pafbl_result_failure_count(const pafbl_result* result) {
    if (!result) return 0;
    size_t n = 0;
    for (const auto& r : result->rows) n += r.error.empty() ? 0 : 1;
    return n;
}

pafbl_status pafbl_result_row(pafbl_context* ctx, const pafbl_result* result, size_t i, pafbl_row* out) {
    return guarded(ctx, [&] {
        if (!result || !out) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        if (i >= result->rows.size()) return fail(ctx, PAFBL_ERR_ARGUMENT, "row index out of range");
        const auto& r = result->rows[i];
        out->index = r.index;
        out->command = result->commands[i].c_str();
        out->regime = result->regimes[i].c_str();
        out->snr_db = r.snr_db;
        out->sigma = or_nan(r.sigma);
        out->mismatch_d = or_nan(r.mismatch_d);
        out->d_a = or_nan(r.d_a);
        out->v = or_nan(r.v);
        out->delta = or_nan(r.delta);
        out->f_c = or_nan(r.f_c);
        out->length = r.length;
        out->rate = or_nan(r.rate);
        out->throughput = or_nan(r.throughput);
        out->error_prob = or_nan(r.error_prob);
        out->rate_opt = or_nan(r.rate_opt);
        out->method = r.method.c_str();
        out->mc_std_error = or_nan(r.mc_std_error);
        out->mc_error_std_error = or_nan(r.mc_error_std_error);
        out->error = r.error.c_str();
        return PAFBL_OK;
    });
}

pafbl_status pafbl_result_write_csv(pafbl_context* ctx, const pafbl_result* result, const char* path) {
    return guarded(ctx, [&] {
        if (!result || !path) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        if (std::string(path) == "-") {
            sweep::write_csv(result->rows, std::cout);
            std::cout.flush();
        } else {
            sweep::write_csv_file(result->rows, path);
        }
        return PAFBL_OK;
    });
}

pafbl_status pafbl_result_write_gnuplot(pafbl_context* ctx, const pafbl_result* result, const char* path) {
    return guarded(ctx, [&] {
        if (!result || !path) return fail(ctx, PAFBL_ERR_ARGUMENT, "null argument");
        if (std::string(path) == "-") {
            sweep::write_gnuplot(result->rows, result->spec, std::cout);
            std::cout.flush();
        } else {
            sweep::write_gnuplot_file(result->rows, result->spec, path);
        }
        return PAFBL_OK;
    });
}

}  // extern "C"
