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

#ifndef PAFBL_RATE_ADAPT_HPP
#define PAFBL_RATE_ADAPT_HPP

#include <string_view>

#include "pafbl/channel.hpp"
#include "pafbl/fbl.hpp"

// Conditional error probability and rate allocation when the transmitter knows
// the predictor-antenna gain ghat but the receive antenna sees g | ghat.

namespace pafbl::rate {

/// Kernels treat sigma below this as the perfect-CSIT point mass.
inline constexpr double kSigmaPointMass = 1e-6;

struct PaOperatingPoint {
    double ghat = 0.0;
    double sigma = 0.5;
    LinkBudget budget;
    int block_length = 1;

    /// sigma in [0, 1]; 0 and 1 are served by explicit degenerate branches.
    void validate() const;
    channel::ConditionalGainDist dist() const { return {ghat, sigma}; }
    CodeSpec code(double rate) const { return {block_length, rate}; }
};

enum class Method { theorem1, theorem2, numeric };
std::string_view to_string(Method m);

struct ConditionalResult {
    double rate = 0.0;
    double error_prob = 0.0;
    double throughput = 0.0;
    Method method = Method::theorem2;
    bool converged = true;
};

/// Passing this as series_terms sizes the I0 series from the Poisson tail bound.
inline constexpr int kAdaptiveSeriesTerms = -1;

struct Theorem1Value {
    double error_prob = 0.0;
    int terms_used = 0;
    bool converged = true;  // false: omitted series mass above 1e-8
};

/// Semi-linear closed form for E_{g|ghat}[eps] with the I0 series summed in
/// Poisson-weight form. series_terms >= 0 keeps exactly terms i = 0..N.
Theorem1Value epsilon_theorem1(const PaOperatingPoint& pt, double rate, int series_terms = kAdaptiveSeriesTerms);

/// F_{g|ghat}((e^R - 1) / P).
double epsilon_theorem2(const PaOperatingPoint& pt, double rate);

/// Adaptive quadrature of the exact conditional error; reference for both theorems.
double conditional_error_numeric(const PaOperatingPoint& pt, double rate);

struct BocusRateParams {
    double omega = 0.0;
    double nu = 0.0;
    double log_omega = 0.0;  // omega underflows for large Marcum arguments
};

BocusRateParams bocus_rate_params(double sigma, double ghat, const LinkBudget& budget);

/// R * Q1(...) with the Theorem 2 error.
ConditionalResult throughput_given_ghat(const PaOperatingPoint& pt, double rate);

struct RateOpt {
    double closed_form = 0.0;             // W0(1/omega) / nu
    double refined = 0.0;                 // golden-section argmax of throughput_given_ghat
    double closed_form_throughput = 0.0;
    double refined_throughput = 0.0;
    double search_upper = 0.0;            // log(1 + ghat P) + 2
};

double rate_closed_form(const PaOperatingPoint& pt);
RateOpt rate_opt_given_ghat(const PaOperatingPoint& pt);

/// Rate maximizing R (1 - eps(R)) for the chosen error kernel.
ConditionalResult optimize_rate(const PaOperatingPoint& pt, Method kernel);

/// Conditional error for any kernel, including degenerate sigma.
double conditional_error(const PaOperatingPoint& pt, double rate, Method kernel);

enum class RatePolicy { theorem1, theorem2_closed_form, numeric_refined };
std::string_view to_string(RatePolicy p);

/// Rate the policy assigns at a given ghat, and the error its kernel predicts.
ConditionalResult policy_decision(const PaOperatingPoint& pt, RatePolicy policy);

struct AverageResult {
    double throughput = 0.0;
    double error_prob = 0.0;
    double mean_rate = 0.0;
    bool converged = true;
};

inline constexpr int kDefaultLaguerreNodes = 64;

/// E over ghat ~ Exp(1) of the policy's conditional throughput (Gauss-Laguerre).
AverageResult average_throughput(double sigma, const LinkBudget& budget, int block_length, RatePolicy policy,
                                 int nodes = kDefaultLaguerreNodes);

/// Average error at the adaptive rate; kernel numeric (oracle grade) or theorem1 (fast path).
double average_error_adaptive(double sigma, const LinkBudget& budget, int block_length,
                              Method kernel = Method::numeric, int nodes = kDefaultLaguerreNodes);

struct FixedRateResult {
    double throughput = 0.0;
    double error_prob = 0.0;
};

FixedRateResult fixed_rate_performance(double sigma, const LinkBudget& budget, int block_length, double rate,
                                       Method kernel = Method::theorem2, int nodes = kDefaultLaguerreNodes);

}  // namespace pafbl::rate

#endif
