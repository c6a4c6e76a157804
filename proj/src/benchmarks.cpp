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

#include "pafbl/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pafbl/error.hpp"
#include "pafbl/optimize.hpp"
#include "pafbl/quadrature.hpp"
#include "pafbl/specfun.hpp"

namespace pafbl::bench {

namespace {

void check_length(int block_length) {
    if (block_length < 1) throw DomainError("block length must be >= 1");
}

// e^x E1(x) without overflow for large x
double scaled_e1(double x) {
    if (x <= 50.0) return std::exp(x) * specfun::exp_integral_e1(x);
    double term = 1.0 / x;
    double sum = term;
    for (int k = 1; k < 60; ++k) {
        const double next = -term * k / x;
        if (std::fabs(next) > std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

std::string_view to_string(RatePath p) { return p == RatePath::lambert_w ? "lambert-w" : "numeric"; }

std::string_view to_string(EpsPath p) { return p == EpsPath::closed_form ? "closed-form" : "numeric-fallback"; }

double no_csit_error(const LinkBudget& budget, int block_length, double rate) {
    check_length(block_length);
    if (!(rate >= 0.0)) throw DomainError("no_csit_error: rate must be non-negative");
    if (rate == 0.0) return 0.0;
    const CodeSpec code{block_length, rate};
    const fbl::SemiLinearApprox lin = fbl::make_semilinear(code, budget);
    std::vector<double> breaks;
    for (double k : {-8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0}) breaks.push_back(lin.alpha + k / lin.mu);
    for (double x : {1.0, 5.0, 20.0, 40.0}) breaks.push_back(x);
    // beyond x = 40 the weight is below 1e-17; the transformed tail covers it
    std::erase_if(breaks, [](double b) { return b > 40.0; });
    auto integrand = [&](double x) { return std::exp(-x) * fbl::fbl_error(x, budget, code); };
    const auto r = quad::integrate_to_infinity(integrand, 0.0, breaks, {1e-12, 1e-11, 4000});
    return std::clamp(r.value, 0.0, 1.0);
}

NoCsitThroughput no_csit_throughput(const LinkBudget& budget, int block_length, double rate) {
    check_length(block_length);
    if (!(rate >= 0.0)) throw DomainError("no_csit_throughput: rate must be non-negative");
    NoCsitThroughput out;
    if (rate == 0.0) return out;
    out.exact = rate * (1.0 - no_csit_error(budget, block_length, rate));
    const double p = budget.power();
    const double l = block_length;
    const double log_approx = 0.5 * std::log(l * p * p / (2.0 * std::numbers::pi)) - rate - std::expm1(rate) / p +
                              std::log(rate) + std::sqrt(std::exp(2.0 * rate) * std::numbers::pi / (2.0 * l * p * p));
    out.approx = std::exp(log_approx);
    out.relative_gap = out.exact > 0.0 ? std::fabs(out.approx - out.exact) / out.exact : 0.0;
    return out;
}

NoCsitRateOpt no_csit_rate_opt(const LinkBudget& budget, int block_length) {
    check_length(block_length);
    const double p = budget.power();
    NoCsitRateOpt out;
    out.lambert_argument = p / (1.0 - std::sqrt(block_length / (2.0 * std::numbers::pi)));
    // For L > 2 pi the argument is negative: either below the branch point, or
    // W0 lands in [-1, 0) and names no usable rate.
    const double w = out.lambert_argument >= -1.0 / std::numbers::e ? specfun::lambert_w0(out.lambert_argument) : -1.0;
    if (w > 0.0) {
        out.rate = w;
        out.path = RatePath::lambert_w;
    } else {
        const auto best = opt::golden_section_maximize(
            [&](double r) { return no_csit_throughput(budget, block_length, r).exact; }, 0.01,
            std::log1p(10.0 * p), 1e-9);
        out.rate = best.x;
        out.path = RatePath::numeric;
    }
    out.error_prob = no_csit_error(budget, block_length, out.rate);
    out.throughput = out.rate * (1.0 - out.error_prob);
    return out;
}

InstantRate genie_rate_instant(double g, const LinkBudget& budget, int block_length, double eps_hat) {
    check_length(block_length);
    if (!(g > 0.0)) throw DomainError("genie_rate_instant: gain must be positive");
    const double x = g * budget.power();
    const double dispersion = std::sqrt(x * (2.0 + x)) / (1.0 + x);
    const double r = std::log1p(x) - specfun::gaussian_q_inv(eps_hat) * dispersion / std::sqrt(block_length);
    if (r < 0.0) return {0.0, true};
    return {r, false};
}

double genie_r_infinity(const LinkBudget& budget) { return scaled_e1(1.0 / budget.power()); }

double genie_zeta(const LinkBudget& budget) {
    const double p = budget.power();
    // x = t^2 removes the square-root onset at the origin
    auto integrand = [p](double t) {
        const double x = p * t * t;
        return 2.0 * t * std::exp(-t * t) * std::sqrt(x * (2.0 + x)) / (1.0 + x);
    };
    const double knee = 1.0 / std::sqrt(p);
    std::vector<double> breaks{0.1 * knee, knee, 10.0 * knee, 1.0, 3.0, 6.0};
    std::erase_if(breaks, [](double b) { return b > 6.0; });
    return quad::integrate_to_infinity(integrand, 0.0, breaks, {1e-13, 1e-12, 4000}).value;
}

double genie_objective(double r_infinity, double zeta, int block_length, double eps_hat) {
    return (r_infinity - specfun::gaussian_q_inv(eps_hat) * zeta / std::sqrt(block_length)) * (1.0 - eps_hat);
}

namespace {

GenieEps eps_opt_from(double r_inf, double zeta, int block_length) {
    check_length(block_length);
    GenieEps out;
    const double sqrt_l = std::sqrt(static_cast<double>(block_length));
    const double ratio = std::sqrt(2.0 * std::numbers::pi) * zeta / (sqrt_l * r_inf);
    if (ratio < 1.0) out.closed_form = specfun::gaussian_q(std::sqrt(-2.0 * std::log(ratio)));

    // maximize over x = Q^-1(eps); the objective is log-concave in x
    const double x_max = sqrt_l * r_inf / zeta;
    const auto best = opt::golden_section_maximize(
        [&](double x) { return (r_inf - x * zeta / sqrt_l) * (1.0 - specfun::gaussian_q(x)); }, 0.0, x_max, 1e-11);
    out.numeric = specfun::gaussian_q(best.x);
    if (out.closed_form && *out.closed_form > 0.0) {
        out.eps_hat = *out.closed_form;
        out.path = EpsPath::closed_form;
    } else {
        out.eps_hat = out.numeric;
        out.path = EpsPath::numeric_fallback;
    }
    return out;
}

GenieResult assemble(double r_inf, double zeta, int block_length) {
    const GenieEps e = eps_opt_from(r_inf, zeta, block_length);
    GenieResult out;
    out.r_infinity = r_inf;
    out.zeta = zeta;
    out.eps_hat = e.eps_hat;
    out.path = e.path;
    out.throughput = genie_objective(r_inf, zeta, block_length, e.eps_hat);
    out.numeric_eps_hat = e.numeric;
    out.numeric_throughput = genie_objective(r_inf, zeta, block_length, e.numeric);
    return out;
}

}  // namespace

GenieEps genie_eps_opt(const LinkBudget& budget, int block_length) {
    return eps_opt_from(genie_r_infinity(budget), genie_zeta(budget), block_length);
}

GenieResult genie_throughput(const LinkBudget& budget, int block_length) {
    return assemble(genie_r_infinity(budget), genie_zeta(budget), block_length);
}

GenieCache::Entry GenieCache::get(const LinkBudget& budget) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(budget.power());
    if (it == entries_.end()) {
        it = entries_.emplace(budget.power(), Entry{genie_r_infinity(budget), genie_zeta(budget)}).first;
    }
    return it->second;
}

GenieResult GenieCache::throughput(const LinkBudget& budget, int block_length) {
    const Entry e = get(budget);
    return assemble(e.r_infinity, e.zeta, block_length);
}

}  // namespace pafbl::bench
