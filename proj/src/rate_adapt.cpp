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

#include "pafbl/rate_adapt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pafbl/error.hpp"
#include "pafbl/optimize.hpp"
#include "pafbl/quadrature.hpp"
#include "pafbl/specfun.hpp"

namespace pafbl::rate {

namespace {

constexpr double kSeriesTailTol = 1e-14;
constexpr double kSeriesWarnTol = 1e-8;
constexpr double kRateSearchXTol = 1e-7;

// Below this sigma the conditional spread is far narrower than any FBL
// transition width, and the Poisson series would need ~1/sigma terms.
bool point_mass(double sigma) { return sigma < kSigmaPointMass; }

// P(g <= x | ghat), with sigma = 0 read as the strict step 1{ghat < x}.
double cdf_any(const channel::ConditionalGainDist& dist, double x) {
    if (x <= 0.0) return 0.0;
    if (point_mass(dist.sigma)) return dist.ghat < x ? 1.0 : 0.0;
    if (dist.sigma == 1.0) return -std::expm1(-x);
    return channel::conditional_cdf(dist, x);
}

double pdf_any(const channel::ConditionalGainDist& dist, double x) {
    if (dist.sigma == 1.0) return std::exp(-x);
    return channel::conditional_pdf(dist, x);
}

double log_gamma_density(double s, double x) {
    // log(x^s e^-x / s!)
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    return s * std::log(x) - x - std::lgamma(s + 1.0);
}

struct WindowMoment {
    double value = 0.0;
    int terms = 0;
    bool converged = true;
};

// int_a^b x f(x) dx = sigma^2 sum_i Pois(i; lambda) (i + 1) [P(i+2, b/s2) - P(i+2, a/s2)]
WindowMoment window_moment_fixed(double lambda, double s2, double lo, double hi, int n_terms, double mu) {
    WindowMoment out;
    double partial_mean = 0.0;
    for (int i = 0; i <= n_terms; ++i) {
        const double w = std::exp(specfun::poisson_log_pmf(i, lambda));
        partial_mean += (i + 1.0) * w;
        if (w == 0.0) continue;
        const double dp = specfun::gamma_p(i + 2.0, hi) - (lo > 0.0 ? specfun::gamma_p(i + 2.0, lo) : 0.0);
        out.value += w * (i + 1.0) * dp;
    }
    out.value *= s2;
    out.terms = n_terms + 1;
    const double omitted = s2 * std::max(0.0, (lambda + 1.0) - partial_mean);
    out.converged = lambda / (n_terms + 1.0) < 1.0 && mu * omitted <= kSeriesWarnTol;
    return out;
}

WindowMoment window_moment_adaptive(double lambda, double s2, double lo, double hi, double mu) {
    WindowMoment out;
    if (lambda == 0.0) {
        out.value = s2 * (specfun::gamma_p(2.0, hi) - (lo > 0.0 ? specfun::gamma_p(2.0, lo) : 0.0));
        out.terms = 1;
        return out;
    }
    const double k0 = std::floor(lambda);
    const int cap = std::max(10000, static_cast<int>(100.0 * std::sqrt(lambda)) + 100);
    const double log_w0 = specfun::poisson_log_pmf(k0, lambda);

    struct State {
        double s, log_w, p_lo, p_hi, logd_lo, logd_hi;
    };
    State start{k0 + 2.0,
                log_w0,
                lo > 0.0 ? specfun::gamma_p(k0 + 2.0, lo) : 0.0,
                specfun::gamma_p(k0 + 2.0, hi),
                log_gamma_density(k0 + 2.0, lo),
                log_gamma_density(k0 + 2.0, hi)};

    double sum = std::exp(start.log_w) * (k0 + 1.0) * std::max(0.0, start.p_hi - start.p_lo);
    int terms = 1;

    // upward: P(s+1, x) = P(s, x) - x^s e^-x / s!
    State st = start;
    for (int step = 1;; ++step) {
        if (step > cap) throw NumericError("epsilon_theorem1: series did not converge");
        st.p_lo = std::max(0.0, st.p_lo - std::exp(st.logd_lo));
        st.p_hi = std::max(0.0, st.p_hi - std::exp(st.logd_hi));
        st.s += 1.0;
        if (lo > 0.0) st.logd_lo += std::log(lo) - std::log(st.s);
        st.logd_hi += std::log(hi) - std::log(st.s);
        const double i = st.s - 2.0;
        st.log_w += std::log(lambda) - std::log(i);
        const double w = std::exp(st.log_w);
        sum += w * (i + 1.0) * std::max(0.0, st.p_hi - st.p_lo);
        ++terms;
        const double r = lambda / (i + 1.0);
        if (r < 1.0) {
            const double bound = s2 * st.p_hi * w * (i + 2.0) * r / ((1.0 - r) * (1.0 - r));
            if (mu * bound < kSeriesTailTol) break;
        }
    }

    // downward: P(s-1, x) = P(s, x) + x^(s-1) e^-x / (s-1)!
    st = start;
    while (st.s > 2.0) {
        if (lo > 0.0) st.logd_lo += std::log(st.s) - std::log(lo);
        st.logd_hi += std::log(st.s) - std::log(hi);
        st.s -= 1.0;
        st.p_lo = lo > 0.0 ? std::min(1.0, st.p_lo + std::exp(st.logd_lo)) : 0.0;
        st.p_hi = std::min(1.0, st.p_hi + std::exp(st.logd_hi));
        const double i = st.s - 2.0;
        st.log_w += std::log(i + 1.0) - std::log(lambda);
        const double w = std::exp(st.log_w);
        sum += w * (i + 1.0) * std::max(0.0, st.p_hi - st.p_lo);
        ++terms;
        const double r = i / lambda;
        const double bound = s2 * w * i * r / (1.0 - r);
        if (mu * bound < kSeriesTailTol) break;
    }
    out.value = s2 * sum;
    out.terms = terms;
    return out;
}

}  // namespace

void PaOperatingPoint::validate() const {
    if (!(ghat >= 0.0) || !std::isfinite(ghat)) throw DomainError("PaOperatingPoint: ghat must be finite and >= 0");
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("PaOperatingPoint: sigma must lie in [0, 1]");
    if (block_length < 1) throw DomainError("PaOperatingPoint: block length must be >= 1");
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::theorem1: return "theorem1";
        case Method::theorem2: return "theorem2";
        case Method::numeric: return "numeric";
    }
    return "unknown";
}

std::string_view to_string(RatePolicy p) {
    switch (p) {
        case RatePolicy::theorem1: return "theorem1";
        case RatePolicy::theorem2_closed_form: return "theorem2-closed-form";
        case RatePolicy::numeric_refined: return "numeric-refined";
    }
    return "unknown";
}

Theorem1Value epsilon_theorem1(const PaOperatingPoint& pt, double rate, int series_terms) {
    pt.validate();
    if (series_terms < kAdaptiveSeriesTerms) throw DomainError("epsilon_theorem1: series_terms must be >= 0");
    if (!(rate >= 0.0)) throw DomainError("epsilon_theorem1: rate must be non-negative");
    if (rate == 0.0) return {0.0, 0, true};
    const fbl::SemiLinearApprox lin = fbl::make_semilinear(pt.code(rate), pt.budget);
    const channel::ConditionalGainDist dist = pt.dist();
    if (point_mass(dist.sigma)) return {fbl::semilinear_q(dist.ghat, lin), 0, true};

    // lower window edge clamped to the gain support
    const double a = std::max(0.0, lin.lower());
    const double b = lin.upper();
    const double fa = cdf_any(dist, a);
    const double fb = cdf_any(dist, b);
    const double s2 = dist.sigma * dist.sigma;
    const double lambda = dist.noncentral_gain() / s2;

    const WindowMoment moment = series_terms == kAdaptiveSeriesTerms
                                    ? window_moment_adaptive(lambda, s2, a / s2, b / s2, lin.mu)
                                    : window_moment_fixed(lambda, s2, a / s2, b / s2, series_terms, lin.mu);
    const double eps = fa + (0.5 + lin.mu * lin.alpha) * (fb - fa) - lin.mu * moment.value;
    return {std::clamp(eps, 0.0, 1.0), moment.terms, moment.converged};
}

double epsilon_theorem2(const PaOperatingPoint& pt, double rate) {
    pt.validate();
    if (!(rate >= 0.0)) throw DomainError("epsilon_theorem2: rate must be non-negative");
    if (rate == 0.0) return 0.0;
    const double alpha = std::expm1(rate) / pt.budget.power();
    return cdf_any(pt.dist(), alpha);
}

double conditional_error_numeric(const PaOperatingPoint& pt, double rate) {
    pt.validate();
    if (!(rate >= 0.0)) throw DomainError("conditional_error_numeric: rate must be non-negative");
    if (rate == 0.0) return 0.0;
    const CodeSpec code = pt.code(rate);
    const channel::ConditionalGainDist dist = pt.dist();
    if (point_mass(dist.sigma)) return fbl::fbl_error(dist.ghat, pt.budget, code);

    const fbl::SemiLinearApprox lin = fbl::make_semilinear(code, pt.budget);
    const double s2 = dist.sigma * dist.sigma;
    const double sd = std::sqrt(s2 * s2 + 2.0 * s2 * dist.noncentral_gain());
    const double mean = dist.mean();
    std::vector<double> breaks;
    for (double k : {-8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0}) breaks.push_back(lin.alpha + k / lin.mu);
    for (double k : {-8.0, -4.0, 0.0, 4.0, 8.0, 16.0, 32.0, 64.0}) breaks.push_back(mean + k * sd);
    // A break far out in the tail would leave one huge finite piece whose
    // Kronrod nodes all miss the mass near its left end.
    std::erase_if(breaks, [&](double b) { return b > mean + 64.0 * sd; });

    auto integrand = [&](double x) {
        const double f = pdf_any(dist, x);
        return f == 0.0 ? 0.0 : f * fbl::fbl_error(x, pt.budget, code);
    };
    const quad::QuadResult r = quad::integrate_to_infinity(integrand, 0.0, breaks, {1e-10, 1e-10, 4000});
    return std::clamp(r.value, 0.0, 1.0);
}

BocusRateParams bocus_rate_params(double sigma, double ghat, const LinkBudget& budget) {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("bocus_rate_params: sigma must lie in (0, 1]");
    if (!(ghat >= 0.0)) throw DomainError("bocus_rate_params: ghat must be non-negative");
    const double s2 = sigma * sigma;
    const double s = std::sqrt(2.0 * (1.0 - s2) * ghat / s2);
    BocusRateParams out;
    out.nu = specfun::bocus_poly_j(s) / 2.0;
    out.log_omega = specfun::bocus_poly_i(s) + out.nu * std::log(2.0 / (budget.power() * s2));
    out.omega = std::exp(out.log_omega);
    return out;
}

ConditionalResult throughput_given_ghat(const PaOperatingPoint& pt, double rate) {
    const double eps = epsilon_theorem2(pt, rate);
    return {rate, eps, rate * (1.0 - eps), Method::theorem2, true};
}

double rate_closed_form(const PaOperatingPoint& pt) {
    pt.validate();
    if (point_mass(pt.sigma)) return std::log1p(pt.ghat * pt.budget.power());
    const BocusRateParams p = bocus_rate_params(pt.sigma, pt.ghat, pt.budget);
    if (!(p.nu > 0.0)) throw NumericError("rate_closed_form: non-positive exponent nu");
    return specfun::lambert_w0_exp(-p.log_omega) / p.nu;
}

namespace {

double rate_search_upper(const PaOperatingPoint& pt) { return std::log1p(pt.ghat * pt.budget.power()) + 2.0; }

}  // namespace

RateOpt rate_opt_given_ghat(const PaOperatingPoint& pt) {
    pt.validate();
    RateOpt out;
    out.search_upper = rate_search_upper(pt);
    out.closed_form = rate_closed_form(pt);
    out.closed_form_throughput = throughput_given_ghat(pt, out.closed_form).throughput;
    const auto best = opt::golden_section_maximize(
        [&](double r) { return throughput_given_ghat(pt, r).throughput; }, 0.0, out.search_upper, kRateSearchXTol);
    out.refined = best.x;
    out.refined_throughput = best.value;
    return out;
}

double conditional_error(const PaOperatingPoint& pt, double rate, Method kernel) {
    switch (kernel) {
        case Method::theorem1: return epsilon_theorem1(pt, rate).error_prob;
        case Method::theorem2: return epsilon_theorem2(pt, rate);
        case Method::numeric: return conditional_error_numeric(pt, rate);
    }
    throw DomainError("conditional_error: unknown kernel");
}

ConditionalResult optimize_rate(const PaOperatingPoint& pt, Method kernel) {
    pt.validate();
    bool converged = true;
    auto throughput = [&](double r) {
        if (kernel == Method::theorem1) {
            const Theorem1Value v = epsilon_theorem1(pt, r);
            converged = converged && v.converged;
            return r * (1.0 - v.error_prob);
        }
        return r * (1.0 - conditional_error(pt, r, kernel));
    };
    const auto best = opt::golden_section_maximize(throughput, 0.0, rate_search_upper(pt), kRateSearchXTol);
    const double eps = best.x > 0.0 ? 1.0 - best.value / best.x : 0.0;
    return {best.x, std::clamp(eps, 0.0, 1.0), best.value, kernel, converged};
}

ConditionalResult policy_decision(const PaOperatingPoint& pt, RatePolicy policy) {
    switch (policy) {
        case RatePolicy::theorem1: return optimize_rate(pt, Method::theorem1);
        case RatePolicy::numeric_refined: return optimize_rate(pt, Method::numeric);
        case RatePolicy::theorem2_closed_form: {
            const double r = rate_closed_form(pt);
            return throughput_given_ghat(pt, r);
        }
    }
    throw DomainError("policy_decision: unknown policy");
}

AverageResult average_throughput(double sigma, const LinkBudget& budget, int block_length, RatePolicy policy,
                                 int nodes) {
    const quad::LaguerreRule& rule = quad::gauss_laguerre(nodes);
    AverageResult out;
    for (int i = 0; i < nodes; ++i) {
        const double w = rule.weights[i];
        if (w == 0.0) continue;
        const PaOperatingPoint pt{rule.nodes[i], sigma, budget, block_length};
        const ConditionalResult c = policy_decision(pt, policy);
        out.throughput += w * c.throughput;
        out.error_prob += w * c.error_prob;
        out.mean_rate += w * c.rate;
        out.converged = out.converged && c.converged;
    }
    out.error_prob = std::clamp(out.error_prob, 0.0, 1.0);
    return out;
}

double average_error_adaptive(double sigma, const LinkBudget& budget, int block_length, Method kernel, int nodes) {
    RatePolicy policy = RatePolicy::numeric_refined;
    if (kernel == Method::theorem1) policy = RatePolicy::theorem1;
    if (kernel == Method::theorem2) policy = RatePolicy::theorem2_closed_form;
    return average_throughput(sigma, budget, block_length, policy, nodes).error_prob;
}

FixedRateResult fixed_rate_performance(double sigma, const LinkBudget& budget, int block_length, double rate,
                                       Method kernel, int nodes) {
    if (!(rate >= 0.0)) throw DomainError("fixed_rate_performance: rate must be non-negative");
    if (rate == 0.0) return {0.0, 0.0};
    const quad::LaguerreRule& rule = quad::gauss_laguerre(nodes);
    double eps = 0.0;
    for (int i = 0; i < nodes; ++i) {
        if (rule.weights[i] == 0.0) continue;
        const PaOperatingPoint pt{rule.nodes[i], sigma, budget, block_length};
        eps += rule.weights[i] * conditional_error(pt, rate, kernel);
    }
    eps = std::clamp(eps, 0.0, 1.0);
    return {rate * (1.0 - eps), eps};
}

}  // namespace pafbl::rate
