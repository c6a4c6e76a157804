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

#include "pafbl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pafbl/error.hpp"

namespace pafbl::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

int iteration_cap(const Accuracy& acc, double scale) {
    // series lengths grow like sqrt(scale) for large shape parameters
    const double extra = 100.0 * std::sqrt(std::max(scale, 0.0)) + 100.0;
    return std::max(acc.max_terms, static_cast<int>(std::min(extra, 1e8)));
}

// J0 by Miller's backward recurrence normalized with 1 = J0 + 2 sum J_2k.
double j0_miller(double x) {
    const int n_start = 2 * static_cast<int>((x + 30.0 + 8.0 * std::cbrt(x)) / 2.0) + 2;
    double j_next = 0.0;
    double j = 1e-30;
    double even_sum = 0.0;
    double j0 = 0.0;
    for (int k = n_start; k >= 1; --k) {
        const double j_prev = (2.0 * k / x) * j - j_next;
        j_next = j;
        j = j_prev;
        // j now holds J_{k-1}
        if ((k - 1) % 2 == 0 && k - 1 > 0) even_sum += j;
        if (std::fabs(j) > 1e250) {
            j *= 1e-250;
            j_next *= 1e-250;
            even_sum *= 1e-250;
        }
    }
    j0 = j;
    return j0 / (j0 + 2.0 * even_sum);
}

double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < kEps * 0.1 * sum) break;
    }
    return sum;
}

// exp(-x) I0(x) ~ (2 pi x)^-1/2 sum_k ((2k-1)!!)^2 / (k! (8x)^k)
double i0_scaled_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * x * k);
        if (next > term) break;
        term = next;
        sum += term;
        if (term < kEps * 0.1 * sum) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

constexpr double kI0AsymptoticFrom = 30.0;

// log of x^s e^-x / Gamma(s)
double gamma_log_prefactor(double s, double x) {
    return s * std::log(x) - x - std::lgamma(s);
}

double gamma_p_series(double s, double x, int cap) {
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int n = 0; n < cap; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            return sum * std::exp(gamma_log_prefactor(s, x));
        }
    }
    throw NumericError("gamma_p: series did not converge");
}

double gamma_q_continued_fraction(double s, double x, int cap) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= cap; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            return std::exp(gamma_log_prefactor(s, x)) * h;
        }
    }
    throw NumericError("gamma_q: continued fraction did not converge");
}

void check_gamma_args(double s, double x) {
    require_finite(s, "incomplete gamma");
    require_finite(x, "incomplete gamma");
    if (s <= 0.0) throw DomainError("incomplete gamma: shape must be positive");
    if (x < 0.0) throw DomainError("incomplete gamma: x must be non-negative");
}

const double kBocusI[] = {-0.840, 0.327, -0.740, 0.083, -0.004};
const double kBocusJ[] = {2.174, -0.592, 0.593, -0.092, 0.005};

double poly4(const double (&c)[5], double s) {
    return c[0] + s * (c[1] + s * (c[2] + s * (c[3] + s * c[4])));
}

// Acklam's rational approximation of the standard normal quantile.
double normal_quantile_guess(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

void Accuracy::validate() const {
    if (max_terms < 1) throw DomainError("Accuracy: max_terms must be >= 1");
    if (abs_tol < 0.0 || rel_tol < 0.0) throw DomainError("Accuracy: tolerances must be non-negative");
    if (abs_tol == 0.0 && rel_tol == 0.0) throw DomainError("Accuracy: abs_tol and rel_tol both zero");
}

double bessel_j0(double x) {
    require_finite(x, "bessel_j0");
    x = std::fabs(x);
    if (x < 1e-8) return 1.0 - 0.25 * x * x;
    if (x < 8.0) {
        const double q = -0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int m = 1; m < 100; ++m) {
            term *= q / (static_cast<double>(m) * m);
            sum += term;
            if (std::fabs(term) < 1e-18) break;
        }
        return sum;
    }
    return j0_miller(x);
}

double bessel_i0_scaled(double x) {
    require_finite(x, "bessel_i0_scaled");
    if (x < 0.0) throw DomainError("bessel_i0_scaled: negative argument");
    if (x < kI0AsymptoticFrom) return i0_series(x) * std::exp(-x);
    return i0_scaled_asymptotic(x);
}

double bessel_i0(double x) {
    require_finite(x, "bessel_i0");
    if (x < 0.0) throw DomainError("bessel_i0: negative argument");
    if (x < kI0AsymptoticFrom) return i0_series(x);
    if (x > 713.0) throw std::overflow_error("bessel_i0: result overflows, use bessel_i0_scaled");
    return i0_scaled_asymptotic(x) * std::exp(x);
}

double gamma_p(double s, double x, const Accuracy& acc) {
    check_gamma_args(s, x);
    if (x == 0.0) return 0.0;
    const int cap = iteration_cap(acc, s);
    if (x < s + 1.0) return std::min(1.0, gamma_p_series(s, x, cap));
    return std::clamp(1.0 - gamma_q_continued_fraction(s, x, cap), 0.0, 1.0);
}

double gamma_q(double s, double x, const Accuracy& acc) {
    check_gamma_args(s, x);
    if (x == 0.0) return 1.0;
    const int cap = iteration_cap(acc, s);
    if (x < s + 1.0) return std::clamp(1.0 - gamma_p_series(s, x, cap), 0.0, 1.0);
    return std::min(1.0, gamma_q_continued_fraction(s, x, cap));
}

double gamma_upper(double s, double x, const Accuracy& acc) {
    check_gamma_args(s, x);
    if (s == std::floor(s) && s <= 170.0) {
        const double ex = std::exp(-x);
        double g = ex;  // Gamma(1, x)
        double xpow = 1.0;
        for (int n = 1; n < static_cast<int>(s); ++n) {
            xpow *= x;
            g = n * g + xpow * ex;
        }
        return g;
    }
    if (x == 0.0) return std::tgamma(s);
    return std::exp(std::lgamma(s)) * gamma_q(s, x, acc);
}

double poisson_log_pmf(double k, double lambda) {
    if (lambda == 0.0) return k == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return k * std::log(lambda) - lambda - std::lgamma(k + 1.0);
}

double marcum_q1(double s, double rho, const Accuracy& acc) {
    require_finite(s, "marcum_q1");
    require_finite(rho, "marcum_q1");
    if (s < 0.0 || rho < 0.0) throw DomainError("marcum_q1: arguments must be non-negative");
    if (rho == 0.0) return 1.0;
    const double y = 0.5 * rho * rho;
    if (s == 0.0) return std::exp(-y);
    const double lambda = 0.5 * s * s;

    // Q1 = sum_k Pois(k; lambda) * P[Pois(y) <= k]
    const double tol = std::max(acc.abs_tol * 1e-2, 1e-16);
    const int cap = iteration_cap(acc, lambda);
    const double k0 = std::floor(lambda);
    const double w0 = std::exp(poisson_log_pmf(k0, lambda));
    const double c0 = gamma_q(k0 + 1.0, y, acc);
    const double p0 = std::exp(poisson_log_pmf(k0, y));
    double sum = w0 * c0;

    double w = w0, c = c0, p = p0;
    for (int step = 1;; ++step) {
        if (step > cap) throw NumericError("marcum_q1: upward series did not converge");
        const double k = k0 + step;
        w *= lambda / k;
        p *= y / k;
        c = std::min(1.0, c + p);
        sum += w * c;
        const double r = lambda / (k + 1.0);
        if (r < 1.0 && w * r / (1.0 - r) < tol) break;
    }

    w = w0, c = c0, p = p0;
    for (double k = k0 - 1.0; k >= 0.0; k -= 1.0) {
        if (k0 - k > cap) throw NumericError("marcum_q1: downward series did not converge");
        w *= (k + 1.0) / lambda;
        c = std::max(0.0, c - p);
        p *= (k + 1.0) / y;
        sum += w * c;
        const double r = k / lambda;
        if (w * c / (1.0 - r) < tol) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

double bocus_poly_i(double s) { return poly4(kBocusI, s); }

double bocus_poly_j(double s) { return poly4(kBocusJ, s); }

double marcum_q1_bocus(double s, double rho) {
    if (s < 0.0 || rho < 0.0) throw DomainError("marcum_q1_bocus: arguments must be non-negative");
    if (rho == 0.0) return 1.0;
    const double v = std::exp(-std::exp(bocus_poly_i(s)) * std::pow(rho, bocus_poly_j(s)));
    return std::clamp(v, 0.0, 1.0);
}

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double gaussian_q_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("gaussian_q_inv: p must lie in (0, 1)");
    double x = -normal_quantile_guess(p);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (int it = 0; it < 8; ++it) {
        const double pdf = norm * std::exp(-0.5 * x * x);
        if (pdf == 0.0) break;
        const double err = gaussian_q(x) - p;
        // Halley step: Q' = -pdf, Q'' = x pdf
        const double step = err / pdf;
        const double dx = step / (1.0 + 0.5 * x * step);
        x += dx;
        if (std::fabs(dx) <= 1e-15 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

double lambert_w0(double y) {
    require_finite(y, "lambert_w0");
    constexpr double branch = -1.0 / std::numbers::e;
    if (y < branch) {
        // allow round-off at the branch point itself
        if (y < branch - 4.0 * kEps) throw DomainError("lambert_w0: argument below -1/e");
        return -1.0;
    }
    if (y == 0.0) return 0.0;

    double w;
    if (y < -0.25) {
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * y + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (y < 3.0) {
        w = std::log1p(y);
        w *= 0.8;
    } else {
        const double l1 = std::log(y);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    if (w == -1.0) return w;

    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double dw = f / denom;
        w -= dw;
        if (std::fabs(dw) <= 4.0 * kEps * (1.0 + std::fabs(w))) break;
    }
    return w;
}

double lambert_w0_exp(double t) {
    require_finite(t, "lambert_w0_exp");
    if (t < 500.0) return lambert_w0(std::exp(t));
    // solve w + log w = t
    double w = t - std::log(t);
    for (int it = 0; it < 64; ++it) {
        const double f = w + std::log(w) - t;
        const double dw = f / (1.0 + 1.0 / w);
        w -= dw;
        if (std::fabs(dw) <= 4.0 * kEps * w) break;
    }
    return w;
}

double exp_integral_e1(double x, const Accuracy& acc) {
    require_finite(x, "exp_integral_e1");
    if (x <= 0.0) throw DomainError("exp_integral_e1: argument must be positive");
    const int cap = acc.max_terms;
    if (x <= 1.0) {
        // E1 = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double sum = 0.0;
        double fact_term = 1.0;  // (-x)^k / k!
        for (int k = 1; k <= cap; ++k) {
            fact_term *= -x / k;
            const double del = fact_term / k;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * kEps * 0.5) {
                return -std::numbers::egamma - std::log(x) - sum;
            }
        }
        throw NumericError("exp_integral_e1: series did not converge");
    }
    // modified Lentz evaluation of the continued fraction
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= cap; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h * std::exp(-x);
    }
    throw NumericError("exp_integral_e1: continued fraction did not converge");
}

}  // namespace pafbl::specfun
