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

#ifndef PAFBL_SPECFUN_HPP
#define PAFBL_SPECFUN_HPP

// Special-function kernels used by the channel and error-probability models.
// All functions are pure and reentrant.

namespace pafbl::specfun {

/// Truncation control for series and continued fractions.
struct Accuracy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_terms = 10000;

    /// Throws DomainError unless max_terms >= 1 and at least one tolerance is positive.
    void validate() const;
};

/// Zeroth-order Bessel function of the first kind.
double bessel_j0(double x);

/// Modified Bessel function I0(x), x >= 0. Throws std::overflow_error above ~713.
double bessel_i0(double x);

/// exp(-x) * I0(x), valid for every finite x >= 0.
double bessel_i0_scaled(double x);

/// Regularized lower incomplete gamma P(s, x).
double gamma_p(double s, double x, const Accuracy& acc = {});

/// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x).
double gamma_q(double s, double x, const Accuracy& acc = {});

/// Upper incomplete gamma Gamma(s, x). Integer s uses the finite recurrence
/// Gamma(n+1, x) = n Gamma(n, x) + x^n e^-x.
double gamma_upper(double s, double x, const Accuracy& acc = {});

/// log of the Poisson probability mass lambda^k e^-lambda / k!.
double poisson_log_pmf(double k, double lambda);

/// First-order Marcum Q-function via the Poisson-mixture series, summed outward
/// from the mode of the noncentrality weights. Result in [0, 1].
double marcum_q1(double s, double rho, const Accuracy& acc = {});

/// Polynomials of the exponential Marcum-Q approximation.
double bocus_poly_i(double s);
double bocus_poly_j(double s);

/// exp(-exp(I(s)) rho^J(s)), clamped to [0, 1].
double marcum_q1_bocus(double s, double rho);

/// Gaussian tail Q(x) = erfc(x / sqrt 2) / 2.
double gaussian_q(double x);

/// Inverse of gaussian_q for p in (0, 1).
double gaussian_q_inv(double p);

/// Principal branch of the Lambert W function, y >= -1/e.
double lambert_w0(double y);

/// W0(exp(t)) without forming exp(t); usable for t far beyond the double range.
double lambert_w0_exp(double t);

/// Exponential integral E1(x), x > 0.
double exp_integral_e1(double x, const Accuracy& acc = {});

}  // namespace pafbl::specfun

#endif
