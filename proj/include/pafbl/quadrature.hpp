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

#ifndef PAFBL_QUADRATURE_HPP
#define PAFBL_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace pafbl::quad {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. Throws NumericError on failure.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

/// Integral over [a, inf) through x = a + t / (1 - t). Interior break points
/// (locations of sharp features) are integrated piecewise before the tail.
QuadResult integrate_to_infinity(const Integrand& f, double a, std::span<const double> breaks = {},
                                 const QuadOptions& opts = {});

/// Gauss-Laguerre rule with weight e^-x on [0, inf).
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with n nodes (computed once per n, thread-safe).
const LaguerreRule& gauss_laguerre(int n);

/// E[f(X)] for X ~ Exp(1) with the n-node rule.
double expect_exponential(const std::function<double(double)>& f, int n = 64);

}  // namespace pafbl::quad

#endif
