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

#ifndef PAFBL_OPTIMIZE_HPP
#define PAFBL_OPTIMIZE_HPP

#include <cmath>
#include <numbers>

#include "pafbl/error.hpp"

namespace pafbl::opt {

struct MaximizeResult {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than x_tol * (1 + |x|).
template <class F>
MaximizeResult golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-9, int max_iter = 200) {
    if (!(lo <= hi)) throw DomainError("golden_section_maximize: empty bracket");
    constexpr double inv_phi = std::numbers::phi - 1.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    for (; it < max_iter; ++it) {
        if (b - a <= x_tol * (1.0 + std::fabs(0.5 * (a + b)))) break;
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    MaximizeResult best = fc >= fd ? MaximizeResult{c, fc, it} : MaximizeResult{d, fd, it};
    // the endpoints are candidates too when the maximum sits on the boundary
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo > best.value) best = {lo, flo, it};
    if (fhi > best.value) best = {hi, fhi, it};
    return best;
}

}  // namespace pafbl::opt

#endif
