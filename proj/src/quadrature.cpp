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

#include "pafbl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "pafbl/error.hpp"

namespace pafbl::quad {

namespace {

// Kronrod nodes and weights on [-1, 1]; odd indices are the Gauss points.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    const double value = resk * half;
    const double err = std::fabs((resk - resg) * half);
    return {a, b, value, err};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
    if (a == b) return {};
    if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("integrate: limits must be finite");
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int evals = 15;
    for (int it = 0; it < opts.max_subdivisions; ++it) {
        if (total_err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
            return {total, total_err, evals};
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // recompute sums to drop accumulated round-off before the final check
    total = 0.0;
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    if (total_err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)) * 10.0) {
        return {total, total_err, evals};
    }
    throw NumericError("integrate: tolerance not reached within subdivision limit");
}

QuadResult integrate_to_infinity(const Integrand& f, double a, std::span<const double> breaks,
                                 const QuadOptions& opts) {
    std::vector<double> pts{a};
    for (double x : breaks) {
        if (std::isfinite(x) && x > a) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    QuadResult out;
    const int pieces = static_cast<int>(pts.size());
    QuadOptions piece_opts = opts;
    piece_opts.abs_tol = opts.abs_tol / pieces;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const QuadResult r = integrate(f, pts[i], pts[i + 1], piece_opts);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
    }
    const double start = pts.back();
    const double scale = std::max(1.0, start - a);
    auto mapped = [&](double t) {
        if (t >= 1.0) return 0.0;
        const double u = 1.0 - t;
        const double x = start + scale * t / u;
        const double fx = f(x);
        return fx == 0.0 ? 0.0 : fx * scale / (u * u);
    };
    const QuadResult tail = integrate(mapped, 0.0, 1.0, piece_opts);
    out.value += tail.value;
    out.error_estimate += tail.error_estimate;
    out.evaluations += tail.evaluations;
    return out;
}

namespace {

LaguerreRule compute_laguerre(int n) {
    // Newton iteration on the three-term recurrence with asymptotic starting guesses.
    LaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<long double> x(n);
    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            const long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - x[i - 2]);
        }
        long double p1 = 0.0L, p2 = 0.0L, pp = 0.0L;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            p1 = 1.0L;
            p2 = 0.0L;
            for (int j = 1; j <= n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L - z) * p2 - (j - 1.0L) * p3) / j;
            }
            pp = (n * p1 - n * p2) / z;
            const long double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-17L * std::fabs(z)) {
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericError("gauss_laguerre: node iteration did not converge");
        x[i] = z;
        rule.nodes[i] = static_cast<double>(z);
        rule.weights[i] = static_cast<double>(-1.0L / (pp * n * p2));
    }
    return rule;
}

}  // namespace

const LaguerreRule& gauss_laguerre(int n) {
    if (n < 1 || n > 256) throw DomainError("gauss_laguerre: node count must lie in [1, 256]");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<LaguerreRule>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<LaguerreRule>(compute_laguerre(n))).first;
    }
    return *it->second;
}

double expect_exponential(const std::function<double(double)>& f, int n) {
    const LaguerreRule& rule = gauss_laguerre(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        if (rule.weights[i] == 0.0) continue;
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace pafbl::quad
