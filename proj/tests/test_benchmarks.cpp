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

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include <doctest.h>

#include "oracle_values.hpp"
#include "pafbl/benchmarks.hpp"
#include "pafbl/error.hpp"
#include "pafbl/fbl.hpp"
#include "pafbl/rate_adapt.hpp"
#include "pafbl/specfun.hpp"

using namespace pafbl;
using namespace pafbl::bench;
using doctest::Approx;

namespace {
const LinkBudget kBudget15 = LinkBudget::from_db(15.0);

// Throughput pinned from the first verified run and confirmed against a
// 10^6-sample simulation of the genie link (2.84235 +- 0.00107).
constexpr double kGenieThroughput15dB300 = 2.84189;
}  // namespace

TEST_CASE("no-CSIT error and throughput") {
    CHECK(no_csit_error(kBudget15, 300, 2.0) == Approx(oracle::kNoCsitErrorRef).epsilon(1e-8));
    CHECK(no_csit_error(kBudget15, 300, 1.0) == Approx(oracle::kNoCsitErrorR1).epsilon(1e-8));
    const auto t = no_csit_throughput(kBudget15, 300, 2.0);
    CHECK(t.exact == Approx(2.0 * (1.0 - oracle::kNoCsitErrorRef)).epsilon(1e-8));
    CHECK(t.approx > 0.0);
    CHECK(t.relative_gap == Approx(std::abs(t.approx - t.exact) / t.exact).epsilon(1e-12));
    MESSAGE("no-CSIT approximation gap at R = 2: " << t.relative_gap);
    CHECK(no_csit_throughput(kBudget15, 300, 1e-6).exact <= 1e-6);
    CHECK(no_csit_throughput(kBudget15, 300, 20.0).exact <= 1e-9);
    CHECK_THROWS_AS(no_csit_error(kBudget15, 300, -1.0), std::domain_error);
    CHECK_THROWS_AS(no_csit_error(kBudget15, 0, 1.0), std::domain_error);
}

TEST_CASE("no-CSIT exact throughput is unimodal in R") {
    std::vector<double> eta;
    for (int i = 0; i < 100; ++i) eta.push_back(no_csit_throughput(kBudget15, 300, 0.05 + 0.05 * i).exact);
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < eta.size(); ++i) maxima += eta[i] > eta[i - 1] && eta[i] >= eta[i + 1];
    CHECK(maxima == 1);
}

TEST_CASE("no-CSIT rate optimization") {
    const auto r = no_csit_rate_opt(kBudget15, 300);
    CHECK(r.path == RatePath::numeric);
    CHECK(r.lambert_argument == Approx(kBudget15.power() / (1.0 - std::sqrt(300.0 / (2 * std::numbers::pi)))).epsilon(1e-14));
    CHECK(r.lambert_argument < -1.0 / std::numbers::e);
    const double hi = std::log1p(10 * kBudget15.power());
    // 2000-point grid, refined by a second 2000-point grid around its argmax
    auto scan = [](double lo, double up) {
        double best = 0.0, best_r = lo;
        for (int i = 0; i < 2000; ++i) {
            const double x = lo + (up - lo) * i / 1999;
            const double t = no_csit_throughput(kBudget15, 300, x).exact;
            if (t > best) best = t, best_r = x;
        }
        return best_r;
    };
    const double step = (hi - 0.01) / 1999;
    const double coarse = scan(0.01, hi);
    const double best_r = scan(coarse - step, coarse + step);
    CHECK(std::abs(r.rate - best_r) <= 1e-3);
    CHECK(r.throughput >= no_csit_throughput(kBudget15, 300, r.rate + 0.2).exact);
    CHECK(r.throughput >= no_csit_throughput(kBudget15, 300, r.rate - 0.2).exact);
    CHECK(r.error_prob == Approx(no_csit_error(kBudget15, 300, r.rate)).epsilon(1e-12));
    CHECK(to_string(RatePath::numeric) == "numeric");
    CHECK(to_string(RatePath::lambert_w) == "lambert-w");
}

TEST_CASE("no-CSIT Lambert path for very short codes") {
    // L < 2 pi makes the argument positive and the closed form applicable
    const auto r = no_csit_rate_opt(kBudget15, 4);
    CHECK(r.path == RatePath::lambert_w);
    CHECK(r.rate > 0.0);
}

TEST_CASE("genie instantaneous rate") {
    const double g = 0.8;
    const double cap = std::log1p(g * kBudget15.power());
    CHECK(genie_rate_instant(g, kBudget15, 300, 0.5).rate == Approx(cap).epsilon(1e-14));
    CHECK(genie_rate_instant(g, kBudget15, 100000000, 0.01).rate == Approx(cap).epsilon(1e-3));
    for (double eps : {1e-5, 1e-3, 0.05, 0.3}) {
        const auto r = genie_rate_instant(g, kBudget15, 300, eps);
        CHECK_FALSE(r.clamped);
        CHECK(std::abs(fbl::fbl_error(g, kBudget15, {300, r.rate}) - eps) <= 1e-9);
    }
    const auto tiny = genie_rate_instant(1e-6, kBudget15, 100, 1e-3);
    CHECK(tiny.clamped);
    CHECK(tiny.rate == 0.0);
    CHECK_THROWS_AS(genie_rate_instant(0.0, kBudget15, 300, 0.1), std::domain_error);
}

TEST_CASE("genie asymptotic rate and dispersion factor") {
    CHECK(genie_r_infinity(kBudget15) == Approx(oracle::kGenieRInfRef).epsilon(1e-10));
    CHECK(genie_zeta(kBudget15) == Approx(oracle::kGenieZetaRef).epsilon(1e-9));
    CHECK(genie_r_infinity(LinkBudget::from_linear(1e-6)) <= 1.01e-6);
    CHECK(genie_r_infinity(LinkBudget::from_linear(1.0)) < genie_r_infinity(LinkBudget::from_linear(10.0)));
    CHECK(genie_r_infinity(LinkBudget::from_linear(10.0)) < genie_r_infinity(LinkBudget::from_linear(100.0)));
    CHECK(genie_zeta(LinkBudget::from_linear(1e8)) == Approx(1.0).epsilon(1e-3));
    CHECK(genie_zeta(LinkBudget::from_linear(1e-6)) <= 1e-2);
    const double z = genie_zeta(kBudget15);
    CHECK(z > 0.0);
    CHECK(z < 1.0);
}

TEST_CASE("genie target error") {
    const auto e = genie_eps_opt(kBudget15, 300);
    REQUIRE(e.closed_form.has_value());
    CHECK(e.path == EpsPath::closed_form);
    CHECK(e.eps_hat > 0.0);
    CHECK(e.eps_hat < 0.5);
    CHECK(std::abs(e.numeric - *e.closed_form) <= 0.3 * *e.closed_form);
    double last = 1.0;
    for (int L : {100, 300, 1000}) {
        const double eps = genie_eps_opt(kBudget15, L).eps_hat;
        CHECK(eps < last);
        last = eps;
    }
    // tiny codes at low SNR leave the closed form undefined
    const auto fb = genie_eps_opt(LinkBudget::from_db(-20.0), 1);
    CHECK(fb.path == EpsPath::numeric_fallback);
    CHECK_FALSE(fb.closed_form.has_value());
    CHECK(to_string(EpsPath::closed_form) == "closed-form");
    CHECK(to_string(EpsPath::numeric_fallback) == "numeric-fallback");
}

TEST_CASE("genie objective scan") {
    const double rinf = genie_r_infinity(kBudget15);
    const double z = genie_zeta(kBudget15);
    const auto e = genie_eps_opt(kBudget15, 300);
    double best = -1.0, best_eps = 0.0;
    for (int i = 1; i < 10000; ++i) {
        const double eps = 0.5 * i / 10000;
        const double t = genie_objective(rinf, z, 300, eps);
        if (t > best) best = t, best_eps = eps;
    }
    CHECK(std::abs(e.numeric - best_eps) <= 1e-4);
    CHECK(std::abs(best_eps - *e.closed_form) <= 0.3 * *e.closed_form);
}

TEST_CASE("genie throughput") {
    const auto g = genie_throughput(kBudget15, 300);
    CHECK(g.throughput == Approx(kGenieThroughput15dB300).epsilon(1e-5));
    CHECK(g.numeric_throughput >= g.throughput);
    const auto inf = genie_throughput(kBudget15, 100000000);
    CHECK(std::abs(inf.throughput - inf.r_infinity) / inf.r_infinity <= 1e-3);
    for (double sigma : {0.3, 0.5, 0.8}) {
        const double pa = rate::average_throughput(sigma, kBudget15, 300, rate::RatePolicy::numeric_refined).throughput;
        CHECK(g.throughput >= pa);
    }
}

TEST_CASE("genie cache is consistent across threads") {
    GenieCache cache;
    const auto direct = genie_throughput(kBudget15, 300);
    std::vector<double> results(4);
    {
        std::vector<std::jthread> workers;
        for (int t = 0; t < 4; ++t) {
            workers.emplace_back([&, t] { results[t] = cache.throughput(kBudget15, 300).throughput; });
        }
    }
    for (double r : results) CHECK(r == direct.throughput);
    const auto e = cache.get(kBudget15);
    CHECK(e.r_infinity == genie_r_infinity(kBudget15));
    CHECK(e.zeta == genie_zeta(kBudget15));
}
