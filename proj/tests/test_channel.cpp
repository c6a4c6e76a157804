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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "oracle_values.hpp"
#include "pafbl/channel.hpp"
#include "pafbl/error.hpp"
#include "pafbl/quadrature.hpp"
#include "pafbl/specfun.hpp"

using namespace pafbl::channel;
using doctest::Approx;

namespace {

CorrelationSpec geo(double d_a, double v, double delta, double f_c = 2.68e9) {
    return CorrelationSpec::from_geometry({d_a, v, delta, f_c});
}

}  // namespace

TEST_CASE("mismatch distance") {
    CHECK(mismatch_distance(geo(1.5, 300.0, 0.005)) == Approx(0.0).epsilon(1e-15));
    CHECK(mismatch_distance(geo(1.0, 30.0, 0.005)) == Approx(0.85).epsilon(1e-15));
    CHECK(mismatch_distance(geo(0.0, 20.0, 0.005)) == Approx(0.1).epsilon(1e-15));
    CHECK_THROWS_AS(mismatch_distance(CorrelationSpec::from_sigma(0.4)), pafbl::StateError);
}

TEST_CASE("CorrelationSpec accessors and validation") {
    const auto s = CorrelationSpec::from_sigma(0.25);
    CHECK_FALSE(s.uses_geometry());
    CHECK(s.direct_sigma() == 0.25);
    CHECK_THROWS_AS(s.geometry(), pafbl::StateError);
    CHECK_THROWS_AS(s.wavelength_m(), pafbl::StateError);
    const auto g = geo(1.0, 10.0, 0.005);
    CHECK(g.uses_geometry());
    CHECK_THROWS_AS(g.direct_sigma(), pafbl::StateError);
    CHECK(g.wavelength_m() == Approx(kSpeedOfLight / 2.68e9).epsilon(1e-15));
    CHECK_THROWS_AS(CorrelationSpec::from_sigma(1.2), std::domain_error);
    CHECK_THROWS_AS(CorrelationSpec::from_sigma(-0.1), std::domain_error);
    CHECK_THROWS_AS(geo(-1.0, 10.0, 0.005), std::domain_error);
    CHECK_THROWS_AS(geo(1.0, 10.0, 0.005, 0.0), std::domain_error);
}

TEST_CASE("Jakes correlation") {
    CHECK(correlation_rho(0.0, 0.1) == 1.0);
    const double lambda = 0.1;
    CHECK(std::abs(correlation_rho(2.404825557695773 * lambda / (2 * std::numbers::pi), lambda)) <= 1e-10);
    CHECK(correlation_rho(lambda / 4, lambda) == Approx(oracle::kJ0AtHalfPi).epsilon(1e-13));
    CHECK_THROWS_AS(correlation_rho(-0.1, lambda), std::domain_error);
    CHECK_THROWS_AS(correlation_rho(0.1, 0.0), std::domain_error);
}

TEST_CASE("sigma_from_rho is the conditional regression weight") {
    CHECK(sigma_from_rho(1.0) == 0.0);
    CHECK(sigma_from_rho(-1.0) == 0.0);
    CHECK(sigma_from_rho(0.0) == 1.0);
    CHECK(sigma_from_rho(0.8) == Approx(0.6).epsilon(1e-15));
    CHECK(sigma_from_rho(-0.8) == Approx(0.6).epsilon(1e-15));
    CHECK_THROWS_AS(sigma_from_rho(1.01), std::domain_error);
    // zero mismatch means perfect CSIT
    CHECK(sigma_from_rho(correlation_rho(0.0, 0.1)) == 0.0);
}

TEST_CASE("resolve_sigma") {
    CHECK(resolve_sigma(CorrelationSpec::from_sigma(0.37)) == 0.37);
    const auto g = geo(0.0, 20.0, 0.005);
    const double rho = correlation_rho(0.1, g.wavelength_m());
    CHECK(resolve_sigma(g) == Approx(std::sqrt(1.0 - rho * rho)).epsilon(1e-14));
}

TEST_CASE("conditional density") {
    const ConditionalGainDist zero_ghat{0.0, 0.5};
    for (double x : {0.0, 0.1, 1.0, 3.0}) {
        CHECK(conditional_pdf(zero_ghat, x) == Approx(4.0 * std::exp(-4.0 * x)).epsilon(1e-14));
    }
    const ConditionalGainDist d{1.0, 0.5};
    CHECK(d.mean() == Approx(0.75 + 0.25).epsilon(1e-15));
    CHECK(d.marcum_s() == Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK_THROWS_AS(conditional_pdf({1.0, 0.0}, 1.0), pafbl::DegenerateDistributionError);
    CHECK_THROWS_AS(conditional_pdf({1.0, 1.0}, 1.0), pafbl::DegenerateDistributionError);
    CHECK_THROWS_AS(conditional_pdf(d, -1.0), std::domain_error);
    CHECK_THROWS_AS(conditional_pdf({-1.0, 0.5}, 1.0), std::domain_error);
    CHECK(conditional_pdf({1e4, 0.3}, 1e4) > 0.0);
}

TEST_CASE("conditional distribution function") {
    const ConditionalGainDist d{1.0, 0.5};
    CHECK(conditional_cdf(d, 0.0) == 0.0);
    CHECK(conditional_cdf(d, 1.0) == Approx(oracle::kCondCdfRef).epsilon(1e-12));
    CHECK(conditional_cdf(d, 1.0 + 40 * 0.25) >= 1.0 - 1e-8);
    CHECK(conditional_cdf(d, 2.0) + conditional_ccdf(d, 2.0) == Approx(1.0).epsilon(1e-14));
    const auto r = pafbl::quad::integrate([&](double x) { return conditional_pdf(d, x); }, 0.0, 1.0,
                                          {1e-14, 1e-13, 500});
    CHECK(conditional_cdf(d, 1.0) == Approx(r.value).epsilon(1e-11));
}

TEST_CASE("seed derivation") {
    // first output of the reference splitmix64 generator seeded with 0
    CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
    CHECK(derive_seed(7, 3) == mix64(7 ^ mix64(4)));
}

TEST_CASE("random streams are reproducible") {
    RandomStream a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs = differs || (x != c.uniform());
    }
    CHECK(differs);
}

TEST_CASE("degenerate sampling branches") {
    RandomStream rng(1);
    for (int i = 0; i < 100; ++i) CHECK(sample_conditional({2.5, 0.0}, rng) == 2.5);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) sum += sample_conditional({9.0, 1.0}, rng);
    CHECK(sum / n == Approx(1.0).epsilon(0.01));
}

TEST_CASE("Rayleigh gain samples") {
    RandomStream rng(2024);
    const int n = 1000000;
    double sum = 0.0;
    int above = 0;
    for (int i = 0; i < n; ++i) {
        const double g = sample_rayleigh_gain(rng);
        CHECK_UNARY(g >= 0.0);
        sum += g;
        above += g > 1.0;
    }
    CHECK(std::abs(sum / n - 1.0) <= 0.01);
    CHECK(std::abs(static_cast<double>(above) / n - std::exp(-1.0)) <= 0.005);
}

TEST_CASE("conditional samples: moments and KS distance") {
    const ConditionalGainDist d{1.0, 0.5};
    RandomStream rng(derive_seed(0x5eed, 0));
    const int n = 1000000;
    std::vector<double> xs(n);
    double sum = 0.0, sum2 = 0.0;
    for (double& x : xs) {
        x = sample_conditional(d, rng);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / n);
    CHECK(std::abs(mean - d.mean()) <= 3 * se);

    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (int i = 0; i < n; i += 97) {
        const double f = conditional_cdf(d, xs[i]);
        ks = std::max({ks, std::abs(f - static_cast<double>(i) / n), std::abs(f - static_cast<double>(i + 1) / n)});
    }
    MESSAGE("KS distance (subsampled): " << ks);
    CHECK(ks <= 0.002);
}
