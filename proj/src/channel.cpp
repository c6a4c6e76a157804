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

#include "pafbl/channel.hpp"

#include <cmath>
#include <numbers>

#include "pafbl/error.hpp"
#include "pafbl/specfun.hpp"

namespace pafbl::channel {

CorrelationSpec CorrelationSpec::from_geometry(const Geometry& g) {
    if (!(g.antenna_separation_m >= 0.0) || !(g.speed_mps >= 0.0) || !(g.processing_delay_s >= 0.0)) {
        throw DomainError("CorrelationSpec: separation, speed and delay must be non-negative");
    }
    if (!(g.carrier_hz > 0.0) || !std::isfinite(g.carrier_hz)) {
        throw DomainError("CorrelationSpec: carrier frequency must be positive");
    }
    return CorrelationSpec(g);
}

CorrelationSpec CorrelationSpec::from_sigma(double sigma) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("CorrelationSpec: sigma must lie in [0, 1]");
    return CorrelationSpec(sigma);
}

const Geometry& CorrelationSpec::geometry() const {
    if (!uses_geometry()) throw StateError("CorrelationSpec: direct sigma has no geometry");
    return std::get<Geometry>(value_);
}

double CorrelationSpec::direct_sigma() const {
    if (uses_geometry()) throw StateError("CorrelationSpec: geometry spec has no direct sigma");
    return std::get<double>(value_);
}

double CorrelationSpec::wavelength_m() const { return kSpeedOfLight / geometry().carrier_hz; }

double mismatch_distance(const CorrelationSpec& spec) {
    const Geometry& g = spec.geometry();
    return std::fabs(g.antenna_separation_m - g.speed_mps * g.processing_delay_s);
}

double correlation_rho(double d, double lambda_m) {
    if (!(d >= 0.0)) throw DomainError("correlation_rho: distance must be non-negative");
    if (!(lambda_m > 0.0)) throw DomainError("correlation_rho: wavelength must be positive");
    return specfun::bessel_j0(2.0 * std::numbers::pi * d / lambda_m);
}

double sigma_from_rho(double rho) {
    if (!(std::fabs(rho) <= 1.0)) throw DomainError("sigma_from_rho: |rho| must not exceed 1");
    // (1 - rho)(1 + rho) keeps precision as |rho| -> 1
    return std::sqrt((1.0 - std::fabs(rho)) * (1.0 + std::fabs(rho)));
}

double resolve_sigma(const CorrelationSpec& spec) {
    if (!spec.uses_geometry()) return spec.direct_sigma();
    return sigma_from_rho(correlation_rho(mismatch_distance(spec), spec.wavelength_m()));
}

void ConditionalGainDist::validate() const {
    if (!(ghat >= 0.0) || !std::isfinite(ghat)) throw DomainError("ConditionalGainDist: ghat must be finite and >= 0");
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("ConditionalGainDist: sigma must lie in [0, 1]");
}

double ConditionalGainDist::marcum_s() const {
    return std::sqrt(2.0 * noncentral_gain() / (sigma * sigma));
}

namespace {

void require_interior(const ConditionalGainDist& dist) {
    dist.validate();
    if (dist.degenerate()) {
        throw DegenerateDistributionError("conditional gain law has no density for sigma in {0, 1}");
    }
}

}  // namespace

double conditional_pdf(const ConditionalGainDist& dist, double x) {
    require_interior(dist);
    if (!(x >= 0.0)) throw DomainError("conditional_pdf: x must be non-negative");
    const double s2 = dist.sigma * dist.sigma;
    const double c = dist.noncentral_gain();
    const double root = std::sqrt(x) - std::sqrt(c);
    const double z = 2.0 * std::sqrt(x * c) / s2;
    return std::exp(-root * root / s2) * specfun::bessel_i0_scaled(z) / s2;
}

double conditional_ccdf(const ConditionalGainDist& dist, double x) {
    require_interior(dist);
    if (!(x >= 0.0)) throw DomainError("conditional_cdf: x must be non-negative");
    const double s2 = dist.sigma * dist.sigma;
    return specfun::marcum_q1(dist.marcum_s(), std::sqrt(2.0 * x / s2));
}

double conditional_cdf(const ConditionalGainDist& dist, double x) { return 1.0 - conditional_ccdf(dist, x); }

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::standard_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open_zero()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return mix64(master ^ mix64(index + 1)); }

double sample_conditional(const ConditionalGainDist& dist, RandomStream& rng) {
    dist.validate();
    if (dist.sigma == 0.0) return dist.ghat;
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const double amp = std::sqrt((1.0 - dist.sigma * dist.sigma) * dist.ghat);
    // q ~ CN(0, 1): independent N(0, 1/2) components
    const double qr = rng.standard_normal() * std::numbers::sqrt2 * 0.5;
    const double qi = rng.standard_normal() * std::numbers::sqrt2 * 0.5;
    const double re = amp * std::cos(theta) + dist.sigma * qr;
    const double im = amp * std::sin(theta) + dist.sigma * qi;
    return re * re + im * im;
}

double sample_rayleigh_gain(RandomStream& rng) { return rng.exponential(); }

}  // namespace pafbl::channel
