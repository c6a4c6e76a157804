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

#ifndef PAFBL_CHANNEL_HPP
#define PAFBL_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <variant>

namespace pafbl::channel {

inline constexpr double kSpeedOfLight = 299792458.0;

struct Geometry {
    double antenna_separation_m = 0.0;  // d_a
    double speed_mps = 0.0;             // v
    double processing_delay_s = 0.0;    // delta
    double carrier_hz = 0.0;            // f_c
};

/// Either physical mismatch geometry or a directly specified sigma.
class CorrelationSpec {
public:
    static CorrelationSpec from_geometry(const Geometry& g);
    static CorrelationSpec from_sigma(double sigma);

    bool uses_geometry() const noexcept { return std::holds_alternative<Geometry>(value_); }
    const Geometry& geometry() const;   // StateError for direct sigma
    double direct_sigma() const;        // StateError for geometry
    double wavelength_m() const;        // StateError for direct sigma

private:
    explicit CorrelationSpec(std::variant<Geometry, double> v) : value_(v) {}
    std::variant<Geometry, double> value_;
};

/// |d_a - v delta| in meters.
double mismatch_distance(const CorrelationSpec& spec);

/// Jakes spatial correlation J0(2 pi d / lambda).
double correlation_rho(double d, double lambda_m);

/// Mixing weight sigma with sqrt(1 - sigma^2) = |rho|.
double sigma_from_rho(double rho);

/// sigma for either representation.
double resolve_sigma(const CorrelationSpec& spec);

/// Law of g = |h|^2 given the predictor gain ghat = |hhat|^2.
struct ConditionalGainDist {
    double ghat = 0.0;
    double sigma = 0.0;

    void validate() const;
    bool degenerate() const noexcept { return sigma == 0.0 || sigma == 1.0; }
    double mean() const noexcept { return (1.0 - sigma * sigma) * ghat + sigma * sigma; }
    /// noncentrality (1 - sigma^2) ghat
    double noncentral_gain() const noexcept { return (1.0 - sigma * sigma) * ghat; }
    /// first Marcum argument sqrt(2 (1 - sigma^2) ghat / sigma^2)
    double marcum_s() const;
};

double conditional_pdf(const ConditionalGainDist& dist, double x);
double conditional_cdf(const ConditionalGainDist& dist, double x);
/// 1 - F(x), computed directly as a Marcum Q value.
double conditional_ccdf(const ConditionalGainDist& dist, double x);

/// Deterministic random stream owned by one sampling unit.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// uniform in [0, 1) with 53 random bits
    double uniform();
    /// uniform in (0, 1]
    double uniform_open_zero() { return 1.0 - uniform(); }
    double standard_normal();
    double exponential() { return -std::log(uniform_open_zero()); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Sub-seed for grid point / batch `index`: mix64(master ^ mix64(index + 1)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

double sample_conditional(const ConditionalGainDist& dist, RandomStream& rng);
double sample_rayleigh_gain(RandomStream& rng);

}  // namespace pafbl::channel

#endif
