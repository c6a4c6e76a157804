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

#ifndef PAFBL_MONTECARLO_HPP
#define PAFBL_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pafbl/fbl.hpp"
#include "pafbl/rate_adapt.hpp"

// Direct simulation of the channel model and the block error event. Every
// estimate is a pure function of (inputs, McConfig, stream index).

namespace pafbl::mc {

struct McConfig {
    std::uint64_t samples = 1000000;
    std::uint64_t master_seed = 0x5eed;
    std::uint64_t batch = 65536;

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Welford accumulator with an associative merge (Chan et al.).
class Accumulator {
public:
    void add(double x);
    void merge(const Accumulator& other);
    McEstimate estimate() const;
    std::uint64_t count() const noexcept { return n_; }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

McEstimate mc_conditional_error(const rate::PaOperatingPoint& pt, double rate, const McConfig& cfg,
                                std::uint64_t stream = 0);

/// Rate rule used by the simulation. Policies that need a per-ghat optimization
/// are tabulated once on a dense ghat grid and interpolated.
struct McRatePolicy {
    rate::RatePolicy policy = rate::RatePolicy::numeric_refined;
    std::optional<double> fixed_rate;  // overrides the policy when set
};

struct McThroughput {
    McEstimate throughput;
    McEstimate error_prob;
};

McThroughput mc_average_throughput(double sigma, const LinkBudget& budget, int block_length, const McRatePolicy& policy,
                                   const McConfig& cfg, std::uint64_t stream = 0);

McEstimate mc_genie_throughput(const LinkBudget& budget, int block_length, double eps_hat, const McConfig& cfg,
                               std::uint64_t stream = 0);

/// Piecewise-cubic table of a policy's rate over ghat; exact evaluation beyond the grid.
class RateTable {
public:
    RateTable(double sigma, const LinkBudget& budget, int block_length, rate::RatePolicy policy);
    double operator()(double ghat) const;
    double ghat_max() const noexcept { return ghat_max_; }

private:
    double sigma_;
    LinkBudget budget_;
    int block_length_;
    rate::RatePolicy policy_;
    double ghat_max_;
    double step_;
    std::vector<double> values_;
};

}  // namespace pafbl::mc

#endif
