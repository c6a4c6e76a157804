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

#include "pafbl/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pafbl/benchmarks.hpp"
#include "pafbl/channel.hpp"
#include "pafbl/error.hpp"

namespace pafbl::mc {

void McConfig::validate() const {
    if (samples == 0) throw DomainError("McConfig: samples must be positive");
    if (batch == 0) throw DomainError("McConfig: batch must be positive");
}

void Accumulator::add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
}

void Accumulator::merge(const Accumulator& other) {
    if (other.n_ == 0) return;
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    n_ += other.n_;
}

McEstimate Accumulator::estimate() const {
    McEstimate e;
    e.mean = mean_;
    e.samples = n_;
    if (n_ > 1) {
        const double var = std::max(m2_, 0.0) / static_cast<double>(n_ - 1);
        e.std_error = std::sqrt(var / static_cast<double>(n_));
    }
    return e;
}

namespace {

// Runs body(rng, count, accumulators...) once per batch with its own stream,
// then merges in batch order.
template <std::size_t K, typename Body>
std::array<Accumulator, K> run_batches(const McConfig& cfg, std::uint64_t stream, Body&& body) {
    cfg.validate();
    const std::uint64_t stream_seed = channel::derive_seed(cfg.master_seed, stream);
    std::array<Accumulator, K> total{};
    std::uint64_t done = 0;
    for (std::uint64_t b = 0; done < cfg.samples; ++b) {
        const std::uint64_t count = std::min(cfg.batch, cfg.samples - done);
        channel::RandomStream rng(channel::derive_seed(stream_seed, b));
        std::array<Accumulator, K> part{};
        body(rng, count, part);
        for (std::size_t k = 0; k < K; ++k) total[k].merge(part[k]);
        done += count;
    }
    return total;
}

}  // namespace

McEstimate mc_conditional_error(const rate::PaOperatingPoint& pt, double rate, const McConfig& cfg,
                                std::uint64_t stream) {
    pt.validate();
    const CodeSpec code = pt.code(rate);
    code.validate();
    const channel::ConditionalGainDist dist = pt.dist();
    auto acc = run_batches<1>(cfg, stream, [&](channel::RandomStream& rng, std::uint64_t count, auto& a) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const double g = channel::sample_conditional(dist, rng);
            a[0].add(fbl::fbl_error(g, pt.budget, code));
        }
    });
    return acc[0].estimate();
}

RateTable::RateTable(double sigma, const LinkBudget& budget, int block_length, rate::RatePolicy policy)
    : sigma_(sigma), budget_(budget), block_length_(block_length), policy_(policy), ghat_max_(50.0) {
    constexpr int kIntervals = 400;
    step_ = std::log1p(ghat_max_) / kIntervals;
    values_.resize(kIntervals + 1);
    for (int i = 0; i <= kIntervals; ++i) {
        const double ghat = std::expm1(i * step_);
        values_[i] = rate::policy_decision({ghat, sigma_, budget_, block_length_}, policy_).rate;
    }
}

double RateTable::operator()(double ghat) const {
    if (ghat >= ghat_max_) return rate::policy_decision({ghat, sigma_, budget_, block_length_}, policy_).rate;
    // four-point Lagrange in u = log(1 + ghat)
    const double u = std::log1p(std::max(ghat, 0.0)) / step_;
    const int last = static_cast<int>(values_.size()) - 1;
    const int i0 = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, last - 3);
    const double t = u - i0;
    const double* y = &values_[i0];
    const double l0 = -(t - 1) * (t - 2) * (t - 3) / 6.0;
    const double l1 = t * (t - 2) * (t - 3) / 2.0;
    const double l2 = -t * (t - 1) * (t - 3) / 2.0;
    const double l3 = t * (t - 1) * (t - 2) / 6.0;
    return std::max(0.0, l0 * y[0] + l1 * y[1] + l2 * y[2] + l3 * y[3]);
}

McThroughput mc_average_throughput(double sigma, const LinkBudget& budget, int block_length,
                                   const McRatePolicy& policy, const McConfig& cfg, std::uint64_t stream) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("mc_average_throughput: sigma must lie in [0, 1]");
    if (block_length < 1) throw DomainError("mc_average_throughput: block length must be >= 1");
    if (policy.fixed_rate && !(*policy.fixed_rate >= 0.0)) throw DomainError("mc_average_throughput: negative rate");
    cfg.validate();

    std::optional<RateTable> table;
    if (!policy.fixed_rate) table.emplace(sigma, budget, block_length, policy.policy);

    auto acc = run_batches<2>(cfg, stream, [&](channel::RandomStream& rng, std::uint64_t count, auto& a) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const double ghat = rng.exponential();
            const double r = policy.fixed_rate ? *policy.fixed_rate : (*table)(ghat);
            const double g = channel::sample_conditional({ghat, sigma}, rng);
            const double eps = r > 0.0 ? fbl::fbl_error(g, budget, {block_length, r}) : 0.0;
            const bool decoded = rng.uniform() >= eps;
            a[0].add(decoded ? r : 0.0);
            a[1].add(decoded ? 0.0 : 1.0);
        }
    });
    return {acc[0].estimate(), acc[1].estimate()};
}

McEstimate mc_genie_throughput(const LinkBudget& budget, int block_length, double eps_hat, const McConfig& cfg,
                               std::uint64_t stream) {
    if (!(eps_hat > 0.0 && eps_hat < 1.0)) throw DomainError("mc_genie_throughput: eps_hat must lie in (0, 1)");
    if (block_length < 1) throw DomainError("mc_genie_throughput: block length must be >= 1");
    auto acc = run_batches<1>(cfg, stream, [&](channel::RandomStream& rng, std::uint64_t count, auto& a) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const double g = channel::sample_rayleigh_gain(rng);
            const double r = g > 0.0 ? bench::genie_rate_instant(g, budget, block_length, eps_hat).rate : 0.0;
            a[0].add(r * (1.0 - eps_hat));
        }
    });
    return acc[0].estimate();
}

}  // namespace pafbl::mc
