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

#include "pafbl/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <utility>

#include "pafbl/benchmarks.hpp"
#include "pafbl/channel.hpp"
#include "pafbl/error.hpp"
#include "pafbl/rate_adapt.hpp"

namespace pafbl::sweep {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::sweep_snr, "sweep-snr"},
    {Command::sweep_length, "sweep-length"},
    {Command::sweep_speed, "sweep-speed"},
    {Command::sweep_rate, "sweep-rate"},
    {Command::error_vs_length, "error-vs-length"},
    {Command::error_vs_speed, "error-vs-speed"},
    {Command::point, "point"},
}};

constexpr std::array<std::pair<Regime, std::string_view>, 6> kRegimes{{
    {Regime::pa_theorem1, "pa-theorem1"},
    {Regime::pa_theorem2, "pa-theorem2"},
    {Regime::pa_numeric, "pa-numeric"},
    {Regime::no_csit, "no-csit"},
    {Regime::genie, "genie"},
    {Regime::monte_carlo, "monte-carlo"},
}};

constexpr std::array<std::pair<Param, std::string_view>, 9> kParams{{
    {Param::snr_db, "snr_db"},
    {Param::sigma, "sigma"},
    {Param::length, "length"},
    {Param::rate, "rate"},
    {Param::v, "v"},
    {Param::d_a, "d_a"},
    {Param::d_a_lambda, "d_a_lambda"},
    {Param::delta, "delta"},
    {Param::f_c, "f_c"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
    for (const auto& [k, v] : table) {
        if (k == e) return v;
    }
    return "unknown";
}

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view s) {
    for (const auto& [k, v] : table) {
        if (v == s) return k;
    }
    return std::nullopt;
}

void check_value(Param p, double x) {
    const std::string name(to_string(p));
    if (!std::isfinite(x)) throw ConfigError(name + ": value must be finite");
    switch (p) {
        case Param::sigma:
            if (x < 0.0 || x > 1.0) throw ConfigError("sigma must lie in [0, 1]");
            break;
        case Param::length:
            if (x < 1.0 || x != std::floor(x) || x > 1e9) throw ConfigError("length must be an integer >= 1");
            break;
        case Param::f_c:
            if (x <= 0.0) throw ConfigError("f_c must be positive");
            break;
        case Param::rate:
        case Param::v:
        case Param::d_a:
        case Param::d_a_lambda:
        case Param::delta:
            if (x < 0.0) throw ConfigError(name + " must be non-negative");
            break;
        case Param::snr_db:
            break;
    }
}

}  // namespace

std::string_view to_string(Command c) { return name_of(kCommands, c); }
std::string_view to_string(Regime r) { return name_of(kRegimes, r); }
std::string_view to_string(Param p) { return name_of(kParams, p); }
std::optional<Command> parse_command(std::string_view s) { return lookup(kCommands, s); }
std::optional<Regime> parse_regime(std::string_view s) { return lookup(kRegimes, s); }
std::optional<Param> parse_param(std::string_view s) { return lookup(kParams, s); }

std::optional<Param> primary_axis(Command c) {
    switch (c) {
        case Command::sweep_snr: return Param::snr_db;
        case Command::sweep_length:
        case Command::error_vs_length: return Param::length;
        case Command::sweep_speed:
        case Command::error_vs_speed: return Param::v;
        case Command::sweep_rate: return Param::rate;
        case Command::point: return std::nullopt;
    }
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (regimes.empty()) throw ConfigError("regimes must list at least one regime");
    std::set<Regime> seen_regimes;
    for (Regime r : regimes) {
        if (!seen_regimes.insert(r).second) throw ConfigError("duplicate regime " + std::string(to_string(r)));
    }

    std::set<Param> bound;
    for (const Axis& a : axes) {
        const std::string name(to_string(a.param));
        if (!bound.insert(a.param).second) throw ConfigError("duplicate axis " + name);
        if (a.values.empty()) throw ConfigError("axis " + name + " has no values");
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            check_value(a.param, a.values[i]);
            if (i > 0 && !(a.values[i] > a.values[i - 1])) {
                throw ConfigError("axis " + name + " must be strictly increasing");
            }
        }
    }
    for (const auto& [p, x] : fixed) {
        if (!bound.insert(p).second) {
            throw ConfigError("parameter " + std::string(to_string(p)) + " is bound both as axis and fixed");
        }
        check_value(p, x);
    }

    const auto primary = primary_axis(command);
    if (!primary && !axes.empty()) throw ConfigError("command point takes no axes");
    if (primary && std::none_of(axes.begin(), axes.end(), [&](const Axis& a) { return a.param == *primary; })) {
        throw ConfigError("command " + std::string(to_string(command)) + " requires an axis over " +
                          std::string(to_string(*primary)));
    }

    auto has = [&](Param p) { return bound.count(p) != 0; };
    for (Param p : {Param::snr_db, Param::length}) {
        if (!has(p)) throw ConfigError("missing required parameter " + std::string(to_string(p)));
    }
    const bool geometry = has(Param::v) || has(Param::d_a) || has(Param::d_a_lambda) || has(Param::delta) ||
                          has(Param::f_c);
    if (has(Param::sigma) && geometry) throw ConfigError("sigma and geometry parameters are mutually exclusive");
    if (!has(Param::sigma)) {
        if (!geometry) throw ConfigError("missing required parameter sigma (or geometry v, d_a, delta, f_c)");
        for (Param p : {Param::v, Param::delta, Param::f_c}) {
            if (!has(p)) throw ConfigError("geometry requires parameter " + std::string(to_string(p)));
        }
        if (has(Param::d_a) == has(Param::d_a_lambda)) {
            throw ConfigError("geometry requires exactly one of d_a and d_a_lambda");
        }
    }
    if (has(Param::rate) && seen_regimes.count(Regime::genie)) {
        throw ConfigError("regime genie has no fixed-rate form; remove rate or the genie regime");
    }
    if (mc) {
        if (mc->samples == 0) throw ConfigError("mc.samples must be positive");
        if (mc->batch == 0) throw ConfigError("mc.batch must be positive");
    }
}

std::size_t SweepSpec::point_count() const {
    std::size_t n = 1;
    for (const Axis& a : axes) n *= a.values.size();
    return n;
}

std::map<Param, double> SweepSpec::point(std::size_t index) const {
    std::map<Param, double> out = fixed;
    for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
        const std::size_t n = it->values.size();
        out[it->param] = it->values[index % n];
        index /= n;
    }
    return out;
}

namespace {

struct Resolved {
    LinkBudget budget;
    int length = 1;
    double sigma = 0.0;
    std::optional<double> rate;
    std::optional<double> mismatch_d, d_a, v, delta, f_c;
};

Resolved resolve(const std::map<Param, double>& p) {
    Resolved r;
    r.budget = LinkBudget::from_db(p.at(Param::snr_db));
    r.length = static_cast<int>(p.at(Param::length));
    if (auto it = p.find(Param::rate); it != p.end()) r.rate = it->second;
    if (auto it = p.find(Param::sigma); it != p.end()) {
        r.sigma = it->second;
        return r;
    }
    const double f_c = p.at(Param::f_c);
    double d_a = 0.0;
    if (auto it = p.find(Param::d_a); it != p.end()) {
        d_a = it->second;
    } else {
        d_a = p.at(Param::d_a_lambda) * channel::kSpeedOfLight / f_c;
    }
    const auto spec = channel::CorrelationSpec::from_geometry({d_a, p.at(Param::v), p.at(Param::delta), f_c});
    r.sigma = channel::resolve_sigma(spec);
    r.mismatch_d = channel::mismatch_distance(spec);
    r.d_a = d_a;
    r.v = p.at(Param::v);
    r.delta = p.at(Param::delta);
    r.f_c = f_c;
    return r;
}

rate::RatePolicy policy_for(Regime r) {
    switch (r) {
        case Regime::pa_theorem1: return rate::RatePolicy::theorem1;
        case Regime::pa_theorem2: return rate::RatePolicy::theorem2_closed_form;
        default: return rate::RatePolicy::numeric_refined;
    }
}

rate::Method kernel_for(Regime r) {
    switch (r) {
        case Regime::pa_theorem1: return rate::Method::theorem1;
        case Regime::pa_theorem2: return rate::Method::theorem2;
        default: return rate::Method::numeric;
    }
}

void evaluate(SweepRow& row, Regime regime, const Resolved& in, const SweepSpec& spec, std::size_t point_index,
              bench::GenieCache& genie) {
    switch (regime) {
        case Regime::pa_theorem1:
        case Regime::pa_theorem2:
        case Regime::pa_numeric: {
            if (in.rate) {
                const auto f = rate::fixed_rate_performance(in.sigma, in.budget, in.length, *in.rate, kernel_for(regime));
                row.throughput = f.throughput;
                row.error_prob = f.error_prob;
                row.method = std::string(rate::to_string(kernel_for(regime)));
            } else {
                const auto a = rate::average_throughput(in.sigma, in.budget, in.length, policy_for(regime));
                row.throughput = a.throughput;
                row.error_prob = a.error_prob;
                row.rate_opt = a.mean_rate;
                row.method = std::string(rate::to_string(policy_for(regime)));
                if (!a.converged) row.method += "-unconverged";
            }
            break;
        }
        case Regime::no_csit: {
            if (in.rate) {
                const double eps = bench::no_csit_error(in.budget, in.length, *in.rate);
                row.throughput = *in.rate * (1.0 - eps);
                row.error_prob = eps;
                row.method = "exact";
            } else {
                const auto o = bench::no_csit_rate_opt(in.budget, in.length);
                row.throughput = o.throughput;
                row.error_prob = o.error_prob;
                row.rate_opt = o.rate;
                row.method = std::string(bench::to_string(o.path));
            }
            break;
        }
        case Regime::genie: {
            const auto g = genie.throughput(in.budget, in.length);
            row.throughput = g.throughput;
            row.error_prob = g.eps_hat;
            row.method = std::string(bench::to_string(g.path));
            break;
        }
        case Regime::monte_carlo: {
            const mc::McConfig cfg = spec.mc.value_or(mc::McConfig{});
            mc::McRatePolicy policy;
            policy.fixed_rate = in.rate;
            const auto m = mc::mc_average_throughput(in.sigma, in.budget, in.length, policy, cfg, point_index);
            row.throughput = m.throughput.mean;
            row.error_prob = m.error_prob.mean;
            row.mc_std_error = m.throughput.std_error;
            row.mc_error_std_error = m.error_prob.std_error;
            row.method = in.rate ? "mc-fixed-rate" : "mc-numeric-refined";
            break;
        }
    }
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& opts) {
    spec.validate();
    const std::size_t n_points = spec.point_count();
    const std::size_t n_regimes = spec.regimes.size();
    std::vector<SweepRow> rows(n_points * n_regimes);
    bench::GenieCache genie;

    auto work = [&](std::size_t p) {
        const std::map<Param, double> params = spec.point(p);
        std::optional<Resolved> in;
        std::string resolve_error;
        try {
            in = resolve(params);
        } catch (const std::exception& e) {
            resolve_error = e.what();
        }
        for (std::size_t k = 0; k < n_regimes; ++k) {
            SweepRow& row = rows[p * n_regimes + k];
            row.index = p * n_regimes + k;
            row.command = spec.command;
            row.regime = spec.regimes[k];
            row.snr_db = params.at(Param::snr_db);
            row.length = static_cast<int>(params.at(Param::length));
            if (!in) {
                row.error = resolve_error;
                continue;
            }
            row.sigma = in->sigma;
            row.mismatch_d = in->mismatch_d;
            row.d_a = in->d_a;
            row.v = in->v;
            row.delta = in->delta;
            row.f_c = in->f_c;
            row.rate = in->rate;
            try {
                evaluate(row, row.regime, *in, spec, p, genie);
            } catch (const std::exception& e) {
                row.throughput.reset();
                row.error_prob.reset();
                row.rate_opt.reset();
                row.mc_std_error.reset();
                row.mc_error_std_error.reset();
                row.error = e.what();
            }
        }
    };

    unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_points));
    if (threads <= 1) {
        for (std::size_t p = 0; p < n_points; ++p) work(p);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t p = next.fetch_add(1); p < n_points; p = next.fetch_add(1)) work(p);
            });
        }
    }
    return rows;
}

bool has_failures(const std::vector<SweepRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.error.empty(); });
}

}  // namespace pafbl::sweep
