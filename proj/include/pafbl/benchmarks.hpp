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

#ifndef PAFBL_BENCHMARKS_HPP
#define PAFBL_BENCHMARKS_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string_view>

#include "pafbl/fbl.hpp"

// Reference regimes: open-loop transmission without CSIT, and the genie-aided
// link that knows g exactly.

namespace pafbl::bench {

struct NoCsitThroughput {
    double exact = 0.0;        // R (1 - int e^-x Q(...) dx), authoritative
    double approx = 0.0;       // semi-linear closed form with the dropped term
    double relative_gap = 0.0; // |approx - exact| / exact (0 when exact == 0)
};

NoCsitThroughput no_csit_throughput(const LinkBudget& budget, int block_length, double rate);

/// Average error of the fixed-rate open-loop link.
double no_csit_error(const LinkBudget& budget, int block_length, double rate);

enum class RatePath { lambert_w, numeric };
std::string_view to_string(RatePath p);

struct NoCsitRateOpt {
    double rate = 0.0;
    double throughput = 0.0;
    double error_prob = 0.0;
    RatePath path = RatePath::numeric;
    double lambert_argument = 0.0;  // P / (1 - sqrt(L / 2 pi))
};

NoCsitRateOpt no_csit_rate_opt(const LinkBudget& budget, int block_length);

struct InstantRate {
    double rate = 0.0;
    bool clamped = false;
};

/// log(1+gP) - Q^-1(eps) sqrt(1 - (1+gP)^-2) / sqrt(L), clamped at zero.
InstantRate genie_rate_instant(double g, const LinkBudget& budget, int block_length, double eps_hat);

double genie_r_infinity(const LinkBudget& budget);
double genie_zeta(const LinkBudget& budget);

enum class EpsPath { closed_form, numeric_fallback };
std::string_view to_string(EpsPath p);

struct GenieEps {
    double eps_hat = 0.0;                    // selected target (closed form when defined)
    std::optional<double> closed_form;
    double numeric = 0.0;                    // argmax of the exact objective
    EpsPath path = EpsPath::closed_form;
};

GenieEps genie_eps_opt(const LinkBudget& budget, int block_length);

/// (R_inf - Q^-1(eps) zeta / sqrt L)(1 - eps)
double genie_objective(double r_infinity, double zeta, int block_length, double eps_hat);

struct GenieResult {
    double eps_hat = 0.0;
    double r_infinity = 0.0;
    double zeta = 0.0;
    double throughput = 0.0;
    double numeric_eps_hat = 0.0;
    double numeric_throughput = 0.0;
    EpsPath path = EpsPath::closed_form;
};

GenieResult genie_throughput(const LinkBudget& budget, int block_length);

/// R_inf and zeta memoized per transmit power. Entries are written once under the lock.
class GenieCache {
public:
    struct Entry {
        double r_infinity;
        double zeta;
    };
    Entry get(const LinkBudget& budget);
    GenieResult throughput(const LinkBudget& budget, int block_length);

private:
    std::mutex mutex_;
    std::map<double, Entry> entries_;
};

}  // namespace pafbl::bench

#endif
