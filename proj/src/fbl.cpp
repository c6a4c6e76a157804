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

#include "pafbl/fbl.hpp"

#include <cmath>
#include <numbers>

#include "pafbl/error.hpp"
#include "pafbl/specfun.hpp"

namespace pafbl {

void CodeSpec::validate() const {
    if (block_length < 1) throw DomainError("CodeSpec: block length must be >= 1");
    if (!(rate_npcu >= 0.0) || !std::isfinite(rate_npcu)) throw DomainError("CodeSpec: rate must be finite and >= 0");
}

LinkBudget LinkBudget::from_linear(double power) {
    if (!(power > 0.0) || !std::isfinite(power)) throw DomainError("LinkBudget: power must be positive and finite");
    return LinkBudget(power);
}

LinkBudget LinkBudget::from_db(double snr_db) {
    if (!std::isfinite(snr_db)) throw DomainError("LinkBudget: SNR must be finite");
    return from_linear(std::pow(10.0, snr_db / 10.0));
}

double LinkBudget::snr_db() const { return 10.0 * std::log10(power_); }

namespace fbl {

double fbl_error(double g, const LinkBudget& budget, const CodeSpec& code) {
    code.validate();
    if (!(g >= 0.0)) throw DomainError("fbl_error: gain must be non-negative");
    const double rate = code.rate_npcu;
    if (rate == 0.0) return 0.0;
    if (g == 0.0) return 1.0;
    if (std::isinf(g)) return 0.0;
    const double snr = g * budget.power();
    const double capacity = std::log1p(snr);
    // sqrt(1 - (1+x)^-2) = sqrt(x (2 + x)) / (1 + x)
    const double dispersion = std::sqrt(snr * (2.0 + snr)) / (1.0 + snr);
    const double arg = std::sqrt(static_cast<double>(code.block_length)) * (capacity - rate) / dispersion;
    return specfun::gaussian_q(arg);
}

SemiLinearApprox make_semilinear(const CodeSpec& code, const LinkBudget& budget) {
    code.validate();
    if (code.rate_npcu == 0.0) throw DomainError("make_semilinear: slope diverges at zero rate");
    const double p = budget.power();
    const double r = code.rate_npcu;
    SemiLinearApprox out;
    out.alpha = std::expm1(r) / p;
    out.mu = std::sqrt(code.block_length * p * p / (2.0 * std::numbers::pi * std::expm1(2.0 * r)));
    return out;
}

double semilinear_q(double g, const SemiLinearApprox& approx) {
    if (g < approx.lower()) return 1.0;
    if (g > approx.upper()) return 0.0;
    return 0.5 - approx.mu * (g - approx.alpha);
}

}  // namespace fbl
}  // namespace pafbl
