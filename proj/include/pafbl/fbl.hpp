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

#ifndef PAFBL_FBL_HPP
#define PAFBL_FBL_HPP

namespace pafbl {

/// Codeword length L (channel uses) and rate R (nats per channel use).
struct CodeSpec {
    int block_length = 1;
    double rate_npcu = 0.0;

    void validate() const;
    double info_nats() const noexcept { return rate_npcu * block_length; }
};

/// Noise-normalized transmit power.
class LinkBudget {
public:
    LinkBudget() = default;
    static LinkBudget from_linear(double power);
    static LinkBudget from_db(double snr_db);

    double power() const noexcept { return power_; }
    double snr_db() const;

private:
    explicit LinkBudget(double p) : power_(p) {}
    double power_ = 1.0;
};

namespace fbl {

/// Normal-approximation block error probability at gain g.
double fbl_error(double g, const LinkBudget& budget, const CodeSpec& code);

/// Threshold alpha = (e^R - 1) / P and slope mu of the linearized error curve.
struct SemiLinearApprox {
    double alpha = 0.0;
    double mu = 0.0;

    double lower() const noexcept { return alpha - 0.5 / mu; }
    double upper() const noexcept { return alpha + 0.5 / mu; }
};

SemiLinearApprox make_semilinear(const CodeSpec& code, const LinkBudget& budget);

double semilinear_q(double g, const SemiLinearApprox& approx);

}  // namespace fbl
}  // namespace pafbl

#endif
