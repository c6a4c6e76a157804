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

#include <array>
#include <string>
#include <utility>

#include "pafbl/error.hpp"
#include "pafbl/sweep.hpp"

namespace pafbl::sweep {

namespace {

constexpr std::string_view kFig2 = R"(# Optimal average throughput versus SNR.
command: sweep-snr
axes:
  - snr_db: {from: 0, to: 30, step: 1}
fixed:
  sigma: 0.5
  length: 300
regimes: [pa-theorem1, pa-theorem2, no-csit, genie]
output: fig2.csv
)";

constexpr std::string_view kFig3 = R"(# Optimal average throughput versus codeword length.
command: sweep-length
axes:
  - length: {from: 100, to: 1000, step: 50}
fixed:
  sigma: 0.6
  snr_db: 15
regimes: [pa-theorem1, pa-theorem2, no-csit, genie]
output: fig3.csv
)";

constexpr std::string_view kFig4 = R"(# Average error probability at the adaptive rate versus codeword length.
command: error-vs-length
axes:
  - length: {from: 100, to: 1000, step: 50}
fixed:
  sigma: 0.4
  snr_db: 15
regimes: [pa-theorem1, pa-theorem2, pa-numeric]
output: fig4.csv
)";

constexpr std::string_view kFig5 = R"(# Optimal average throughput versus speed for three antenna separations.
command: sweep-speed
axes:
  - v: {from: 0, to: 60, step: 0.5}
  - d_a_lambda: [1, 1.5, 2]
fixed:
  delta: 0.005
  f_c: 2.68e9
  snr_db: 25
  length: 300
regimes: [pa-theorem1, pa-theorem2, no-csit, genie]
output: fig5.csv
)";

constexpr std::string_view kFig6 = R"(# Average throughput at a fixed transmit rate.
command: sweep-rate
axes:
  - rate: {from: 0.05, to: 8, step: 0.05}
  - snr_db: [15, 18]
  - length: [100, 300]
fixed:
  sigma: 0.5
regimes: [pa-theorem1, pa-theorem2, pa-numeric]
output: fig6.csv
)";

constexpr std::string_view kFig7 = R"(# Average error probability at the adaptive rate versus speed.
command: error-vs-speed
axes:
  - v: {from: 0, to: 60, step: 0.5}
  - snr_db: [15, 25]
fixed:
  d_a_lambda: 1.5
  delta: 0.005
  f_c: 2.68e9
  length: 300
regimes: [pa-theorem1, pa-theorem2, pa-numeric]
output: fig7.csv
)";

constexpr std::string_view kFig8 = R"(# Average error probability at a fixed transmit rate.
command: sweep-rate
axes:
  - rate: {from: 0.05, to: 8, step: 0.05}
  - snr_db: [15, 18]
  - length: [100, 300]
fixed:
  sigma: 0.3
regimes: [pa-theorem1, pa-theorem2, pa-numeric]
output: fig8.csv
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kPresets{{
    {"fig2", kFig2},
    {"fig3", kFig3},
    {"fig4", kFig4},
    {"fig5", kFig5},
    {"fig6", kFig6},
    {"fig7", kFig7},
    {"fig8", kFig8},
}};

}  // namespace

std::vector<std::string_view> preset_names() {
    std::vector<std::string_view> out;
    for (const auto& [name, text] : kPresets) out.push_back(name);
    return out;
}

std::string_view preset_text(std::string_view name) {
    for (const auto& [n, text] : kPresets) {
        if (n == name) return text;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

SweepSpec preset(std::string_view name) { return parse_config(preset_text(name)); }

}  // namespace pafbl::sweep
