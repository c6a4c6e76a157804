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

#ifndef PAFBL_SWEEP_HPP
#define PAFBL_SWEEP_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pafbl/montecarlo.hpp"

// Experiment runner: grid specification, config parsing, figure presets,
// parallel evaluation and CSV / gnuplot output.

namespace pafbl::sweep {

enum class Command { sweep_snr, sweep_length, sweep_speed, sweep_rate, error_vs_length, error_vs_speed, point };
enum class Regime { pa_theorem1, pa_theorem2, pa_numeric, no_csit, genie, monte_carlo };
enum class Param { snr_db, sigma, length, rate, v, d_a, d_a_lambda, delta, f_c };

std::string_view to_string(Command c);
std::string_view to_string(Regime r);
std::string_view to_string(Param p);
std::optional<Command> parse_command(std::string_view s);
std::optional<Regime> parse_regime(std::string_view s);
std::optional<Param> parse_param(std::string_view s);

/// Axis the command sweeps; nullopt for `point`.
std::optional<Param> primary_axis(Command c);

struct Axis {
    Param param;
    std::vector<double> values;  // strictly increasing
};

struct SweepSpec {
    Command command = Command::point;
    std::vector<Axis> axes;          // first axis varies slowest
    std::map<Param, double> fixed;
    std::vector<Regime> regimes;
    std::string output_path;
    std::optional<mc::McConfig> mc;

    /// Throws ConfigError (line -1) on any structural violation.
    void validate() const;
    std::size_t point_count() const;
    /// Parameter values of grid point `index` in lexicographic axis order, merged with `fixed`.
    std::map<Param, double> point(std::size_t index) const;
};

struct SweepRow {
    std::size_t index = 0;
    Command command = Command::point;
    Regime regime = Regime::pa_theorem1;
    double snr_db = 0.0;
    std::optional<double> sigma;  // unset when geometry resolution failed
    std::optional<double> mismatch_d;
    std::optional<double> d_a;
    std::optional<double> v;
    std::optional<double> delta;
    std::optional<double> f_c;
    int length = 0;
    std::optional<double> rate;  // fixed rate, when the sweep uses one
    std::optional<double> throughput;
    std::optional<double> error_prob;
    std::optional<double> rate_opt;
    std::string method;
    std::optional<double> mc_std_error;
    std::optional<double> mc_error_std_error;
    std::string error;  // empty on success

    std::optional<double> v_kmh() const {
        if (!v) return std::nullopt;
        return *v * 3.6;
    }
};

struct RunOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Rows ordered by grid point, then by the spec's regime order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& opts = {});

bool has_failures(const std::vector<SweepRow>& rows);

// Config documents (YAML subset, grammar in docs/config.md).
SweepSpec parse_config(std::string_view text);
SweepSpec load_config(const std::string& path);

// Figure presets.
std::vector<std::string_view> preset_names();
/// Config document of a preset; throws ConfigError for unknown names.
std::string_view preset_text(std::string_view name);
SweepSpec preset(std::string_view name);

// CSV.
extern const char* const kCsvHeader;
std::string format_number(double x);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> read_csv(std::istream& in);

/// Whitespace-separated columns, one gnuplot data block per regime.
void write_gnuplot(const std::vector<SweepRow>& rows, const SweepSpec& spec, std::ostream& out);
void write_gnuplot_file(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path);

}  // namespace pafbl::sweep

#endif
