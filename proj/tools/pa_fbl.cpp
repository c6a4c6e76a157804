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

// pa-fbl: command-line runner for throughput / error-probability sweeps.
// Links only the C interface of libpafbl.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pafbl/pafbl.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

struct RunFlags {
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mc_samples;
    std::optional<unsigned> threads;
    bool gnuplot = false;
};

class Context {
public:
    Context() {
        if (pafbl_context_create(&ctx_) != PAFBL_OK) throw std::runtime_error("cannot create library context");
    }
    ~Context() { pafbl_context_destroy(ctx_); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
    pafbl_context* get() const { return ctx_; }

private:
    pafbl_context* ctx_ = nullptr;
};

int exit_code(pafbl_status s) {
    switch (s) {
        case PAFBL_OK: return kExitOk;
        case PAFBL_ERR_CONFIG: return kExitConfig;
        case PAFBL_PARTIAL: return kExitPartial;
        default: return kExitFailure;
    }
}

int report(const Context& ctx, pafbl_status s, const char* what) {
    std::fprintf(stderr, "pa-fbl: %s: %s: %s\n", what, pafbl_status_name(s), pafbl_last_error(ctx.get()));
    return exit_code(s);
}

bool parse_u64(const char* text, std::uint64_t& out) {
    if (text == nullptr || *text == '\0') return false;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(text, &end, 10);
    if (errno != 0 || *end != '\0' || text[0] == '-') return false;
    out = v;
    return true;
}

std::string dat_path_for(const std::string& csv) {
    if (csv == "-") return "pa-fbl.dat";
    const auto dot = csv.rfind('.');
    const auto slash = csv.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return csv.substr(0, dot) + ".dat";
    return csv + ".dat";
}

// Applies flags, runs, writes outputs; owns the sweep handle.
int run_sweep(const Context& ctx, pafbl_sweep* sweep, const RunFlags& flags) {
    struct Guard {
        pafbl_sweep* s;
        ~Guard() { pafbl_sweep_destroy(s); }
    } guard{sweep};

    std::optional<std::uint64_t> seed = flags.seed;
    if (!seed) {
        if (const char* env = std::getenv("PA_FBL_SEED")) {
            std::uint64_t v = 0;
            if (!parse_u64(env, v)) {
                std::fprintf(stderr, "pa-fbl: PA_FBL_SEED is not a non-negative integer: '%s'\n", env);
                return kExitConfig;
            }
            seed = v;
        }
    }
    pafbl_status s = PAFBL_OK;
    if (seed && (s = pafbl_sweep_set_seed(ctx.get(), sweep, *seed)) != PAFBL_OK) return report(ctx, s, "seed");
    if (flags.mc_samples && (s = pafbl_sweep_set_mc_samples(ctx.get(), sweep, *flags.mc_samples)) != PAFBL_OK) {
        return report(ctx, s, "mc-samples");
    }
    if (flags.threads && (s = pafbl_sweep_set_threads(ctx.get(), sweep, *flags.threads)) != PAFBL_OK) {
        return report(ctx, s, "threads");
    }

    std::string out = flags.out;
    if (out.empty()) out = pafbl_sweep_output_path(sweep);
    if (out.empty()) out = "-";

    pafbl_result* result = nullptr;
    const pafbl_status run = pafbl_sweep_run(ctx.get(), sweep, &result);
    if (run != PAFBL_OK && run != PAFBL_PARTIAL) return report(ctx, run, "run");

    s = pafbl_result_write_csv(ctx.get(), result, out.c_str());
    if (s == PAFBL_OK && flags.gnuplot) s = pafbl_result_write_gnuplot(ctx.get(), result, dat_path_for(out).c_str());
    const std::size_t failures = pafbl_result_failure_count(result);
    const std::size_t rows = pafbl_result_row_count(result);
    pafbl_result_destroy(result);
    if (s != PAFBL_OK) return report(ctx, s, "write");

    if (out != "-") std::fprintf(stderr, "pa-fbl: wrote %zu rows to %s\n", rows, out.c_str());
    if (run == PAFBL_PARTIAL) {
        std::fprintf(stderr, "pa-fbl: %zu of %zu rows failed; see the error column\n", failures, rows);
        return kExitPartial;
    }
    return kExitOk;
}

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
    cmd->add_option("--out", flags.out, "CSV output path ('-' for stdout); defaults to the config's output");
    cmd->add_option("--seed", flags.seed, "Monte Carlo master seed (overrides PA_FBL_SEED)");
    cmd->add_option("--mc-samples", flags.mc_samples, "Monte Carlo samples per point; adds the monte-carlo regime")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", flags.threads, "worker threads (0: all cores)");
    cmd->add_flag("--gnuplot", flags.gnuplot, "also write a gnuplot .dat file next to the CSV");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pa-fbl: finite block-length throughput of predictor-antenna links"};
    app.set_version_flag("--version", std::string(pafbl_version()));
    app.require_subcommand(1);

    RunFlags flags;

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a sweep described by a config file");
    run->add_option("config", config_path, "config file")->required();
    add_run_flags(run, flags);

    std::string preset_name;
    bool print_config = false;
    bool list = false;
    auto* preset = app.add_subcommand("preset", "Run one of the shipped figure presets");
    preset->add_option("name", preset_name, "fig2 ... fig8");
    preset->add_flag("--print-config", print_config, "print the preset's config document and exit");
    preset->add_flag("--list", list, "list preset names and exit");
    add_run_flags(preset, flags);

    double snr_db = 0.0;
    double sigma = 0.0;
    int length = 0;
    std::optional<double> rate;
    std::string regime;
    auto* point = app.add_subcommand("point", "Evaluate a single operating point");
    point->add_option("--snr-db", snr_db, "SNR in dB")->required();
    point->add_option("--sigma", sigma, "mismatch parameter in [0, 1]")->required();
    point->add_option("--length", length, "codeword length in channel uses")->required();
    point->add_option("--rate", rate, "fixed rate in nats per channel use (default: adaptive)");
    point->add_option("--regime", regime, "pa-theorem1 | pa-theorem2 | pa-numeric | no-csit | genie | monte-carlo")
        ->required();
    add_run_flags(point, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        Context ctx;
        pafbl_sweep* sweep = nullptr;
        pafbl_status s = PAFBL_OK;

        if (*run) {
            s = pafbl_sweep_from_file(ctx.get(), config_path.c_str(), &sweep);
            if (s != PAFBL_OK) return report(ctx, s, config_path.c_str());
        } else if (*preset) {
            if (list) {
                std::size_t n = 0;
                pafbl_preset_count(&n);
                for (std::size_t i = 0; i < n; ++i) {
                    const char* name = nullptr;
                    pafbl_preset_name(i, &name);
                    std::printf("%s\n", name);
                }
                return kExitOk;
            }
            if (preset_name.empty()) {
                std::fprintf(stderr, "pa-fbl: preset: a name is required (see --list)\n");
                return kExitConfig;
            }
            if (print_config) {
                const char* text = nullptr;
                s = pafbl_preset_text(ctx.get(), preset_name.c_str(), &text);
                if (s != PAFBL_OK) return report(ctx, s, "preset");
                std::fputs(text, stdout);
                return kExitOk;
            }
            s = pafbl_sweep_from_preset(ctx.get(), preset_name.c_str(), &sweep);
            if (s != PAFBL_OK) return report(ctx, s, "preset");
        } else {
            const double r = rate ? *rate : std::numeric_limits<double>::quiet_NaN();
            s = pafbl_sweep_point(ctx.get(), snr_db, sigma, length, r, regime.c_str(), &sweep);
            if (s != PAFBL_OK) return report(ctx, s, "point");
            if (flags.out.empty()) flags.out = "-";
        }
        return run_sweep(ctx, sweep, flags);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pa-fbl: %s\n", e.what());
        return kExitFailure;
    }
}
