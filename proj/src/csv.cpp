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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "pafbl/error.hpp"
#include "pafbl/sweep.hpp"

namespace pafbl::sweep {

const char* const kCsvHeader =
    "index,command,regime,snr_db,sigma,mismatch_d,d_a,v,v_kmh,delta,f_c,length,rate,throughput,error_prob,"
    "rate_opt,method,mc_std_error,mc_error_std_error,error";

namespace {

constexpr const char* kMissing = "NA";

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : kMissing; }

std::string quoted(const std::string& s) {
    if (s.empty()) return kMissing;
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_record(std::istream& in, bool& ok) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    ok = false;
    for (int ch = in.get(); ch != EOF; ch = in.get()) {
        any = true;
        const char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            fields.push_back(std::move(field));
            ok = true;
            return fields;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (any) {
        fields.push_back(std::move(field));
        ok = true;
    }
    return fields;
}

std::optional<double> parse_opt(const std::string& s, const char* column) {
    if (s == kMissing) return std::nullopt;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw IoError(std::string("csv: bad number in column ") + column + ": " + s);
    return x;
}

double parse_req(const std::string& s, const char* column) {
    const auto x = parse_opt(s, column);
    if (!x) throw IoError(std::string("csv: missing value in column ") + column);
    return *x;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.index << ',' << to_string(r.command) << ',' << to_string(r.regime) << ',' << format_number(r.snr_db)
            << ',' << opt_number(r.sigma) << ','
            << opt_number(r.mismatch_d) << ',' << opt_number(r.d_a) << ',' << opt_number(r.v) << ','
            << opt_number(r.v_kmh()) << ',' << opt_number(r.delta) << ',' << opt_number(r.f_c) << ',' << r.length
            << ',' << opt_number(r.rate) << ',' << opt_number(r.throughput) << ',' << opt_number(r.error_prob) << ','
            << opt_number(r.rate_opt) << ',' << quoted(r.method) << ',' << opt_number(r.mc_std_error) << ','
            << opt_number(r.mc_error_std_error) << ',' << quoted(r.error) << '\n';
    }
}

void write_csv_file(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + path);
    write_csv(rows, out);
    out.flush();
    if (!out) throw IoError("write failed for output file " + path);
}

std::vector<SweepRow> read_csv(std::istream& in) {
    bool ok = false;
    const auto header = split_record(in, ok);
    std::string joined;
    for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
    if (!ok || joined != kCsvHeader) throw IoError("csv: unexpected header");

    std::vector<SweepRow> rows;
    for (;;) {
        auto f = split_record(in, ok);
        if (!ok) break;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != header.size()) throw IoError("csv: wrong field count in row " + std::to_string(rows.size()));
        SweepRow r;
        r.index = static_cast<std::size_t>(parse_req(f[0], "index"));
        const auto cmd = parse_command(f[1]);
        const auto reg = parse_regime(f[2]);
        if (!cmd || !reg) throw IoError("csv: bad command or regime in row " + std::to_string(rows.size()));
        r.command = *cmd;
        r.regime = *reg;
        r.snr_db = parse_req(f[3], "snr_db");
        r.sigma = parse_opt(f[4], "sigma");
        r.mismatch_d = parse_opt(f[5], "mismatch_d");
        r.d_a = parse_opt(f[6], "d_a");
        r.v = parse_opt(f[7], "v");
        r.delta = parse_opt(f[9], "delta");
        r.f_c = parse_opt(f[10], "f_c");
        r.length = static_cast<int>(parse_req(f[11], "length"));
        r.rate = parse_opt(f[12], "rate");
        r.throughput = parse_opt(f[13], "throughput");
        r.error_prob = parse_opt(f[14], "error_prob");
        r.rate_opt = parse_opt(f[15], "rate_opt");
        r.method = f[16] == kMissing ? "" : f[16];
        r.mc_std_error = parse_opt(f[17], "mc_std_error");
        r.mc_error_std_error = parse_opt(f[18], "mc_error_std_error");
        r.error = f[19] == kMissing ? "" : f[19];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_gnuplot(const std::vector<SweepRow>& rows, const SweepSpec& spec, std::ostream& out) {
    const std::size_t n_regimes = spec.regimes.size();
    const auto primary = primary_axis(spec.command);
    const std::string x_name = primary ? std::string(to_string(*primary)) : "point";
    out << "# columns: " << x_name << " throughput error_prob rate_opt mc_std_error\n";
    out << "# missing values are written as " << kMissing << '\n';

    bool first_block = true;
    for (std::size_t k = 0; k < n_regimes; ++k) {
        // group points by the non-primary axis values, in first-appearance order
        std::vector<std::string> labels;
        std::map<std::string, std::vector<std::size_t>> groups;
        for (const SweepRow& r : rows) {
            if (r.regime != spec.regimes[k]) continue;
            const std::size_t p = r.index / n_regimes;
            const auto params = spec.point(p);
            std::string label;
            for (const Axis& a : spec.axes) {
                if (primary && a.param == *primary) continue;
                label += " " + std::string(to_string(a.param)) + "=" + format_number(params.at(a.param));
            }
            auto [it, inserted] = groups.try_emplace(label);
            if (inserted) labels.push_back(label);
            it->second.push_back(&r - rows.data());
        }
        for (const std::string& label : labels) {
            if (!first_block) out << "\n\n";
            first_block = false;
            out << "# regime=" << to_string(spec.regimes[k]) << label << '\n';
            for (std::size_t i : groups[label]) {
                const SweepRow& r = rows[i];
                const double x = primary ? spec.point(r.index / n_regimes).at(*primary)
                                         : static_cast<double>(r.index / n_regimes);
                out << format_number(x) << ' ' << opt_number(r.throughput) << ' ' << opt_number(r.error_prob) << ' '
                    << opt_number(r.rate_opt) << ' ' << opt_number(r.mc_std_error) << '\n';
            }
        }
    }
}

void write_gnuplot_file(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + path);
    write_gnuplot(rows, spec, out);
    out.flush();
    if (!out) throw IoError("write failed for output file " + path);
}

}  // namespace pafbl::sweep
