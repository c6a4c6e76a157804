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
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <yaml-cpp/yaml.h>

#include "pafbl/error.hpp"
#include "pafbl/sweep.hpp"

namespace pafbl::sweep {

namespace {

int line_of(const YAML::Node& n) { return n.Mark().line >= 0 ? n.Mark().line + 1 : -1; }

[[noreturn]] void fail(const YAML::Node& n, const std::string& msg) { throw ConfigError(msg, line_of(n)); }

std::string scalar(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) fail(n, what + " must be a scalar");
    return n.Scalar();
}

double number(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) fail(n, what + " must be a number");
    try {
        return n.as<double>();
    } catch (const YAML::BadConversion&) {
        fail(n, what + ": '" + n.Scalar() + "' is not a number");
    }
}

std::uint64_t unsigned_integer(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) fail(n, what + " must be a non-negative integer");
    const std::string& s = n.Scalar();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        fail(n, what + ": '" + s + "' is not a non-negative integer");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(n, what + ": '" + s + "' is out of range");
    }
}

// Iterates a mapping in document order, rejecting repeated keys.
template <typename F>
void for_each_key(const YAML::Node& map, const std::string& what, F&& f) {
    if (!map.IsMap()) fail(map, what + " must be a mapping");
    std::set<std::string> seen;
    for (const auto& kv : map) {
        const std::string key = scalar(kv.first, what + " key");
        if (!seen.insert(key).second) fail(kv.first, "duplicate key '" + key + "' in " + what);
        f(key, kv.first, kv.second);
    }
}

Param param_named(const YAML::Node& key_node, const std::string& key) {
    const auto p = parse_param(key);
    if (!p) fail(key_node, "unknown parameter '" + key + "'");
    return *p;
}

std::vector<double> axis_values(const YAML::Node& n, const std::string& name) {
    std::vector<double> out;
    if (n.IsSequence()) {
        for (const auto& item : n) out.push_back(number(item, "axis " + name));
    } else if (n.IsMap()) {
        std::optional<double> from, to, step;
        std::optional<std::uint64_t> count;
        for_each_key(n, "range of axis " + name, [&](const std::string& key, const YAML::Node& k, const YAML::Node& v) {
            if (key == "from") from = number(v, "from");
            else if (key == "to") to = number(v, "to");
            else if (key == "step") step = number(v, "step");
            else if (key == "count") count = unsigned_integer(v, "count");
            else fail(k, "unknown key '" + key + "' in range (expected from, to, step or count)");
        });
        if (!from || !to) fail(n, "range of axis " + name + " needs both from and to");
        if (step.has_value() == count.has_value()) fail(n, "range of axis " + name + " needs exactly one of step, count");
        if (step) {
            if (!(*step > 0.0)) fail(n, "range step must be positive");
            const double span = (*to - *from) / *step;
            if (span < 0.0) fail(n, "range of axis " + name + " has to < from");
            const auto m = static_cast<std::uint64_t>(std::floor(span + 1e-9));
            if (m > 1000000) fail(n, "range of axis " + name + " has too many points");
            for (std::uint64_t i = 0; i <= m; ++i) out.push_back(*from + static_cast<double>(i) * *step);
        } else {
            if (*count == 0) fail(n, "range count must be positive");
            if (*count > 1000000) fail(n, "range of axis " + name + " has too many points");
            if (*count == 1) {
                out.push_back(*from);
            } else {
                for (std::uint64_t i = 0; i < *count; ++i) {
                    out.push_back(*from + (*to - *from) * static_cast<double>(i) / static_cast<double>(*count - 1));
                }
            }
        }
    } else {
        out.push_back(number(n, "axis " + name));
    }
    if (out.empty()) fail(n, "axis " + name + " has no values");
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (!(out[i] > out[i - 1])) fail(n, "axis " + name + " must be strictly increasing");
    }
    return out;
}

}  // namespace

SweepSpec parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ConfigError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : -1);
    }
    if (!root.IsDefined() || root.IsNull()) throw ConfigError("empty configuration document");

    SweepSpec spec;
    bool have_command = false;
    bool have_regimes = false;
    YAML::Node regimes_node;
    std::set<Param> axis_params;

    for_each_key(root, "configuration", [&](const std::string& key, const YAML::Node& k, const YAML::Node& v) {
        if (key == "command") {
            const std::string c = scalar(v, "command");
            const auto cmd = parse_command(c);
            if (!cmd) fail(v, "unknown command '" + c + "'");
            spec.command = *cmd;
            have_command = true;
        } else if (key == "axes") {
            if (v.IsNull()) return;
            if (!v.IsSequence()) fail(v, "axes must be a sequence of single-key mappings");
            for (const auto& item : v) {
                if (!item.IsMap() || item.size() != 1) fail(item, "each axis must be a single-key mapping");
                const auto kv = *item.begin();
                const std::string name = scalar(kv.first, "axis name");
                const Param p = param_named(kv.first, name);
                if (!axis_params.insert(p).second) fail(kv.first, "duplicate axis " + name);
                spec.axes.push_back({p, axis_values(kv.second, name)});
            }
        } else if (key == "fixed") {
            if (v.IsNull()) return;
            for_each_key(v, "fixed", [&](const std::string& name, const YAML::Node& pk, const YAML::Node& pv) {
                const Param p = param_named(pk, name);
                if (axis_params.count(p)) fail(pk, "parameter " + name + " is bound both as axis and fixed");
                spec.fixed[p] = number(pv, name);
            });
        } else if (key == "regimes") {
            regimes_node = v;
            have_regimes = true;
            if (!v.IsSequence()) fail(v, "regimes must be a sequence");
            for (const auto& item : v) {
                const std::string r = scalar(item, "regime");
                const auto reg = parse_regime(r);
                if (!reg) fail(item, "unknown regime '" + r + "'");
                spec.regimes.push_back(*reg);
            }
        } else if (key == "output") {
            spec.output_path = scalar(v, "output");
        } else if (key == "mc") {
            mc::McConfig cfg;
            for_each_key(v, "mc", [&](const std::string& name, const YAML::Node& mk, const YAML::Node& mv) {
                if (name == "samples") cfg.samples = unsigned_integer(mv, "mc.samples");
                else if (name == "seed") cfg.master_seed = unsigned_integer(mv, "mc.seed");
                else if (name == "batch") cfg.batch = unsigned_integer(mv, "mc.batch");
                else fail(mk, "unknown key '" + name + "' in mc (expected samples, seed, batch)");
            });
            spec.mc = cfg;
        } else {
            fail(k, "unknown key '" + key + "'");
        }
    });

    if (!have_command) throw ConfigError("missing required key 'command'", line_of(root));
    if (!have_regimes) throw ConfigError("missing required key 'regimes'", line_of(root));
    if (spec.regimes.empty()) fail(regimes_node, "regimes must list at least one regime");
    spec.validate();
    return spec;
}

SweepSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace pafbl::sweep
