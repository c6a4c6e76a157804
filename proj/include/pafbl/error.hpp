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

#ifndef PAFBL_ERROR_HPP
#define PAFBL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pafbl {

// Argument outside the mathematical domain of a kernel.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation not applicable to the current object state (e.g. geometry query on a direct-sigma spec).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// sigma in {0, 1}: the conditional density does not exist, callers must branch.
class DegenerateDistributionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Iterative method or quadrature failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pafbl

#endif
