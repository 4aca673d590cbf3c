// Copyright 2026 The LRPQ Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file Error.hpp
 * Exception types shared by every lrpq module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lrpq {

/// Base of all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad sizes, shape mismatches, unsupported options.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Invalid user input value (non-finite angle, length mismatch).
class InputError : public Error {
  public:
    using Error::Error;
};

/// Qubit or output index out of range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Loss of numerical integrity: non-unitary gate, NaN loss or gradient.
class NumericError : public Error {
  public:
    using Error::Error;
};

template <class E> inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw E(msg);
    }
}

} // namespace lrpq
