/*
 * Copyright 2026 The qsplit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QSPLIT_ERRORS_HPP
#define QSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsplit {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or contract-violating input (bad field parameters, reducible
/// extension equation, wrong JSON shape, ...). CLI exit code 2.
class InvalidInputError : public Error {
  public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// An operation would enumerate more elements than the configured guard
/// allows. CLI exit code 3.
class SizeGuardError : public Error {
  public:
    explicit SizeGuardError(const std::string& what) : Error(what) {}
};

inline constexpr long long kDefaultSizeGuard = 1LL << 16;
inline constexpr unsigned long long kDefaultFactorSeed = 0xC0FFEE;

} // namespace qsplit

#endif // QSPLIT_ERRORS_HPP
