// SPDX-License-Identifier: Apache-2.0
//
// sparsefb: achievable rates of sparse wideband channels with one-bit feedback
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

#pragma once

#include <stdexcept>
#include <string>

namespace sparsefb
{

/// Numeric precondition violated (non-positive SNR, sub-unit dimension product, ...).
class DomainError : public std::domain_error
{
public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Parameters fall outside the validity region of a piecewise bound.
class RegimeError : public DomainError
{
public:
    explicit RegimeError(const std::string &what) : DomainError(what) {}
};

/// Malformed or inconsistent user arguments (missing A, unknown output name, ...).
class ArgumentError : public std::invalid_argument
{
public:
    explicit ArgumentError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace sparsefb
