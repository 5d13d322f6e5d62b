/*
   Copyright 2026 The drinfeld-heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Arithmetic precondition failures (division by zero, constant input where a
/// positive-degree polynomial is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed polynomial/rational strings and invalid configuration files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size bound (point degree, row count, orbit length) was hit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace drinfeld
