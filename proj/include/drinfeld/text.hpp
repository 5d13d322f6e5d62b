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

#include <string>
#include <string_view>

#include "drinfeld/ratk.hpp"

namespace drinfeld {

// Text forms.  Polynomials print as "t^3+2*t+1", highest degree first, with
// coefficients as residues mod p; over F_{p^e} coefficients are u-expressions
// such as "(u+1)*t^2+u*t+1".  Rational functions print as "num/den" with
// multi-term parts parenthesized.  Parsing accepts these forms and more
// general expressions built from integers, t, u, + - * / ^ and parentheses;
// printing a parsed value gives back the canonical string.

std::string format_fq(const Field& field, FqElem a);
std::string format_poly(const Poly& f);
std::string format_ratk(const RatK& x);

FqElem parse_fq(const FieldPtr& field, std::string_view text);
Poly parse_poly(const FieldPtr& field, std::string_view text);
RatK parse_ratk(const FieldPtr& field, std::string_view text);

/// Parses a monic F_p-polynomial in the variable u (a field modulus);
/// returns coefficients lowest degree first.
std::vector<FqElem> parse_modulus(std::uint32_t p, std::string_view text);

}  // namespace drinfeld
