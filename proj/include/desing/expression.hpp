/*
   Copyright 2026 The desing Authors

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

#ifndef DESING_EXPRESSION_HPP
#define DESING_EXPRESSION_HPP

#include <string>
#include <string_view>

#include "desing/rational_function.hpp"

namespace desing {

/**
 * Parses
 *
 *   expr  := term (('+' | '-') term)*
 *   term  := unary (('*' | '/') unary)*
 *   unary := '-' unary | power
 *   power := atom ('^' uint)?
 *   atom  := uint | variable | '(' expr ')'
 *
 * so '^' binds tighter than a leading minus: -z^2 is -(z^2). Whitespace is
 * ignored. Throws ParseError with a 1-based position.
 */
RationalFunction parse_expression(std::string_view text, std::string_view variable = "z");

/// "a" or "a/b".
std::string to_string(const Rational& c);
/// Descending powers with explicit '*', e.g. "z^3-3*z^2+2*z".
std::string to_string(const Polynomial& p, std::string_view variable = "z");
/// "num/den" with parentheses around multi-term parts; reparses to the same value.
std::string to_string(const RationalFunction& f, std::string_view variable = "z");

}  // namespace desing

#endif  // DESING_EXPRESSION_HPP
