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

#ifndef DESING_TESTS_HELPERS_HPP
#define DESING_TESTS_HELPERS_HPP

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "desing/expression.hpp"
#include "desing/matrix.hpp"
#include "desing/system.hpp"

namespace testing {

inline desing::RationalFunction F(const std::string& text) { return desing::parse_expression(text); }

/// Polynomial from an expression; the expression must not have a denominator.
inline desing::Polynomial P(const std::string& text) {
    const desing::RationalFunction f = desing::parse_expression(text);
    if (!f.is_polynomial()) throw std::invalid_argument("not a polynomial: " + text);
    return f.numerator() * desing::Polynomial(desing::Rational(1) / f.denominator().leading());
}

inline desing::RationalMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    desing::RationalMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const char* e : r) m(i, j++) = F(e);
        ++i;
    }
    return m;
}

inline desing::DifferenceSystem example1() { return desing::DifferenceSystem(M({{"0", "1"}, {"(-2*(z+1))/(z-2)", "3*(z-1)/(z-2)"}})); }
inline desing::DifferenceSystem blocked() { return desing::DifferenceSystem(M({{"(z+1)^2/z", "0"}, {"0", "1/(z+1)"}})); }
inline desing::DifferenceSystem rank_example() {
    return desing::DifferenceSystem(M({{"z*(z+1)", "0", "0"}, {"0", "(z+1)/z", "0"}, {"0", "0", "1/z"}}));
}

inline std::string data_path(const std::string& name) { return std::string(DESING_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testing

#endif  // DESING_TESTS_HELPERS_HPP
