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

#ifndef DESING_TESTS_PRINTERS_HPP
#define DESING_TESTS_PRINTERS_HPP

#include "desing/expression.hpp"
#include "desing/matrix.hpp"
#include "doctest.h"

// Readable failure messages for the library's value types.
namespace doctest {

template <>
struct StringMaker<desing::Polynomial> {
    static String convert(const desing::Polynomial& p) { return desing::to_string(p).c_str(); }
};

template <>
struct StringMaker<desing::RationalFunction> {
    static String convert(const desing::RationalFunction& f) { return desing::to_string(f).c_str(); }
};

template <>
struct StringMaker<desing::Rational> {
    static String convert(const desing::Rational& c) { return desing::to_string(c).c_str(); }
};

template <>
struct StringMaker<desing::RationalMatrix> {
    static String convert(const desing::RationalMatrix& m) {
        std::string s = "(";
        for (std::size_t i = 0; i < m.size(); ++i) {
            s += i ? ", (" : "(";
            for (std::size_t j = 0; j < m.size(); ++j) s += (j ? ", " : "") + desing::to_string(m(i, j));
            s += ")";
        }
        return (s + ")").c_str();
    }
};

template <>
struct StringMaker<desing::PolynomialMatrix> {
    static String convert(const desing::PolynomialMatrix& m) { return StringMaker<desing::RationalMatrix>::convert(desing::lift(m)); }
};

}  // namespace doctest

#endif  // DESING_TESTS_PRINTERS_HPP
