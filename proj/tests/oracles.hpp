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

#ifndef DESING_TESTS_ORACLES_HPP
#define DESING_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "desing/matrix.hpp"
#include "desing/system.hpp"

// Slow, independent reference computations. None of them call into the
// algorithms they are used to check.
namespace oracle {

using desing::Polynomial;
using desing::Rational;
using desing::RationalFunction;
using desing::RationalMatrix;

using NumericMatrix = std::vector<std::vector<Rational>>;

/// Sum over all permutations.
RationalFunction leibniz_det(const RationalMatrix& m);

/// Sylvester matrix of a and b as constant entries; deg a + deg b >= 1.
RationalMatrix sylvester(const Polynomial& a, const Polynomial& b);

/// Horner evaluation of a rational function; nullopt at a pole.
std::optional<Rational> eval(const RationalFunction& f, const Rational& x);
std::optional<NumericMatrix> eval(const RationalMatrix& m, const Rational& x);

/// f(z + k) == g, checked at deg + 2 sample points after clearing denominators.
bool is_shift(const RationalFunction& f, long k, const RationalFunction& g);

/// Textbook Euclid on coefficient vectors, made monic.
Polynomial euclid_gcd(const Polynomial& a, const Polynomial& b);

/// Number of times q divides num minus the number of times it divides den.
int order_by_division(const RationalFunction& f, const Polynomial& q);

NumericMatrix multiply(const NumericMatrix& a, const NumericMatrix& b);
bool is_zero(const NumericMatrix& m);

/**
 * For q = z - a and A~ = q^n A with n = -ord_q(A): the smallest k in [1, k_max]
 * with A~(a) A~(a-1) ... A~(a-k) == 0, evaluated pointwise.
 */
std::optional<int> factorial_index_linear(const RationalMatrix& a, const Rational& root, int k_max);

/// Every entry is a polynomial (denominator constant).
bool is_polynomial(const RationalMatrix& m);

}  // namespace oracle

#endif  // DESING_TESTS_ORACLES_HPP
