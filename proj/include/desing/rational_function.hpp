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

#ifndef DESING_RATIONAL_FUNCTION_HPP
#define DESING_RATIONAL_FUNCTION_HPP

#include "desing/polynomial.hpp"

namespace desing {

/**
 * Element of Q(z) kept in lowest terms with a monic denominator, so two
 * functions are equal exactly when numerators and denominators are.
 */
class RationalFunction {
   public:
    RationalFunction() : den_(1L) {}
    RationalFunction(long c) : num_(c), den_(1L) {}
    RationalFunction(const Rational& c) : num_(c), den_(1L) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1L) {}
    /// Throws DivisionByZero when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

   private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs);
RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs);

/// Throws DivisionByZero for zero.
RationalFunction reciprocal(const RationalFunction& f);

/// f(z + k).
RationalFunction shift(const RationalFunction& f, long k);
/// f(-z).
RationalFunction reflect(const RationalFunction& f);

}  // namespace desing

#endif  // DESING_RATIONAL_FUNCTION_HPP
