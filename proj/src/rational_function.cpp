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

#include "desing/rational_function.hpp"

#include <utility>

#include "desing/errors.hpp"

namespace desing {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1L);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    if (den_.leading() != 1) {
        const Polynomial inv(Rational(1) / den_.leading());
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = RationalFunction();
    // Cross-cancel first; both operands are already reduced.
    Polynomial g1 = gcd(num_, rhs.den_);
    Polynomial g2 = gcd(rhs.num_, den_);
    num_ = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
    den_ = exact_quotient(den_, g2) * exact_quotient(rhs.den_, g1);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= reciprocal(rhs); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }

RationalFunction reciprocal(const RationalFunction& f) {
    if (f.is_zero()) throw DivisionByZero("reciprocal of zero");
    return RationalFunction(f.denominator(), f.numerator());
}

RationalFunction shift(const RationalFunction& f, long k) {
    if (k == 0) return f;
    return RationalFunction(shift(f.numerator(), k), shift(f.denominator(), k));
}

RationalFunction reflect(const RationalFunction& f) {
    return RationalFunction(reflect(f.numerator()), reflect(f.denominator()));
}

}  // namespace desing
