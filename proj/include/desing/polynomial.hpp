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

#ifndef DESING_POLYNOMIAL_HPP
#define DESING_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

namespace desing {

using Integer = mpz_class;
using Rational = mpq_class;

/**
 * Dense univariate polynomial over Q in the variable z.
 *
 * Coefficient i multiplies z^i. The coefficient vector never ends in a zero,
 * so equality is plain vector equality and the zero polynomial has no
 * coefficients at all (degree() == -1 stands in for -infinity).
 */
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(long c);
    Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The polynomial z.
    static Polynomial variable();
    static Polynomial monomial(const Rational& c, int degree);
    /// z - root.
    static Polynomial linear(const Rational& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of z^i; zero outside the stored range.
    Rational coefficient(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial monic() const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws DivisionByZero for b == 0.
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// a / b where b is known to divide a; throws std::logic_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& p);

Polynomial power(const Polynomial& p, unsigned exponent);

/// Monic gcd. Throws DegenerateInput when both arguments are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial s;
    Polynomial t;  // s*a + t*b == gcd
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p(z + k). Degree and leading coefficient are preserved.
Polynomial shift(const Polynomial& p, const Rational& k);
Polynomial shift(const Polynomial& p, long k);
/// p(-z).
Polynomial reflect(const Polynomial& p);

/// Largest n with q^n | p, for nonconstant q and nonzero p.
int multiplicity(const Polynomial& q, Polynomial p);

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree, nonconstant
    int multiplicity;
};

/**
 * Yun's squarefree decomposition. Factors are pairwise coprime, one per
 * multiplicity, in increasing multiplicity; the input equals
 * lc * prod factor^multiplicity. A constant input yields an empty list.
 * Throws DegenerateInput for zero.
 */
std::vector<SquarefreeFactor> squarefree_factorization(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// Degree first, then coefficient sequence from z^0 upward.
bool canonical_less(const Polynomial& a, const Polynomial& b);

/**
 * The integer k with r == p(z + k), if any. Both arguments must be monic of
 * the same positive degree n; otherwise there is no offset. The candidate is
 * forced by the z^(n-1) coefficients and then confirmed.
 */
std::optional<long> shift_offset(const Polynomial& p, const Polynomial& r);

Rational resultant(const Polynomial& a, const Polynomial& b);

/// R(k) = res_z(p(z + k), r(z)) as a polynomial in k.
Polynomial shift_resultant(const Polynomial& p, const Polynomial& r);

/// Distinct integer roots, ascending. Throws DegenerateInput for zero.
std::vector<long> integer_roots(const Polynomial& p);

/**
 * Pairwise coprime, monic, squarefree, nonconstant polynomials such that the
 * squarefree part of every input is a product of some of them. Sorted by
 * canonical_less.
 */
std::vector<Polynomial> gcd_free_basis(std::span<const Polynomial> polys);

/**
 * gcd_free_basis refined until every pair (including an element with itself)
 * is either unrelated by integer shifts or an exact shift of each other:
 * gcd(f(z + k), g) is 1 or g for all integers k (k != 0 when f == g).
 */
std::vector<Polynomial> shift_refine(std::span<const Polynomial> polys);

}  // namespace desing

#endif  // DESING_POLYNOMIAL_HPP
