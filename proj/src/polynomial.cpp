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

#include "desing/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "desing/errors.hpp"

namespace desing {

Polynomial::Polynomial(long c) : coeffs_{Rational(c)} { trim(); }

Polynomial::Polynomial(const Rational& c) : coeffs_{c} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) {
    return Polynomial(std::vector<Rational>{-root, 1});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw DegenerateInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial out = *this;
    const Rational lc = coeffs_.back();
    if (lc == 1) return out;
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto& a = lhs.coefficients();
    const auto& b = rhs.coefficients();
    std::vector<Rational> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    const Rational& lb = b.leading();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / lb;
        quot[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: divisor does not divide");
    return q;
}

bool divides(const Polynomial& d, const Polynomial& p) { return (p % d).is_zero(); }

Polynomial power(const Polynomial& p, unsigned exponent) {
    Polynomial result(1L);
    Polynomial base = p;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    while (!y.is_zero()) {
        Polynomial r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_quotient(a * b, gcd(a, b)).monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    Polynomial r0 = a, r1 = b;
    Polynomial s0(1L), s1;
    Polynomial t0, t1(1L);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        Polynomial s2 = s0 - q * s1;
        s0 = std::exchange(s1, std::move(s2));
        Polynomial t2 = t0 - q * t1;
        t0 = std::exchange(t1, std::move(t2));
    }
    const Rational inv = 1 / r0.leading();
    return {r0.monic(), s0 * Polynomial(inv), t0 * Polynomial(inv)};
}

Polynomial shift(const Polynomial& p, const Rational& k) {
    if (p.is_constant() || k == 0) return p;
    // Horner in the basis (z + k).
    const auto& c = p.coefficients();
    std::vector<Rational> acc;
    acc.reserve(c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc.push_back(0);
        for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = acc[j - 1] + k * acc[j];
        acc[0] = k * acc[0] + *it;
    }
    return Polynomial(std::move(acc));
}

Polynomial shift(const Polynomial& p, long k) { return shift(p, Rational(k)); }

Polynomial reflect(const Polynomial& p) {
    std::vector<Rational> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial(std::move(c));
}

int multiplicity(const Polynomial& q, Polynomial p) {
    if (q.is_constant()) throw DegenerateInput("multiplicity of a constant");
    if (p.is_zero()) throw DegenerateInput("multiplicity in the zero polynomial");
    int n = 0;
    for (;;) {
        auto [quot, rem] = divmod(p, q);
        if (!rem.is_zero()) return n;
        p = std::move(quot);
        ++n;
    }
}

std::vector<SquarefreeFactor> squarefree_factorization(const Polynomial& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree factorization of zero");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    const Polynomial f = p.monic();
    const Polynomial df = f.derivative();
    const Polynomial b = gcd(f, df);
    Polynomial c = exact_quotient(f, b);
    Polynomial d = exact_quotient(df, b) - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        Polynomial a = gcd(c, d);
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - c.derivative();
        if (!a.is_constant()) out.push_back({std::move(a), i});
    }
    return out;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial out(1L);
    for (const auto& f : squarefree_factorization(p)) out *= f.factor;
    return out;
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    return gcd(p, p.derivative()).is_constant();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::optional<long> shift_offset(const Polynomial& p, const Polynomial& r) {
    const int n = p.degree();
    if (n < 1 || r.degree() != n || !p.is_monic() || !r.is_monic()) return std::nullopt;
    // (z+k)^n contributes n*k to the z^(n-1) coefficient.
    const Rational k = (r.coefficient(n - 1) - p.coefficient(n - 1)) / n;
    if (k.get_den() != 1 || !k.get_num().fits_slong_p()) return std::nullopt;
    const long kl = k.get_num().get_si();
    if (shift(p, kl) != r) return std::nullopt;
    return kl;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Polynomial x = a, y = b;
    Rational res = 1;
    for (;;) {
        const int m = x.degree();
        const int n = y.degree();
        if (n == 0) {
            Rational lc = y.leading();
            Rational pw = 1;
            for (int i = 0; i < m; ++i) pw *= lc;
            return res * pw;
        }
        Polynomial r = x % y;
        if (r.is_zero()) return 0;
        const int s = r.degree();
        Rational pw = 1;
        for (int i = 0; i < m - s; ++i) pw *= y.leading();
        res *= pw;
        if ((m % 2 == 1) && (n % 2 == 1)) res = -res;
        x = std::move(y);
        y = std::move(r);
    }
}

Polynomial shift_resultant(const Polynomial& p, const Polynomial& r) {
    if (p.is_constant() || r.is_constant()) throw DegenerateInput("shift resultant of a constant");
    // Linear cases are compositions; the roots in k are all that callers use,
    // but the scaling below also matches res_z exactly.
    if (p.degree() == 1) {
        // p(z+k) = lp*(z + k - a); res = lp^deg r * r(a - k).
        const Rational a = -p.coefficient(0) / p.leading();
        Polynomial g = reflect(shift(r, a));
        Rational scale = 1;
        for (int i = 0; i < r.degree(); ++i) scale *= p.leading();
        return g * Polynomial(scale);
    }
    if (r.degree() == 1) {
        // res(f, lr*(z - b)) = (-lr)^deg f * f(b) with f = p(z+k).
        const Rational b = -r.coefficient(0) / r.leading();
        Polynomial g = shift(p, b);
        Rational scale = 1;
        for (int i = 0; i < p.degree(); ++i) scale *= -r.leading();
        return g * Polynomial(scale);
    }
    const int n = p.degree() * r.degree();
    std::vector<Rational> xs(static_cast<std::size_t>(n) + 1);
    std::vector<Rational> dd(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        xs[static_cast<std::size_t>(i)] = i;
        dd[static_cast<std::size_t>(i)] = resultant(shift(p, static_cast<long>(i)), r);
    }
    // Newton divided differences, then nested evaluation.
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i)
            dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                              (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
    Polynomial out(dd[static_cast<std::size_t>(n)]);
    for (int i = n - 1; i >= 0; --i)
        out = out * Polynomial::linear(xs[static_cast<std::size_t>(i)]) + Polynomial(dd[static_cast<std::size_t>(i)]);
    return out;
}

namespace {

constexpr unsigned long kRootSearchLimit = 50'000'000UL;

Integer eval_int(const std::vector<Integer>& c, const Integer& x) {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::vector<long> integer_roots(const Polynomial& p) {
    if (p.is_zero()) throw DegenerateInput("integer roots of the zero polynomial");
    std::vector<long> roots;
    if (p.is_constant()) return roots;

    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients()) c.push_back(q.get_num() * (den_lcm / q.get_den()));

    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() == 1) return roots;

    // Cauchy: every root satisfies |x| <= 1 + max |c_i / c_n|.
    const Integer lead = abs(c.back());
    Integer bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Integer q = abs(c[i]);
        mpz_cdiv_q(q.get_mpz_t(), q.get_mpz_t(), lead.get_mpz_t());
        if (q > bound) bound = q;
    }
    bound += 1;
    const Integer tail = abs(c.front());
    Integer root_tail;
    mpz_sqrt(root_tail.get_mpz_t(), tail.get_mpz_t());
    const Integer steps = bound < root_tail ? bound : root_tail;
    if (steps > kRootSearchLimit) throw Error("integer root search exceeds the divisor enumeration limit");

    auto try_candidate = [&](const Integer& x) {
        if (abs(x) > bound || !x.fits_slong_p()) return;
        if (eval_int(c, x) == 0) roots.push_back(x.get_si());
    };
    const unsigned long n = steps.get_ui();
    for (unsigned long d = 1; d <= n; ++d) {
        if (!mpz_divisible_ui_p(tail.get_mpz_t(), d)) continue;
        const Integer dv = d;
        const Integer co = tail / dv;
        try_candidate(dv);
        try_candidate(-dv);
        if (co != dv) {
            try_candidate(co);
            try_candidate(-co);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Polynomial> gcd_free_basis(std::span<const Polynomial> polys) {
    std::vector<Polynomial> items;
    for (const auto& p : polys) {
        if (p.is_zero() || p.is_constant()) continue;
        for (auto& f : squarefree_factorization(p)) items.push_back(std::move(f.factor));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
                Polynomial g = gcd(items[i], items[j]);
                if (g.is_constant()) continue;
                Polynomial a = exact_quotient(items[i], g);
                Polynomial b = exact_quotient(items[j], g);
                items.erase(items.begin() + static_cast<long>(j));
                items.erase(items.begin() + static_cast<long>(i));
                items.push_back(std::move(g));
                if (!a.is_constant()) items.push_back(a.monic());
                if (!b.is_constant()) items.push_back(b.monic());
                changed = true;
            }
        }
    }
    std::sort(items.begin(), items.end(), canonical_less);
    return items;
}

std::vector<Polynomial> shift_refine(std::span<const Polynomial> polys) {
    std::vector<Polynomial> basis = gcd_free_basis(polys);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i; j < basis.size() && !changed; ++j) {
                for (long k : integer_roots(shift_resultant(basis[i], basis[j]))) {
                    if (i == j && k == 0) continue;
                    const Polynomial f = shift(basis[i], k);
                    const Polynomial g = gcd(f, basis[j]);
                    if (g.is_constant()) continue;
                    std::vector<Polynomial> pieces;
                    if (g != basis[j]) {
                        pieces = {g, exact_quotient(basis[j], g).monic()};
                        basis.erase(basis.begin() + static_cast<long>(j));
                    } else if (g != f) {
                        const Polynomial back = shift(g, -k);
                        pieces = {back, exact_quotient(basis[i], back).monic()};
                        basis.erase(basis.begin() + static_cast<long>(i));
                    } else {
                        continue;
                    }
                    basis.insert(basis.end(), pieces.begin(), pieces.end());
                    basis = gcd_free_basis(basis);
                    changed = true;
                    break;
                }
            }
        }
    }
    return basis;
}

}  // namespace desing
