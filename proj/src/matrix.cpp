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

#include "desing/matrix.hpp"

#include <algorithm>
#include <utility>

namespace desing {

RationalMatrix lift(const PolynomialMatrix& m) {
    return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

bool is_polynomial(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!m(i, j).is_polynomial()) return false;
    return true;
}

PolynomialMatrix to_polynomial(const RationalMatrix& m) {
    if (!is_polynomial(m)) throw std::invalid_argument("matrix has non-polynomial entries");
    return m.map([](const RationalFunction& f) { return f.numerator(); });
}

Polynomial mat_den(const RationalMatrix& m) {
    Polynomial den(1L);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Polynomial& e = m(i, j).denominator();
            if (!e.is_constant() && !divides(e, den)) den = lcm(den, e);
        }
    return den;
}

PolynomialMatrix mat_num(const RationalMatrix& m) {
    const Polynomial den = mat_den(m);
    return m.map([&](const RationalFunction& f) {
        return f.numerator() * exact_quotient(den, f.denominator());
    });
}

Polynomial det(const PolynomialMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1L);
    PolynomialMatrix a = m;
    Rational sign = 1;
    Polynomial prev(1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_quotient(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = Polynomial{};
        }
        prev = a(k, k);
    }
    return a(n - 1, n - 1) * Polynomial(sign);
}

RationalFunction det(const RationalMatrix& m) {
    const Polynomial den = mat_den(m);
    return RationalFunction(det(mat_num(m)), power(den, static_cast<unsigned>(m.size())));
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw SingularMatrix("matrix is not invertible");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        const RationalFunction pinv = reciprocal(a(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(c, j).is_zero()) a(c, j) *= pinv;
            if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const RationalFunction f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RationalMatrix shift(const RationalMatrix& m, long k) {
    return m.map([k](const RationalFunction& f) { return shift(f, k); });
}

PolynomialMatrix shift(const PolynomialMatrix& m, long k) {
    return m.map([k](const Polynomial& f) { return shift(f, k); });
}

RationalMatrix reflect(const RationalMatrix& m) {
    return m.map([](const RationalFunction& f) { return reflect(f); });
}

PolynomialMatrix reflect(const PolynomialMatrix& m) {
    return m.map([](const Polynomial& f) { return reflect(f); });
}

int order(const RationalMatrix& m, const Polynomial& q) {
    check_modulus(q);
    int best = kInfiniteOrder;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) best = std::min(best, order(m(i, j), q));
    return best;
}

ResidueMatrix::ResidueMatrix(ResidueField field, const PolynomialMatrix& reps)
    : field_(std::move(field)), reps_(reps.map([this](const Polynomial& p) { return field_.reduce(p); })) {}

ResidueMatrix ResidueMatrix::identity(const ResidueField& field, std::size_t d) {
    return ResidueMatrix(field, PolynomialMatrix::identity(d));
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& rhs) const {
    if (!(field_ == rhs.field_)) throw UsageError("residue matrices over different fields");
    return ResidueMatrix(field_, reps_ * rhs.reps_);
}

ResidueMatrix project(const RationalMatrix& m, const ResidueField& field) {
    return ResidueMatrix(field, m.map([&](const RationalFunction& f) { return field.project_rep(f); }));
}

ResidueMatrix leading_matrix(const RationalMatrix& m, const Polynomial& q) {
    const int n = order(m, q);
    if (n == kInfiniteOrder) throw DegenerateInput("leading matrix of the zero matrix");
    const ResidueField field(q);
    if (n == 0) return project(m, field);
    const Polynomial qn = power(q, static_cast<unsigned>(n < 0 ? -n : n));
    const RationalFunction scale = n < 0 ? RationalFunction(qn) : RationalFunction(Polynomial(1L), qn);
    return project(scale * m, field);
}

namespace {

// Row echelon over the residue field; returns the rank.
int eliminate(const ResidueField& f, PolynomialMatrix& a) {
    const std::size_t n = a.size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(row, j), a(p, j));
        const Polynomial inv = f.invert(a(row, c));
        for (std::size_t i = row + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Polynomial factor = f.multiply(a(i, c), inv);
            for (std::size_t j = c; j < n; ++j) a(i, j) = f.reduce(a(i, j) - factor * a(row, j));
        }
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace

int residue_rank(const ResidueMatrix& m) {
    PolynomialMatrix a = m.reps();
    return eliminate(m.field(), a);
}

ResidueMatrix inverse(const ResidueMatrix& m) {
    const ResidueField& f = m.field();
    const std::size_t n = m.size();
    PolynomialMatrix a = m.reps();
    PolynomialMatrix inv = PolynomialMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw SingularMatrix("residue matrix is not invertible");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        const Polynomial pinv = f.invert(a(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = f.multiply(a(c, j), pinv);
            inv(c, j) = f.multiply(inv(c, j), pinv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Polynomial factor = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = f.reduce(a(i, j) - factor * a(c, j));
                inv(i, j) = f.reduce(inv(i, j) - factor * inv(c, j));
            }
        }
    }
    return ResidueMatrix(f, inv);
}

ColumnReduction column_reduce(const ResidueMatrix& l) {
    const ResidueField& f = l.field();
    const std::size_t n = l.size();
    PolynomialMatrix a = l.reps();
    PolynomialMatrix s = PolynomialMatrix::identity(n);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivot_cols, zero_cols;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = 0;
        while (r < n && (used[r] || a(r, c).is_zero())) ++r;
        if (r == n) {
            zero_cols.push_back(c);
            continue;
        }
        used[r] = true;
        pivot_cols.push_back(c);
        const Polynomial inv = f.invert(a(r, c));
        for (std::size_t j = c + 1; j < n; ++j) {
            if (a(r, j).is_zero()) continue;
            const Polynomial factor = f.multiply(-a(r, j), inv);
            for (std::size_t i = 0; i < n; ++i) {
                a(i, j) = f.reduce(a(i, j) + factor * a(i, c));
                s(i, j) = f.reduce(s(i, j) + factor * s(i, c));
            }
        }
    }
    std::vector<std::size_t> order = pivot_cols;
    order.insert(order.end(), zero_cols.begin(), zero_cols.end());
    PolynomialMatrix sp(n), ap(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            sp(i, k) = s(i, order[k]);
            ap(i, k) = a(i, order[k]);
        }
    return {sp, ResidueMatrix(f, ap), static_cast<int>(pivot_cols.size())};
}

namespace {

// Scale a vector of polynomials to primitive integer content, first nonzero
// leading coefficient positive.
void make_primitive(std::vector<Polynomial>& v) {
    Integer den = 1;
    for (const auto& p : v)
        for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& p : v)
        for (const auto& c : p.coefficients()) {
            const Integer k = c.get_num() * (den / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        }
    if (g == 0) return;
    Rational factor(den, g);
    factor.canonicalize();
    for (const auto& p : v)
        if (!p.is_zero()) {
            if (p.leading() < 0) factor = -factor;
            break;
        }
    for (auto& p : v) p *= Polynomial(factor);
}

}  // namespace

RowCompression row_compress(const ResidueMatrix& nm) {
    const ResidueField& f = nm.field();
    const std::size_t n = nm.size();
    PolynomialMatrix a = nm.reps();
    PolynomialMatrix e = PolynomialMatrix::identity(n);
    std::vector<bool> used(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = n;
        for (std::size_t i = n; i-- > 0;)
            if (!used[i] && !a(i, c).is_zero()) {
                r = i;
                break;
            }
        if (r == n) continue;
        used[r] = true;
        const Polynomial inv = f.invert(a(r, c));
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || a(i, c).is_zero()) continue;
            const Polynomial factor = f.multiply(a(i, c), inv);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = f.reduce(a(i, j) - factor * a(r, j));
                e(i, j) = f.reduce(e(i, j) - factor * e(r, j));
            }
        }
    }
    PolynomialMatrix p(n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<Polynomial> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = e(i, j);
        make_primitive(v);
        for (std::size_t j = 0; j < n; ++j) p(row, j) = v[j];
        ++row;
    }
    const int s = static_cast<int>(row);
    for (std::size_t i = 0; i < n; ++i)
        if (used[i]) p(row++, i) = Polynomial(1L);
    return {ResidueMatrix(f, p), s};
}

RowCompression row_space_basis(const ResidueMatrix& m) {
    const ResidueField& f = m.field();
    const std::size_t n = m.size();
    PolynomialMatrix a = m.reps();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(row, j), a(p, j));
        const Polynomial inv = f.invert(a(row, c));
        for (std::size_t j = 0; j < n; ++j) a(row, j) = f.multiply(a(row, j), inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a(i, c).is_zero()) continue;
            const Polynomial factor = a(i, c);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = f.reduce(a(i, j) - factor * a(row, j));
        }
        pivots.push_back(c);
        ++row;
    }
    PolynomialMatrix p(n);
    for (std::size_t i = 0; i < row; ++i) {
        std::vector<Polynomial> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = a(i, j);
        make_primitive(v);
        for (std::size_t j = 0; j < n; ++j) p(i, j) = v[j];
    }
    std::size_t next = row;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) p(next++, c) = Polynomial(1L);
    return {ResidueMatrix(f, p), static_cast<int>(row)};
}

}  // namespace desing
