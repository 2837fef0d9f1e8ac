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

#include "desing/testkit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace desing {

namespace {

Polynomial det_numerator(const DifferenceSystem& sys) { return sys.det().numerator().monic(); }

Rational det_q(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            result = -result;
        }
        result *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return result;
}

}  // namespace

Rational sylvester_resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return 1;
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    // n shifted rows of a, then m shifted rows of b, coefficients from the top.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a.coefficient(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coefficient(n - i);
    return det_q(std::move(s));
}

int dispersion_by_scan(const DifferenceSystem& sys, const Polynomial& q, int bound) {
    const Polynomial num = det_numerator(sys);
    const long s = step(sys.direction());
    int best = 0;
    for (int l = 1; l <= bound; ++l)
        if (divides(shift(q, s * l), num)) best = l;
    return best;
}

int dispersion_by_resultant(const DifferenceSystem& sys, const Polynomial& q, int bound) {
    const Polynomial num = det_numerator(sys);
    if (num.is_constant()) return 0;
    const long s = step(sys.direction());
    int best = 0;
    for (int l = 1; l <= bound; ++l)
        if (sylvester_resultant(shift(q, s * l), num) == 0) best = l;
    return best;
}

int brute_dispersion(const DifferenceSystem& sys, const Polynomial& q, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const int a = dispersion_by_scan(sys, q, bound);
    const int b = dispersion_by_resultant(sys, q, bound);
    if (a != b) throw std::logic_error("dispersion routes disagree");
    return a;
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long bound) {
    long v = 0;
    while (v == 0) v = uniform(rng, -bound, bound);
    return v;
}

Polynomial random_linear(Rng& rng) { return Polynomial(std::vector<Rational>{uniform(rng, -3, 3), uniform(rng, -2, 2)}); }

// I + p e_ij with i != j; the identity for d == 1.
PolynomialMatrix elementary(Rng& rng, std::size_t d) {
    PolynomialMatrix e = PolynomialMatrix::identity(d);
    if (d < 2) return e;
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
    if (j >= i) ++j;
    e(i, j) = random_linear(rng);
    return e;
}

struct Clean {
    PolynomialMatrix c;
    std::vector<long> roots;
};

Clean make_clean(Rng& rng, std::size_t d, int max_degree) {
    std::vector<long> pool;
    for (long a = -6; a <= 6; ++a) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Polynomial> diag;
    std::vector<long> roots;
    for (std::size_t i = 0; i < d; ++i) {
        const long c = nonzero(rng, 3);
        if (max_degree >= 1) {
            diag.push_back(Polynomial::linear(pool[i]) * Polynomial(c));
            roots.push_back(pool[i]);
        } else {
            diag.push_back(Polynomial(c));
        }
    }
    const PolynomialMatrix delta = PolynomialMatrix::diagonal(diag);
    PolynomialMatrix w = max_degree >= 3 ? elementary(rng, d) : PolynomialMatrix::identity(d);
    const RationalMatrix c = inverse(shift(lift(w), 1L)) * lift(delta) * lift(w);
    return {to_polynomial(c), roots};
}

}  // namespace

PlantedInstance make_planted(std::uint64_t seed, std::size_t d, int max_degree, int steps) {
    if (d == 0) throw std::invalid_argument("dimension must be positive");
    Rng rng(seed);
    const Clean clean = make_clean(rng, d, max_degree);
    RationalMatrix t = RationalMatrix::identity(d);
    for (int k = 0; k < steps; ++k) {
        const bool shear = k == 0 || d == 1 || uniform(rng, 0, 1) == 0;
        if (!shear) {
            t = t * lift(elementary(rng, d));
            continue;
        }
        long b = 0;
        do b = uniform(rng, -8, 8);
        while (std::find(clean.roots.begin(), clean.roots.end(), b) != clean.roots.end());
        const auto s = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(d)));
        PolynomialMatrix dm = PolynomialMatrix::identity(d);
        for (std::size_t i = 0; i < s; ++i) dm(i, i) = Polynomial::linear(b);
        t = t * lift(dm);
    }
    const DifferenceSystem cs(lift(clean.c));
    return {cs, t, gauge(cs, inverse(t)), seed};
}

DifferenceSystem make_control(std::uint64_t seed, std::size_t d) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const Clean clean = make_clean(rng, d, 3);
    const long a = *std::min_element(clean.roots.begin(), clean.roots.end()) - uniform(rng, 1, 3);
    return DifferenceSystem(RationalFunction(Polynomial(1L), Polynomial::linear(a)) * lift(clean.c));
}

bool check_solution(const DifferenceSystem& sys, const std::vector<RationalFunction>& y) {
    const std::size_t d = sys.size();
    if (y.size() != d) return false;
    const long s = step(sys.direction());
    for (std::size_t i = 0; i < d; ++i) {
        RationalFunction rhs;
        for (std::size_t j = 0; j < d; ++j) rhs += sys.matrix()(i, j) * y[j];
        if (!(shift(y[i], s) == rhs)) return false;
    }
    return true;
}

}  // namespace desing
