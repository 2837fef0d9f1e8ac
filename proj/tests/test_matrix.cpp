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

#include <random>

#include "desing/errors.hpp"
#include "desing/matrix.hpp"
#include "desing/residue.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace desing;
using testing::F;
using testing::M;
using testing::P;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t d, int max_degree, bool with_den) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), root(-4, 4);
    RationalMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> c(deg(rng) + 1);
            for (auto& x : c) x = coef(rng);
            Polynomial den(1L);
            if (with_den && coef(rng) > 2) den = Polynomial::linear(root(rng));
            m(i, j) = RationalFunction(Polynomial(c), den);
        }
    return m;
}

}  // namespace

TEST_CASE("mat_den and mat_num") {
    CHECK(mat_den(testing::example1().matrix()) == P("z-2"));
    CHECK(mat_den(RationalMatrix::identity(3)) == Polynomial(1L));
    CHECK(mat_den(testing::rank_example().matrix()) == P("z"));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        const RationalMatrix m = random_matrix(rng, 3, 3, true);
        CHECK(lift(mat_num(m)) == RationalFunction(mat_den(m)) * m);
    }
}

TEST_CASE("det examples") {
    CHECK(det(testing::example1().matrix()) == F("2*(z+1)/(z-2)"));
    CHECK(det(RationalMatrix::identity(4)) == RationalFunction(1L));
    CHECK(det(testing::blocked().matrix()) == F("(z+1)/z"));
    CHECK(det(PolynomialMatrix{{P("z"), P("1")}, {P("z^2"), P("z+1")}}) == P("z"));
}

TEST_CASE("det and inverse agree with the Leibniz oracle") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 1 + t % 4;
        const RationalMatrix m = random_matrix(rng, d, 3, t % 2 == 1);
        const RationalFunction dm = det(m);
        CHECK(dm == oracle::leibniz_det(m));
        if (dm.is_zero()) {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
            continue;
        }
        const RationalMatrix inv = inverse(m);
        CHECK(inv * m == RationalMatrix::identity(d));
        CHECK(det(inv) * dm == RationalFunction(1L));
    }
}

TEST_CASE("inverse examples") {
    const RationalMatrix a = testing::example1().matrix();
    CHECK(shift(inverse(a), -1) == M({{"3*(z-2)/(2*z)", "(3-z)/(2*z)"}, {"1", "0"}}));
    CHECK(inverse(RationalMatrix::identity(2)) == RationalMatrix::identity(2));
    CHECK(inverse(M({{"z", "0"}, {"0", "1"}})) == M({{"1/z", "0"}, {"0", "1"}}));
    CHECK_THROWS_AS(inverse(M({{"z", "1"}, {"z^2", "z"}})), SingularMatrix);
}

TEST_CASE("matrix order") {
    CHECK(order(testing::example1().matrix(), P("z-2")) == -1);
    CHECK(order(RationalMatrix::identity(2), P("z-2")) == 0);
    CHECK(order(testing::blocked().matrix(), P("z+1")) == -1);
    CHECK(order(RationalMatrix(2), P("z")) == kInfiniteOrder);
}

TEST_CASE("order is superadditive") {
    std::mt19937_64 rng(4);
    const Polynomial q = P("z-1");
    for (int t = 0; t < 40; ++t) {
        const RationalMatrix a = random_matrix(rng, 2, 2, true), b = random_matrix(rng, 2, 2, true);
        const RationalMatrix ab = a * b;
        const int oa = order(a, q), ob = order(b, q);
        if (oa == kInfiniteOrder || ob == kInfiniteOrder) continue;
        const int oab = order(ab, q);
        CHECK(oab >= oa + ob);
        const ResidueMatrix la = leading_matrix(a, q), lb = leading_matrix(b, q);
        if (!(la * lb).is_zero()) CHECK(oab == oa + ob);
    }
}

TEST_CASE("leading_matrix and residue_rank") {
    const ResidueField f(P("z-2"));
    const ResidueMatrix lc = leading_matrix(testing::example1().matrix(), P("z-2"));
    CHECK(lc.reps() == PolynomialMatrix{{Polynomial(0L), Polynomial(0L)}, {Polynomial(-6L), Polynomial(3L)}});
    CHECK(residue_rank(lc) == 1);
    CHECK(leading_matrix(RationalMatrix::identity(2), P("z")) == ResidueMatrix::identity(ResidueField(P("z")), 2));
    const ResidueMatrix lz = leading_matrix(testing::rank_example().matrix(), P("z"));
    CHECK(lz.reps() == PolynomialMatrix::diagonal({Polynomial(0L), Polynomial(1L), Polynomial(1L)}));
    CHECK(residue_rank(lz) == 2);
    CHECK(residue_rank(ResidueMatrix(f, PolynomialMatrix(3))) == 0);
    CHECK_THROWS_AS(leading_matrix(RationalMatrix(2), P("z")), DegenerateInput);
}

TEST_CASE("column_reduce examples") {
    const ResidueField f(P("z-2"));
    const ColumnReduction c = column_reduce(ResidueMatrix(f, {{Polynomial(0L), Polynomial(0L)}, {Polynomial(-6L), Polynomial(3L)}}));
    CHECK(c.S == PolynomialMatrix{{Polynomial(1L), Polynomial(Rational(1, 2))}, {Polynomial(0L), Polynomial(1L)}});
    CHECK(c.reduced.reps() == PolynomialMatrix{{Polynomial(0L), Polynomial(0L)}, {Polynomial(-6L), Polynomial(0L)}});
    CHECK(c.rank == 1);

    const ColumnReduction id = column_reduce(ResidueMatrix::identity(f, 3));
    CHECK(id.S == PolynomialMatrix::identity(3));

    const ResidueField g(P("z"));
    const ColumnReduction sw = column_reduce(ResidueMatrix(g, {{Polynomial(0L), Polynomial(1L)}, {Polynomial(0L), Polynomial(2L)}}));
    CHECK(sw.S == PolynomialMatrix{{Polynomial(0L), Polynomial(1L)}, {Polynomial(1L), Polynomial(0L)}});
    CHECK(sw.reduced.reps() == PolynomialMatrix{{Polynomial(1L), Polynomial(0L)}, {Polynomial(2L), Polynomial(0L)}});
}

TEST_CASE("column_reduce invariants") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const char* mod : {"z-3", "z^2+1"}) {
        const ResidueField f(P(mod));
        for (int t = 0; t < 40; ++t) {
            const std::size_t d = 1 + t % 4;
            PolynomialMatrix reps(d);
            // Low-rank on purpose: rows are combinations of two random rows.
            PolynomialMatrix base(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) base(i, j) = f.reduce(Polynomial(std::vector<Rational>{coef(rng), coef(rng)}));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    reps(i, j) = f.reduce(Polynomial(coef(rng)) * base(0, j) + Polynomial(coef(rng)) * base(d - 1, j));
            const ResidueMatrix l(f, reps);
            const ColumnReduction c = column_reduce(l);
            const Polynomial ds = det(c.S);
            CHECK(ds.degree() == 0);
            CHECK(c.rank == residue_rank(l));
            CHECK(residue_rank(c.reduced) == c.rank);
            CHECK(c.reduced == l * ResidueMatrix(f, c.S));
            for (std::size_t j = static_cast<std::size_t>(c.rank); j < d; ++j)
                for (std::size_t i = 0; i < d; ++i) CHECK(c.reduced.rep(i, j).is_zero());
        }
    }
}

TEST_CASE("row_compress and row_space_basis") {
    const ResidueField f(P("z-2"));
    const ResidueMatrix n(f, {{Polynomial(0L), Polynomial(-3L)}, {Polynomial(0L), Polynomial(-6L)}});
    const RowCompression rc = row_compress(n);
    CHECK(rc.s == 1);
    CHECK(rc.P.reps() == PolynomialMatrix{{Polynomial(2L), Polynomial(-1L)}, {Polynomial(0L), Polynomial(1L)}});
    const ResidueMatrix pn = rc.P * n;
    CHECK(pn.rep(0, 0).is_zero());
    CHECK(pn.rep(0, 1).is_zero());

    const ResidueMatrix m(f, {{Polynomial(0L), Polynomial(0L)}, {Polynomial(-12L), Polynomial(6L)}});
    const RowCompression rs = row_space_basis(m);
    CHECK(rs.s == 1);
    CHECK(rs.P == rc.P);
    const ResidueMatrix mp = m * inverse(rs.P);
    CHECK(mp.rep(0, 1).is_zero());
    CHECK(mp.rep(1, 1).is_zero());
}

TEST_CASE("residue matrix inverse") {
    const ResidueField f(P("z^2+1"));
    const ResidueMatrix a(f, {{P("z"), Polynomial(1L)}, {Polynomial(1L), P("z")}});
    CHECK(a * inverse(a) == ResidueMatrix::identity(f, 2));
    CHECK_THROWS_AS(inverse(ResidueMatrix(f, {{P("z"), Polynomial(-1L)}, {Polynomial(1L), P("z")}})), SingularMatrix);
}

TEST_CASE("shift and reflect of matrices") {
    const RationalMatrix a = testing::example1().matrix();
    const RationalMatrix s = shift(a, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(oracle::is_shift(a(i, j), 3, s(i, j)));
    CHECK(reflect(reflect(a)) == a);
    CHECK(reflect(a)(1, 0) == F("(2*z-2)/(-z-2)"));
}
