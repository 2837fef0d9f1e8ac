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

#ifndef DESING_MATRIX_HPP
#define DESING_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "desing/rational_function.hpp"
#include "desing/residue.hpp"

namespace desing {

/// Dense row-major d x d matrix. T needs T(0), T(1), +, - and *.
template <class T>
class SquareMatrix {
   public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t d) : d_(d), a_(d * d, T(0L)) {}
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : d_(rows.size()) {
        a_.reserve(d_ * d_);
        for (const auto& r : rows) {
            if (r.size() != d_) throw std::invalid_argument("matrix rows must form a square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static SquareMatrix identity(std::size_t d) {
        SquareMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = T(1L);
        return m;
    }
    static SquareMatrix diagonal(const std::vector<T>& entries) {
        SquareMatrix m(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t size() const noexcept { return d_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    template <class F>
    auto map(F f) const {
        SquareMatrix<decltype(f(a_[0]))> out(d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    SquareMatrix& operator+=(const SquareMatrix& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
        return *this;
    }
    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        SquareMatrix out(a.d_);
        for (std::size_t i = 0; i < a.d_; ++i)
            for (std::size_t k = 0; k < a.d_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < a.d_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        return out;
    }
    friend SquareMatrix operator*(const T& c, SquareMatrix m) {
        for (auto& x : m.a_) x = c * x;
        return m;
    }
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

   private:
    void check(const SquareMatrix& o) const {
        if (o.d_ != d_) throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t d_ = 0;
    std::vector<T> a_;
};

using RationalMatrix = SquareMatrix<RationalFunction>;
using PolynomialMatrix = SquareMatrix<Polynomial>;

RationalMatrix lift(const PolynomialMatrix& m);
bool is_polynomial(const RationalMatrix& m);
/// Throws std::invalid_argument when some entry is not a polynomial.
PolynomialMatrix to_polynomial(const RationalMatrix& m);

/// Monic lcm of the entry denominators.
Polynomial mat_den(const RationalMatrix& m);
/// mat_den(m) * m.
PolynomialMatrix mat_num(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant.
Polynomial det(const PolynomialMatrix& m);
RationalFunction det(const RationalMatrix& m);
/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);

/// Entry-wise f(z + k).
RationalMatrix shift(const RationalMatrix& m, long k);
PolynomialMatrix shift(const PolynomialMatrix& m, long k);
/// Entry-wise f(-z).
RationalMatrix reflect(const RationalMatrix& m);
PolynomialMatrix reflect(const PolynomialMatrix& m);

/// min over entries of ord_q; kInfiniteOrder for the zero matrix.
int order(const RationalMatrix& m, const Polynomial& q);

/// Matrix over Q[z]/<q>, stored as reduced polynomial representatives.
class ResidueMatrix {
   public:
    ResidueMatrix(ResidueField field, const PolynomialMatrix& reps);
    static ResidueMatrix identity(const ResidueField& field, std::size_t d);

    const ResidueField& field() const noexcept { return field_; }
    const PolynomialMatrix& reps() const noexcept { return reps_; }
    std::size_t size() const noexcept { return reps_.size(); }
    const Polynomial& rep(std::size_t i, std::size_t j) const { return reps_(i, j); }
    ResidueElement at(std::size_t i, std::size_t j) const { return ResidueElement(field_, reps_(i, j)); }
    bool is_zero() const { return reps_.is_zero(); }

    ResidueMatrix operator*(const ResidueMatrix& rhs) const;
    friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
        return a.field_ == b.field_ && a.reps_ == b.reps_;
    }

   private:
    ResidueField field_;
    PolynomialMatrix reps_;
};

/// Entry-wise pi_q; every entry must lie in the local ring at the modulus.
ResidueMatrix project(const RationalMatrix& m, const ResidueField& field);
/// pi_q(q^(-ord_q m) m). DegenerateInput for the zero matrix.
ResidueMatrix leading_matrix(const RationalMatrix& m, const Polynomial& q);

int residue_rank(const ResidueMatrix& m);
/// Throws SingularMatrix.
ResidueMatrix inverse(const ResidueMatrix& m);

struct ColumnReduction {
    PolynomialMatrix S;     // unimodular lift of the column operations
    ResidueMatrix reduced;  // L * S with the last d - rank columns zero
    int rank;
};

/**
 * Column operations bringing L to a form whose nonzero columns are
 * independent and come first. Columns are scanned left to right; the pivot of
 * a column is the topmost unused row with a nonzero entry there, and that row
 * is cleared in every later column. Zero columns then move to the back in
 * their original order.
 */
ColumnReduction column_reduce(const ResidueMatrix& l);

struct RowCompression {
    ResidueMatrix P;  // invertible
    int s;            // the first s rows of P*N vanish, the remaining ones are independent
};

/**
 * Row operations compressing the dependencies of N into its top rows.
 * Columns are scanned left to right with the bottom-most unused nonzero row
 * as pivot. Each dependent row contributes its kernel vector, scaled to
 * primitive integer content with a positive leading coefficient; the unit
 * vectors of the pivot rows follow, both groups in ascending row order.
 */
RowCompression row_compress(const ResidueMatrix& n);

/**
 * P whose first s = rank(M) rows are the reduced row echelon basis of the
 * row space of M, each scaled as in row_compress, followed by the unit
 * vectors of the non-pivot columns. Then M * P^-1 vanishes outside its first
 * s columns.
 */
RowCompression row_space_basis(const ResidueMatrix& m);

}  // namespace desing

#endif  // DESING_MATRIX_HPP
