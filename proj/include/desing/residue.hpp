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

#ifndef DESING_RESIDUE_HPP
#define DESING_RESIDUE_HPP

#include <climits>
#include <memory>

#include "desing/errors.hpp"
#include "desing/rational_function.hpp"

namespace desing {

/// ord_q(0).
inline constexpr int kInfiniteOrder = INT_MAX;

/**
 * Residue arithmetic found a zero divisor: the modulus is reducible and
 * factor() is a proper monic factor of it. Callers split and retry.
 */
class ModulusSplit : public Error {
   public:
    explicit ModulusSplit(Polynomial factor);
    const Polynomial& factor() const noexcept { return factor_; }

   private:
    Polynomial factor_;
};

/// Throws InvalidModulus unless q is monic, nonconstant and squarefree.
void check_modulus(const Polynomial& q);

/**
 * q-adic valuation. A modulus that shares a proper factor with the part of f
 * coprime to q cannot be irreducible, which raises ModulusSplit.
 */
int order(const Polynomial& p, const Polynomial& q);
int order(const RationalFunction& f, const Polynomial& q);

class ResidueElement;

/// Q[z]/<q>; copies share the modulus.
class ResidueField {
   public:
    explicit ResidueField(Polynomial modulus);

    const Polynomial& modulus() const noexcept { return *modulus_; }
    int degree() const noexcept { return modulus_->degree(); }

    Polynomial reduce(const Polynomial& p) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    /// Inverse of a reduced nonzero representative.
    Polynomial invert(const Polynomial& a) const;

    ResidueElement element(const Polynomial& p) const;
    /// pi_q(f); NotInLocalRing when ord_q(f) < 0.
    ResidueElement project(const RationalFunction& f) const;
    Polynomial project_rep(const RationalFunction& f) const;

    friend bool operator==(const ResidueField& a, const ResidueField& b) {
        return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
    }

   private:
    std::shared_ptr<const Polynomial> modulus_;
};

class ResidueElement {
   public:
    ResidueElement(ResidueField field, const Polynomial& p);

    const ResidueField& field() const noexcept { return field_; }
    const Polynomial& representative() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }

    ResidueElement operator+(const ResidueElement& rhs) const;
    ResidueElement operator-(const ResidueElement& rhs) const;
    ResidueElement operator*(const ResidueElement& rhs) const;
    ResidueElement operator-() const;
    ResidueElement inverse() const;

    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }

   private:
    ResidueField field_;
    Polynomial rep_;
};

ResidueElement residue_project(const RationalFunction& f, const ResidueField& field);
ResidueElement residue_inverse(const ResidueElement& x);

}  // namespace desing

#endif  // DESING_RESIDUE_HPP
