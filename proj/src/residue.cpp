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

#include "desing/residue.hpp"

#include <utility>

namespace desing {

ModulusSplit::ModulusSplit(Polynomial factor)
    : Error("modulus splits: zero divisor exposes a proper factor"), factor_(factor.monic()) {}

void check_modulus(const Polynomial& q) {
    if (q.is_constant()) throw InvalidModulus("modulus must have positive degree");
    if (!q.is_monic()) throw InvalidModulus("modulus must be monic");
    if (!is_squarefree(q)) throw InvalidModulus("modulus must be squarefree");
}

int order(const Polynomial& p, const Polynomial& q) {
    check_modulus(q);
    if (p.is_zero()) return kInfiniteOrder;
    int n = 0;
    Polynomial rest = p;
    for (;;) {
        auto [quot, rem] = divmod(rest, q);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++n;
    }
    if (!rest.is_constant()) {
        Polynomial g = gcd(rest, q);
        if (!g.is_constant()) throw ModulusSplit(std::move(g));
    }
    return n;
}

int order(const RationalFunction& f, const Polynomial& q) {
    if (f.is_zero()) {
        check_modulus(q);
        return kInfiniteOrder;
    }
    return order(f.numerator(), q) - order(f.denominator(), q);
}

ResidueField::ResidueField(Polynomial modulus) {
    check_modulus(modulus);
    modulus_ = std::make_shared<const Polynomial>(std::move(modulus));
}

Polynomial ResidueField::reduce(const Polynomial& p) const {
    if (p.degree() < modulus_->degree()) return p;
    return p % *modulus_;
}

Polynomial ResidueField::multiply(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }

Polynomial ResidueField::invert(const Polynomial& a) const {
    const Polynomial r = reduce(a);
    if (r.is_zero()) throw DivisionByZero("inverse of zero in a residue field");
    ExtendedGcd e = extended_gcd(r, *modulus_);
    if (!e.gcd.is_constant()) throw ModulusSplit(std::move(e.gcd));
    return reduce(e.s);
}

ResidueElement ResidueField::element(const Polynomial& p) const { return ResidueElement(*this, p); }

Polynomial ResidueField::project_rep(const RationalFunction& f) const {
    if (f.is_zero()) return {};
    if (order(f, *modulus_) < 0) throw NotInLocalRing("function has a pole at the modulus");
    if (f.is_polynomial()) return reduce(f.numerator());
    return multiply(f.numerator(), invert(f.denominator()));
}

ResidueElement ResidueField::project(const RationalFunction& f) const { return element(project_rep(f)); }

ResidueElement::ResidueElement(ResidueField field, const Polynomial& p)
    : field_(std::move(field)), rep_(field_.reduce(p)) {}

namespace {

void same_field(const ResidueField& a, const ResidueField& b) {
    if (!(a == b)) throw UsageError("residue elements over different fields");
}

}  // namespace

ResidueElement ResidueElement::operator+(const ResidueElement& rhs) const {
    same_field(field_, rhs.field_);
    return ResidueElement(field_, rep_ + rhs.rep_);
}

ResidueElement ResidueElement::operator-(const ResidueElement& rhs) const {
    same_field(field_, rhs.field_);
    return ResidueElement(field_, rep_ - rhs.rep_);
}

ResidueElement ResidueElement::operator*(const ResidueElement& rhs) const {
    same_field(field_, rhs.field_);
    return ResidueElement(field_, rep_ * rhs.rep_);
}

ResidueElement ResidueElement::operator-() const { return ResidueElement(field_, -rep_); }

ResidueElement ResidueElement::inverse() const { return ResidueElement(field_, field_.invert(rep_)); }

ResidueElement residue_project(const RationalFunction& f, const ResidueField& field) { return field.project(f); }

ResidueElement residue_inverse(const ResidueElement& x) { return x.inverse(); }

}  // namespace desing
