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

#include "desing/system.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace desing {

DifferenceSystem::DifferenceSystem(RationalMatrix a, Direction direction)
    : a_(std::move(a)), direction_(direction) {
    if (a_.size() == 0) throw std::invalid_argument("empty system matrix");
    den_ = mat_den(a_);
    det_ = desing::det(a_);
    if (det_.is_zero()) throw SingularMatrix("system matrix is singular");
}

DifferenceSystem gauge(const DifferenceSystem& sys, const RationalMatrix& t) {
    if (t.size() != sys.size()) throw std::invalid_argument("transformation size mismatch");
    const RationalMatrix tinv = inverse(t);
    return DifferenceSystem(shift(tinv, step(sys.direction())) * sys.matrix() * t, sys.direction());
}

DifferenceSystem adjoint(const DifferenceSystem& sys) {
    return DifferenceSystem(shift(inverse(sys.matrix()), -step(sys.direction())), opposite(sys.direction()));
}

DifferenceSystem scaled(const DifferenceSystem& sys, const RationalFunction& h) {
    return DifferenceSystem(h * sys.matrix(), sys.direction());
}

DifferenceSystem reflect(const DifferenceSystem& sys) {
    return DifferenceSystem(reflect(sys.matrix()), opposite(sys.direction()));
}

Polynomial reflect_modulus(const Polynomial& q) { return reflect(q).monic(); }

std::vector<Polynomial> pole_basis(const DifferenceSystem& sys, std::span<const Polynomial> hints) {
    if (sys.den().is_constant()) return {};
    std::vector<Polynomial> inputs;
    const auto& a = sys.matrix();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Polynomial& e = a(i, j).denominator();
            if (e.is_constant()) continue;
            if (std::find(inputs.begin(), inputs.end(), e) == inputs.end()) inputs.push_back(e);
        }
    for (const auto& h : hints) {
        const Polynomial g = gcd(h, sys.den());
        if (!g.is_constant()) inputs.push_back(g);
    }
    std::vector<Polynomial> basis = shift_refine(inputs);
    std::erase_if(basis, [&](const Polynomial& f) { return !divides(f, sys.den()); });
    return basis;
}

namespace {

// Basis of {q} and the given polynomial; q must come out whole.
std::vector<Polynomial> refine_with(const Polynomial& q, const Polynomial& other) {
    const Polynomial inputs[] = {q, other};
    std::vector<Polynomial> basis = shift_refine(inputs);
    if (std::find(basis.begin(), basis.end(), q) == basis.end()) {
        for (const auto& f : basis)
            if (divides(f, q)) throw ModulusSplit(f);
    }
    return basis;
}

}  // namespace

bool is_phi_minimal(const DifferenceSystem& sys, const Polynomial& q) {
    check_modulus(q);
    if (!divides(q, sys.den())) throw NotAPole("polynomial does not divide the denominator");
    const long s = step(sys.direction());
    for (const auto& f : refine_with(q, sys.den())) {
        if (!divides(f, sys.den())) continue;
        if (auto k = shift_offset(q, f); k && s * *k > 0) return false;
    }
    return true;
}

int phi_dispersion(const DifferenceSystem& sys, const Polynomial& q) {
    check_modulus(q);
    const Polynomial num = sys.det().numerator().monic();
    if (num.is_constant()) return 0;
    const long s = step(sys.direction());
    long best = 0;
    for (const auto& f : refine_with(q, num)) {
        if (!divides(f, num)) continue;
        if (auto k = shift_offset(q, f); k && s * *k > best) best = s * *k;
    }
    return static_cast<int>(best);
}

PoleSide pole_side(const DifferenceSystem& sys) {
    PoleSide side;
    side.direction = sys.direction();
    const long s = step(sys.direction());
    const std::vector<Polynomial> basis = pole_basis(sys);
    for (const auto& f : basis) {
        PoleInfo info;
        info.factor = f;
        info.multiplicity = -order(sys.matrix(), f);
        if (f.degree() == 1) info.root = -f.coefficient(0);
        info.phi_minimal = is_phi_minimal(sys, f);
        info.dispersion = phi_dispersion(sys, f);
        side.poles.push_back(std::move(info));
    }
    std::vector<bool> assigned(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<std::pair<long, std::size_t>> members;
        for (std::size_t j = i; j < basis.size(); ++j) {
            if (assigned[j]) continue;
            if (auto k = shift_offset(basis[i], basis[j])) {
                members.emplace_back(s * *k, j);
                assigned[j] = true;
            }
        }
        std::sort(members.begin(), members.end());
        const long base = members.front().first;
        std::vector<std::size_t> cls;
        for (const auto& [off, j] : members) {
            side.poles[j].class_id = side.classes.size();
            side.poles[j].offset = off - base;
            cls.push_back(j);
        }
        side.classes.push_back(std::move(cls));
    }
    return side;
}

SingularityReport singularities(const DifferenceSystem& sys) { return {pole_side(sys), pole_side(adjoint(sys))}; }

}  // namespace desing
