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

#ifndef DESING_SYSTEM_HPP
#define DESING_SYSTEM_HPP

#include <optional>
#include <span>
#include <vector>

#include "desing/matrix.hpp"

namespace desing {

/// forward: Y(z+1) = A Y(z). backward: Y(z-1) = A Y(z).
enum class Direction { forward, backward };

/// +1 for forward, -1 for backward.
inline long step(Direction d) { return d == Direction::forward ? 1 : -1; }
inline Direction opposite(Direction d) { return d == Direction::forward ? Direction::backward : Direction::forward; }

class DifferenceSystem {
   public:
    /// Throws SingularMatrix when det(a) == 0 and std::invalid_argument for d == 0.
    explicit DifferenceSystem(RationalMatrix a, Direction direction = Direction::forward);

    const RationalMatrix& matrix() const noexcept { return a_; }
    Direction direction() const noexcept { return direction_; }
    std::size_t size() const noexcept { return a_.size(); }
    const Polynomial& den() const noexcept { return den_; }
    const RationalFunction& det() const noexcept { return det_; }

    friend bool operator==(const DifferenceSystem& x, const DifferenceSystem& y) {
        return x.direction_ == y.direction_ && x.a_ == y.a_;
    }

   private:
    RationalMatrix a_;
    Direction direction_;
    Polynomial den_;
    RationalFunction det_;
};

/// sigma(T^-1) A T with sigma the system's own shift. SingularMatrix for singular T.
DifferenceSystem gauge(const DifferenceSystem& sys, const RationalMatrix& t);
DifferenceSystem adjoint(const DifferenceSystem& sys);
/// h * A, same direction.
DifferenceSystem scaled(const DifferenceSystem& sys, const RationalFunction& h);

/**
 * The system satisfied by Y(-z): matrix A(-z) with the opposite direction.
 * Gauge by T turns into gauge by T(-z), so backward work can be done with
 * forward code.
 */
DifferenceSystem reflect(const DifferenceSystem& sys);
/// The monic generator of q(-z).
Polynomial reflect_modulus(const Polynomial& q);

/**
 * Shift-refined squarefree pole factors of den(A), sorted canonically. Extra
 * hints take part in the refinement, which lets callers force a split
 * discovered by residue arithmetic.
 */
std::vector<Polynomial> pole_basis(const DifferenceSystem& sys, std::span<const Polynomial> hints = {});

/// No positive power of the system's shift maps q onto a divisor of den(A).
bool is_phi_minimal(const DifferenceSystem& sys, const Polynomial& q);

/**
 * Largest l >= 1 with sigma^l(q) dividing the monic numerator of det(A),
 * 0 when there is none. ModulusSplit if q is not compatible with that
 * numerator's shift-refined factors.
 */
int phi_dispersion(const DifferenceSystem& sys, const Polynomial& q);

struct PoleInfo {
    Polynomial factor;
    int multiplicity = 0;
    std::optional<Rational> root;  // linear factors only
    bool phi_minimal = false;
    int dispersion = 0;
    std::size_t class_id = 0;
    /// factor == sigma^offset(first member of its class); the phi-minimal member has the largest offset.
    long offset = 0;
};

struct PoleSide {
    Direction direction = Direction::forward;
    std::vector<PoleInfo> poles;
    /// Indices into poles, each class sorted by offset.
    std::vector<std::vector<std::size_t>> classes;
};

struct SingularityReport {
    PoleSide r;  // poles of A
    PoleSide l;  // poles of the adjoint
};

PoleSide pole_side(const DifferenceSystem& sys);
SingularityReport singularities(const DifferenceSystem& sys);

}  // namespace desing

#endif  // DESING_SYSTEM_HPP
