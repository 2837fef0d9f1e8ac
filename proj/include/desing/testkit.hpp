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

#ifndef DESING_TESTKIT_HPP
#define DESING_TESTKIT_HPP

#include <cstdint>
#include <vector>

#include "desing/system.hpp"

namespace desing {

/// Largest l in [1, bound] with sigma^l(q) | monic num(det A) by trial division, else 0.
int dispersion_by_scan(const DifferenceSystem& sys, const Polynomial& q, int bound);
/// Same question answered by Sylvester determinants res_z(sigma^l(q), num(det A)) over Q.
int dispersion_by_resultant(const DifferenceSystem& sys, const Polynomial& q, int bound);
/// Both routes; std::logic_error when they disagree.
int brute_dispersion(const DifferenceSystem& sys, const Polynomial& q, int bound);

/// Plain Sylvester-matrix resultant with Gaussian elimination over Q.
Rational sylvester_resultant(const Polynomial& a, const Polynomial& b);

struct PlantedInstance {
    DifferenceSystem clean;    // polynomial, det a product of distinct linear factors
    RationalMatrix planted_T;  // polynomial, gauge(singular, planted_T) == clean
    DifferenceSystem singular;
    std::uint64_t seed;
};

/**
 * clean = phi(W)^-1 Delta W for an elementary unimodular W and a diagonal
 * Delta of distinct linear factors; planted_T is a product of `steps` S and D
 * factors, starting with a D whenever steps > 0. Deterministic in seed.
 */
PlantedInstance make_planted(std::uint64_t seed, std::size_t d, int max_degree, int steps);

/// A clean system times 1/(z - a) with a left of every root of det(clean): never removable.
DifferenceSystem make_control(std::uint64_t seed, std::size_t d);

/// sigma(y) == A y entry-wise, sigma the system's shift.
bool check_solution(const DifferenceSystem& sys, const std::vector<RationalFunction>& y);

}  // namespace desing

#endif  // DESING_TESTKIT_HPP
