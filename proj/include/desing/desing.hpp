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

#ifndef DESING_DESING_HPP
#define DESING_DESING_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/system.hpp"

namespace desing {

enum class StepKind { S, D, U };

struct TrailStep {
    StepKind kind;
    PolynomialMatrix matrix;
    Polynomial modulus;
};

/// T with its factorization and the two systems it relates.
struct GaugeCertificate {
    RationalMatrix transformation;
    std::vector<TrailStep> trail;
    DifferenceSystem source;
    DifferenceSystem target;
};

enum class Status { fully_desingularized, partially_desingularized, rank_reduced, not_desingularizable };
enum class Algorithm { A, B };
enum class Side { r, l };

struct ModulusRecord {
    Polynomial modulus;
    int old_order;
    int new_order;
    int old_rank;
    int new_rank;
};

/// One shear of a single-pole run.
struct IterationRecord {
    Polynomial modulus;  // the shear's modulus
    int dispersion;      // at the pole before the step
    int rank;            // r for Algorithm A, s for B and rank reduction
    int k = 0;           // factorial index, 0 for Algorithm A
};

/// One single-pole run inside a driver.
struct PassRecord {
    Polynomial modulus;
    DifferenceSystem scaled;  // simple-pole system handed to the algorithm
    int dispersion;
    bool succeeded;
    std::vector<IterationRecord> iterations;
    int final_dispersion;
    RationalMatrix transformation;
};

struct DesingOutcome {
    GaugeCertificate certificate;
    Status status;
    std::vector<ModulusRecord> achieved;
    std::vector<PassRecord> passes;
    std::optional<Polynomial> blocking;  // class member that could not be removed
};

struct SimplePole {
    Polynomial h;
    DifferenceSystem scaled;
};

/// h = den(A)/q and h*A, whose only pole is q, simple. NotAPole unless q | den(A).
SimplePole to_simple_pole(const DifferenceSystem& sys, const Polynomial& q);

/**
 * Algorithm A. Requires den(A) == q; each step column-reduces lc_q(A), shears
 * by diag(q I_r, I) and moves on to the next shift of q.
 */
DesingOutcome desingularize_A(const DifferenceSystem& sys, const Polynomial& q);

struct FactorialRelation {
    int k;
    ResidueMatrix M;  // pi_q of the product of the first k factors
    ResidueMatrix N;  // pi_q(phi^-k(q^n A))
};

/// Smallest k in [1, k_max] with a vanishing product of k + 1 factors.
std::optional<FactorialRelation> factorial_check(const DifferenceSystem& sys, const Polynomial& q, int k_max);

/// Algorithm B, same contract as desingularize_A.
DesingOutcome desingularize_B(const DifferenceSystem& sys, const Polynomial& q);

inline constexpr int kDefaultMaxK = 64;

/**
 * Lowers rank(lc_q(A)) at a phi-minimal pole while keeping ord_q. The search
 * for k stops at min(max(dispersion, d * multiplicity sum of den), max_k).
 */
DesingOutcome rank_reduce(const DifferenceSystem& sys, const Polynomial& q, int max_k = kDefaultMaxK);

/// Removes q and the poles to its right in its class, rightmost first.
DesingOutcome desingularize_at(const DifferenceSystem& sys, const Polynomial& q, Algorithm algorithm = Algorithm::A);

/// Every class of A (side r) or of the adjoint (side l).
DesingOutcome desingularize_all(const DifferenceSystem& sys, Side side, Algorithm algorithm = Algorithm::A);

enum class Classification { removable, apparent_class, not_removable };
Classification classify(const DifferenceSystem& sys, const Polynomial& q);

struct Verification {
    bool ok;
    std::string check;  // name of the first failed check, empty on success
    std::string diagnostic;
};

Verification verify_certificate(const GaugeCertificate& cert, const DesingOutcome& claims);

/// Identity certificate on sys.
GaugeCertificate identity_certificate(const DifferenceSystem& sys);

std::string to_string(Status s);
std::string to_string(StepKind k);
std::string to_string(Classification c);

}  // namespace desing

#endif  // DESING_DESING_HPP
