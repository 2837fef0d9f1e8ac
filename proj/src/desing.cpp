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

#include "desing/desing.hpp"

#include <algorithm>
#include <utility>

namespace desing {

namespace {

// q | den(A) for a modulus that may still be reducible. A partial overlap
// proves q reducible and is reported as a split.
bool pole_at(const DifferenceSystem& sys, const Polynomial& q) {
    const Polynomial g = gcd(q, sys.den());
    if (g.is_constant()) return false;
    if (g == q) return true;
    throw ModulusSplit(g);
}

// Zero test that refuses to call a zero divisor nonzero.
bool is_zero_checked(const ResidueMatrix& m) {
    bool zero = true;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Polynomial& r = m.rep(i, j);
            if (r.is_zero()) continue;
            zero = false;
            if (!r.is_constant()) {
                Polynomial g = gcd(r, m.field().modulus());
                if (!g.is_constant()) throw ModulusSplit(std::move(g));
            }
        }
    return zero;
}

PolynomialMatrix shear(std::size_t d, int count, const Polynomial& m) {
    PolynomialMatrix out = PolynomialMatrix::identity(d);
    for (int i = 0; i < count; ++i) out(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = m;
    return out;
}

int lc_rank(const DifferenceSystem& sys, const Polynomial& m) {
    return residue_rank(leading_matrix(sys.matrix(), m));
}

ModulusRecord make_record(const DifferenceSystem& source, const DifferenceSystem& target, const Polynomial& m) {
    return {m, order(source.matrix(), m), order(target.matrix(), m), lc_rank(source, m), lc_rank(target, m)};
}

RationalFunction q_power(const Polynomial& q, int n) {
    if (n >= 0) return RationalFunction(power(q, static_cast<unsigned>(n)));
    return RationalFunction(Polynomial(1L), power(q, static_cast<unsigned>(-n)));
}

std::size_t multiplicity_sum(const Polynomial& p) {
    std::size_t total = 0;
    for (const auto& f : squarefree_factorization(p)) total += static_cast<std::size_t>(f.multiplicity);
    return total;
}

// Outcome of one single-pole algorithm run on a forward system.
struct Run {
    bool ok = false;
    RationalMatrix t;
    std::vector<TrailStep> trail;
    DifferenceSystem target;
    std::vector<IterationRecord> iterations;
    int dispersion = 0;
    int final_dispersion = 0;
    std::vector<Polynomial> segment;
};

void require_single_simple_pole(const DifferenceSystem& sys, const Polynomial& q) {
    check_modulus(q);
    if (sys.den() != q) throw UsageError("expected a single simple pole at the modulus");
}

Run run_A(const DifferenceSystem& sys, const Polynomial& q) {
    require_single_simple_pole(sys, q);
    const std::size_t d = sys.size();
    Run run{false, RationalMatrix::identity(d), {}, sys, {}, 0, 0, {q}};
    Polynomial m = q;
    int ell = phi_dispersion(sys, m);
    run.dispersion = ell;
    while (ell > 0 && pole_at(run.target, m)) {
        ColumnReduction cr = column_reduce(leading_matrix(run.target.matrix(), m));
        const PolynomialMatrix dm = shear(d, cr.rank, m);
        const RationalMatrix step = lift(cr.S * dm);
        run.target = gauge(run.target, step);
        run.t = run.t * step;
        run.trail.push_back({StepKind::S, cr.S, m});
        run.trail.push_back({StepKind::D, dm, m});
        run.iterations.push_back({m, ell, cr.rank, 0});
        m = shift(m, 1L);
        run.segment.push_back(m);
        ell = phi_dispersion(run.target, m);
    }
    run.final_dispersion = ell;
    run.ok = std::none_of(run.segment.begin(), run.segment.end(),
                          [&](const Polynomial& s) { return pole_at(run.target, s); });
    return run;
}

std::optional<FactorialRelation> factorial_fwd(const DifferenceSystem& sys, const Polynomial& q, int k_max) {
    check_modulus(q);
    if (!pole_at(sys, q)) throw NotAPole("modulus is not a pole of the system");
    if (k_max < 1) return std::nullopt;
    const int n = -order(sys.matrix(), q);
    const RationalMatrix at = q_power(q, n) * sys.matrix();
    const ResidueField field(q);
    ResidueMatrix prod = project(at, field);
    for (int k = 1; k <= k_max; ++k) {
        ResidueMatrix nk = project(shift(at, -static_cast<long>(k)), field);
        ResidueMatrix next = prod * nk;
        if (is_zero_checked(next)) return FactorialRelation{k, std::move(prod), std::move(nk)};
        prod = std::move(next);
    }
    return std::nullopt;
}

// U * D from N = pi_q(phi^-k(q^n A)); returns the two factors and the shear modulus.
struct Compression {
    PolynomialMatrix u;
    PolynomialMatrix d;
    Polynomial modulus;
    int s;
};

Compression finish(RowCompression rc, const Polynomial& q, int k) {
    const PolynomialMatrix pinv = inverse(rc.P).reps();
    const Polynomial mk = shift(q, static_cast<long>(k - 1));
    return {shift(pinv, static_cast<long>(k - 1)), shear(pinv.size(), rc.s, mk), mk, rc.s};
}

// Rank reduction: the first d - rank(N) rows of P annihilate N.
Compression compress(const ResidueMatrix& n, const Polynomial& q, int k) { return finish(row_compress(n), q, k); }

// Algorithm B: shear only along the row space of M, which already lies in the
// left kernel of N. This is the smallest shear the factorial step admits.
Compression compress_factorial(const FactorialRelation& fr, const Polynomial& q) {
    return finish(row_space_basis(fr.M), q, fr.k);
}

constexpr int kPassCap = 256;

Run run_B(const DifferenceSystem& sys, const Polynomial& q) {
    require_single_simple_pole(sys, q);
    const std::size_t d = sys.size();
    Run run{false, RationalMatrix::identity(d), {}, sys, {}, 0, 0, {}};
    run.dispersion = phi_dispersion(sys, q);
    for (int j = 0; j <= std::max(run.dispersion, 0); ++j) run.segment.push_back(shift(q, static_cast<long>(j)));
    bool cleared = false;
    for (int pass = 0; pass < kPassCap; ++pass) {
        if (!pole_at(run.target, q)) {
            cleared = true;
            break;
        }
        const int ell = phi_dispersion(run.target, q);
        if (ell <= 0) break;
        auto fr = factorial_fwd(run.target, q, ell);
        if (!fr) break;
        Compression c = compress_factorial(*fr, q);
        const RationalMatrix step = lift(c.u * c.d);
        run.target = gauge(run.target, step);
        run.t = run.t * step;
        run.trail.push_back({StepKind::U, c.u, c.modulus});
        run.trail.push_back({StepKind::D, c.d, c.modulus});
        run.iterations.push_back({c.modulus, ell, c.s, fr->k});
    }
    run.final_dispersion = phi_dispersion(run.target, q);
    run.ok = cleared && std::none_of(run.segment.begin(), run.segment.end(),
                                     [&](const Polynomial& s) { return pole_at(run.target, s); });
    return run;
}

DesingOutcome single_outcome(const DifferenceSystem& sys, const Polynomial& q, Run run) {
    DesingOutcome out{{RationalMatrix::identity(sys.size()), {}, sys, sys}, Status::not_desingularizable, {}, {}, {}};
    if (run.ok) {
        out.certificate = {run.t, run.trail, sys, run.target};
        out.status = Status::fully_desingularized;
    } else {
        out.blocking = q;
    }
    for (const auto& m : run.segment) out.achieved.push_back(make_record(sys, out.certificate.target, m));
    out.passes.push_back({q, sys, run.dispersion, run.ok, std::move(run.iterations), run.final_dispersion,
                          run.ok ? run.t : RationalMatrix::identity(sys.size())});
    return out;
}

DesingOutcome rank_reduce_fwd(const DifferenceSystem& sys, const Polynomial& q, int max_k) {
    check_modulus(q);
    if (!pole_at(sys, q)) throw NotAPole("modulus is not a pole of the system");
    if (!is_phi_minimal(sys, q)) throw UsageError("rank reduction needs a phi-minimal pole");
    const std::size_t d = sys.size();
    const int ell = phi_dispersion(sys, q);
    const long wide = static_cast<long>(d * multiplicity_sum(sys.den()));
    const int bound = static_cast<int>(std::min<long>(std::max<long>(ell, wide), max_k));
    const ResidueField field(q);

    DifferenceSystem cur = sys;
    RationalMatrix t = RationalMatrix::identity(d);
    std::vector<TrailStep> trail;
    std::vector<IterationRecord> iterations;
    for (int pass = 0; pass < kPassCap && pole_at(cur, q); ++pass) {
        const int n = -order(cur.matrix(), q);
        const RationalMatrix at = q_power(q, n) * cur.matrix();
        ResidueMatrix prod = project(at, field);
        const int r = residue_rank(prod);
        std::optional<ResidueMatrix> found;
        int k = 0;
        for (int j = 1; j <= bound; ++j) {
            ResidueMatrix nj = project(shift(at, -static_cast<long>(j)), field);
            prod = prod * nj;
            if (residue_rank(prod) < r) {
                found = std::move(nj);
                k = j;
                break;
            }
        }
        if (!found) break;
        Compression c = compress(*found, q, k);
        const RationalMatrix step = lift(c.u * c.d);
        DifferenceSystem next = gauge(cur, step);
        if (order(next.matrix(), q) < -n) break;
        cur = std::move(next);
        t = t * step;
        trail.push_back({StepKind::U, c.u, c.modulus});
        trail.push_back({StepKind::D, c.d, c.modulus});
        iterations.push_back({c.modulus, ell, c.s, k});
    }

    const ModulusRecord rec = make_record(sys, cur, q);
    DesingOutcome out{{t, trail, sys, cur}, Status::not_desingularizable, {rec}, {}, {}};
    if (rec.new_order >= 0)
        out.status = Status::fully_desingularized;
    else if (rec.new_order > rec.old_order)
        out.status = Status::partially_desingularized;
    else if (rec.new_rank < rec.old_rank)
        out.status = Status::rank_reduced;
    if (out.status == Status::not_desingularizable) {
        out.certificate = {RationalMatrix::identity(d), {}, sys, sys};
        out.achieved = {make_record(sys, sys, q)};
        out.blocking = q;
    }
    out.passes.push_back({q, sys, ell, out.status != Status::not_desingularizable, std::move(iterations),
                          phi_dispersion(out.certificate.target, q), out.certificate.transformation});
    return out;
}

DesingOutcome at_once(const DifferenceSystem& sys, const Polynomial& q, Algorithm algorithm,
                      const std::vector<Polynomial>& hints) {
    const std::size_t d = sys.size();
    const std::vector<Polynomial> basis = pole_basis(sys, hints);
    std::vector<Polynomial> targets;
    for (const auto& f : basis)
        if (divides(f, q)) targets.push_back(f);

    DifferenceSystem cur = sys;
    RationalMatrix t = RationalMatrix::identity(d);
    std::vector<TrailStep> trail;
    std::vector<PassRecord> passes;
    std::vector<Polynomial> touched;
    std::optional<Polynomial> blocking;

    for (const auto& target : targets) {
        std::vector<std::pair<long, Polynomial>> members;
        for (const auto& f : basis)
            if (auto j = shift_offset(target, f); j && *j >= 0) members.emplace_back(*j, f);
        std::sort(members.begin(), members.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [j, m] : members) {
            if (std::find(touched.begin(), touched.end(), m) == touched.end()) touched.push_back(m);
            const int cap = -order(cur.matrix(), m) + 2;
            for (int pass = 0; pole_at(cur, m); ++pass) {
                if (pass >= cap) {
                    blocking = m;
                    break;
                }
                SimplePole sp = to_simple_pole(cur, m);
                Run run = algorithm == Algorithm::A ? run_A(sp.scaled, m) : run_B(sp.scaled, m);
                passes.push_back({m, sp.scaled, run.dispersion, run.ok, run.iterations, run.final_dispersion,
                                  run.ok ? run.t : RationalMatrix::identity(d)});
                if (!run.ok) {
                    blocking = m;
                    break;
                }
                cur = gauge(cur, run.t);
                t = t * run.t;
                trail.insert(trail.end(), run.trail.begin(), run.trail.end());
            }
            if (blocking) break;
        }
        if (blocking) break;
    }

    DesingOutcome out{{t, trail, sys, cur}, Status::fully_desingularized, {}, std::move(passes), blocking};
    std::sort(touched.begin(), touched.end(), canonical_less);
    for (const auto& m : touched) out.achieved.push_back(make_record(sys, cur, m));
    if (blocking) {
        const bool improved = std::any_of(targets.begin(), targets.end(), [&](const Polynomial& f) {
            return order(cur.matrix(), f) > order(sys.matrix(), f);
        });
        out.status = improved ? Status::partially_desingularized : Status::not_desingularizable;
    }
    return out;
}

DesingOutcome at_fwd(const DifferenceSystem& sys, const Polynomial& q, Algorithm algorithm) {
    check_modulus(q);
    if (!divides(q, sys.den())) throw NotAPole("polynomial does not divide the denominator");
    std::vector<Polynomial> hints{q};
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return at_once(sys, q, algorithm, hints);
        } catch (const ModulusSplit& e) {
            if (std::find(hints.begin(), hints.end(), e.factor()) != hints.end()) throw;
            hints.push_back(e.factor());
        }
    }
    throw Error("modulus splitting did not settle");
}

DesingOutcome all_fwd(const DifferenceSystem& sys, Algorithm algorithm) {
    const std::size_t d = sys.size();
    const PoleSide side = pole_side(sys);
    DifferenceSystem cur = sys;
    RationalMatrix t = RationalMatrix::identity(d);
    std::vector<TrailStep> trail;
    DesingOutcome out{{t, {}, sys, sys}, Status::fully_desingularized, {}, {}, {}};
    bool all_full = true, progress = false;
    for (const auto& cls : side.classes) {
        std::optional<Polynomial> base;
        for (std::size_t idx : cls)
            if (divides(side.poles[idx].factor, cur.den())) {
                base = side.poles[idx].factor;
                break;
            }
        if (!base) continue;
        DesingOutcome part = at_fwd(cur, *base, algorithm);
        if (part.status == Status::fully_desingularized)
            progress = true;
        else {
            all_full = false;
            if (part.status == Status::partially_desingularized) progress = true;
            if (!out.blocking) out.blocking = part.blocking;
        }
        cur = part.certificate.target;
        t = t * part.certificate.transformation;
        trail.insert(trail.end(), part.certificate.trail.begin(), part.certificate.trail.end());
        out.passes.insert(out.passes.end(), part.passes.begin(), part.passes.end());
    }
    out.certificate = {t, trail, sys, cur};
    for (const auto& p : side.poles) out.achieved.push_back(make_record(sys, cur, p.factor));
    out.status = all_full ? Status::fully_desingularized
                 : progress ? Status::partially_desingularized
                            : Status::not_desingularizable;
    return out;
}

DesingOutcome reflect_outcome(const DesingOutcome& in, const DifferenceSystem& original) {
    DesingOutcome out{{reflect(in.certificate.transformation), {}, original, reflect(in.certificate.target)},
                      in.status,
                      {},
                      {},
                      {}};
    for (const auto& s : in.certificate.trail) {
        const Polynomial m = reflect_modulus(s.modulus);
        PolynomialMatrix r = reflect(s.matrix);
        const Rational lc = reflect(s.modulus).leading();
        if (s.kind == StepKind::D && lc != 1) {
            // diag(-q', 1) = diag(-1, 1) diag(q', 1): keep the shear monic.
            PolynomialMatrix c = PolynomialMatrix::identity(r.size());
            int count = 0;
            for (std::size_t i = 0; i < r.size(); ++i)
                if (!r(i, i).is_constant()) c(i, i) = Polynomial(lc), ++count;
            out.certificate.trail.push_back({StepKind::U, c, m});
            r = shear(r.size(), count, m);
        }
        out.certificate.trail.push_back({s.kind, r, m});
    }
    for (const auto& r : in.achieved)
        out.achieved.push_back({reflect_modulus(r.modulus), r.old_order, r.new_order, r.old_rank, r.new_rank});
    for (const auto& p : in.passes) {
        PassRecord rp{reflect_modulus(p.modulus), reflect(p.scaled), p.dispersion, p.succeeded, {},
                      p.final_dispersion, reflect(p.transformation)};
        for (const auto& it : p.iterations)
            rp.iterations.push_back({reflect_modulus(it.modulus), it.dispersion, it.rank, it.k});
        out.passes.push_back(std::move(rp));
    }
    if (in.blocking) out.blocking = reflect_modulus(*in.blocking);
    return out;
}

// Runs a forward-only routine on sys, reflecting backward systems through z -> -z.
template <class F>
DesingOutcome forward_only(const DifferenceSystem& sys, const Polynomial& q, F f) {
    if (sys.direction() == Direction::forward) return f(sys, q);
    return reflect_outcome(f(reflect(sys), reflect_modulus(q)), sys);
}

}  // namespace

SimplePole to_simple_pole(const DifferenceSystem& sys, const Polynomial& q) {
    check_modulus(q);
    if (!divides(q, sys.den())) throw NotAPole("polynomial does not divide the denominator");
    Polynomial h = exact_quotient(sys.den(), q);
    DifferenceSystem s = scaled(sys, RationalFunction(h));
    return {std::move(h), std::move(s)};
}

DesingOutcome desingularize_A(const DifferenceSystem& sys, const Polynomial& q) {
    return forward_only(sys, q, [](const DifferenceSystem& s, const Polynomial& m) {
        return single_outcome(s, m, run_A(s, m));
    });
}

DesingOutcome desingularize_B(const DifferenceSystem& sys, const Polynomial& q) {
    return forward_only(sys, q, [](const DifferenceSystem& s, const Polynomial& m) {
        return single_outcome(s, m, run_B(s, m));
    });
}

std::optional<FactorialRelation> factorial_check(const DifferenceSystem& sys, const Polynomial& q, int k_max) {
    if (sys.direction() == Direction::forward) return factorial_fwd(sys, q, k_max);
    // In reflected coordinates the residue matrices live over q(-z).
    return factorial_fwd(reflect(sys), reflect_modulus(q), k_max);
}

DesingOutcome rank_reduce(const DifferenceSystem& sys, const Polynomial& q, int max_k) {
    return forward_only(sys, q, [max_k](const DifferenceSystem& s, const Polynomial& m) {
        return rank_reduce_fwd(s, m, max_k);
    });
}

DesingOutcome desingularize_at(const DifferenceSystem& sys, const Polynomial& q, Algorithm algorithm) {
    return forward_only(sys, q, [algorithm](const DifferenceSystem& s, const Polynomial& m) {
        return at_fwd(s, m, algorithm);
    });
}

DesingOutcome desingularize_all(const DifferenceSystem& sys, Side side, Algorithm algorithm) {
    const DifferenceSystem base = side == Side::r ? sys : adjoint(sys);
    if (base.direction() == Direction::forward) return all_fwd(base, algorithm);
    return reflect_outcome(all_fwd(reflect(base), algorithm), base);
}

Classification classify(const DifferenceSystem& sys, const Polynomial& q) {
    if (desingularize_at(sys, q).status != Status::fully_desingularized) return Classification::not_removable;
    // Class members sigma^-j(q), j > 0, still in den: the farthest one decides.
    const long s = step(sys.direction());
    const Polynomial hint[] = {q};
    const std::vector<Polynomial> basis = pole_basis(sys, hint);
    std::optional<std::pair<long, Polynomial>> farthest;
    for (const auto& g : basis) {
        if (!divides(g, q)) continue;
        for (const auto& f : basis)
            if (auto j = shift_offset(g, f); j && s * *j < 0 && (!farthest || s * *j < farthest->first))
                farthest = std::make_pair(s * *j, f);
    }
    if (!farthest) return Classification::apparent_class;
    return desingularize_at(sys, farthest->second).status == Status::fully_desingularized
               ? Classification::apparent_class
               : Classification::removable;
}

GaugeCertificate identity_certificate(const DifferenceSystem& sys) {
    return {RationalMatrix::identity(sys.size()), {}, sys, sys};
}

Verification verify_certificate(const GaugeCertificate& cert, const DesingOutcome& claims) {
    auto fail = [](std::string check, std::string diagnostic) {
        return Verification{false, std::move(check), std::move(diagnostic)};
    };
    const DifferenceSystem& src = cert.source;
    const DifferenceSystem& tgt = cert.target;
    const std::size_t d = src.size();
    if (cert.transformation.size() != d || tgt.size() != d) return fail("dimension", "sizes of T, source and target differ");
    if (tgt.direction() != src.direction()) return fail("direction", "source and target directions differ");

    try {
        if (!(gauge(src, cert.transformation) == tgt))
            return fail("gauge-mismatch", "gauge(source, T) differs from the claimed target");
    } catch (const SingularMatrix&) {
        return fail("singular-transformation", "T is not invertible");
    }

    RationalMatrix prod = RationalMatrix::identity(d);
    for (const auto& s : cert.trail) {
        if (s.matrix.size() != d) return fail("trail-product", "trail factor has the wrong size");
        prod = prod * lift(s.matrix);
    }
    if (!(prod == cert.transformation)) return fail("trail-product", "product of trail factors differs from T");

    Polynomial shear_det(1L);
    for (std::size_t i = 0; i < cert.trail.size(); ++i) {
        const auto& s = cert.trail[i];
        if (s.kind == StepKind::D) {
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    const Polynomial& e = s.matrix(r, c);
                    const bool good = r == c ? (e == Polynomial(1L) || e == s.modulus) : e.is_zero();
                    if (!good)
                        return fail("shear-shape", "step " + std::to_string(i + 1) + " is not diag(q, ..., q, 1, ..., 1)");
                }
            shear_det *= det(s.matrix);
        } else {
            const Polynomial dt = det(s.matrix);
            if (dt.is_zero() || !dt.is_constant())
                return fail("unimodular", "step " + std::to_string(i + 1) + " has non-constant determinant");
        }
    }
    if (!cert.trail.empty()) {
        if (!is_polynomial(cert.transformation)) return fail("polynomial", "T has non-polynomial entries");
        const Polynomial dt = det(to_polynomial(cert.transformation));
        if (!divides(shear_det, dt)) return fail("shear-divisibility", "det(T) is not divisible by the shear moduli");
    }

    for (const auto& r : claims.achieved) {
        const ModulusRecord actual = make_record(src, tgt, r.modulus);
        if (actual.old_order != r.old_order || actual.new_order != r.new_order)
            return fail("order-claim", "claimed orders do not match at a modulus");
        if (actual.old_rank != r.old_rank || actual.new_rank != r.new_rank)
            return fail("rank-claim", "claimed leading ranks do not match at a modulus");
    }

    const auto& a = claims.achieved;
    switch (claims.status) {
        case Status::fully_desingularized:
            if (!std::all_of(a.begin(), a.end(), [](const ModulusRecord& r) { return r.new_order >= 0; }))
                return fail("status", "full desingularization claimed but a pole remains");
            break;
        case Status::partially_desingularized:
            if (!std::any_of(a.begin(), a.end(), [](const ModulusRecord& r) { return r.new_order > r.old_order; }))
                return fail("status", "partial desingularization claimed but no order improved");
            break;
        case Status::rank_reduced:
            if (!std::any_of(a.begin(), a.end(), [](const ModulusRecord& r) {
                    return r.new_order == r.old_order && r.new_rank < r.old_rank;
                }))
                return fail("status", "rank reduction claimed but no leading rank dropped");
            break;
        case Status::not_desingularizable:
            break;
    }

    std::vector<Polynomial> inputs{src.den(), tgt.den()};
    Polynomial content;
    const PolynomialMatrix num = mat_num(src.matrix());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!num(i, j).is_zero()) content = content.is_zero() ? num(i, j).monic() : gcd(content, num(i, j));
    inputs.push_back(content);
    // A basis element met only partly by one side splits; refine and retry.
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            for (const auto& p : shift_refine(inputs))
                if (std::min(order(tgt.matrix(), p), 0) < std::min(order(src.matrix(), p), 0))
                    return fail("order-worsened", "a pole got worse at some factor");
            return {true, "", ""};
        } catch (const ModulusSplit& e) {
            inputs.push_back(e.factor());
        }
    }
    return fail("order-worsened", "could not settle a factor basis");
}

std::string to_string(Status s) {
    switch (s) {
        case Status::fully_desingularized:
            return "fully-desingularized";
        case Status::partially_desingularized:
            return "partially-desingularized";
        case Status::rank_reduced:
            return "rank-reduced";
        case Status::not_desingularizable:
            return "not-desingularizable";
    }
    return "";
}

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::S:
            return "S";
        case StepKind::D:
            return "D";
        case StepKind::U:
            return "U";
    }
    return "";
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::removable:
            return "removable";
        case Classification::apparent_class:
            return "apparent-class";
        case Classification::not_removable:
            return "not-removable";
    }
    return "";
}

}  // namespace desing
