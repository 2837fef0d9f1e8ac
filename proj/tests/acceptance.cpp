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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "desing/desing.hpp"
#include "desing/document.hpp"
#include "desing/testkit.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace desing;
using testing::F;
using testing::M;
using testing::P;

namespace {

// Collects the reasons a criterion failed; empty means pass.
class Check {
   public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok && failures_.size() < 12) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    int failed() const { return failed_; }
    int total() const { return total_; }
    const std::vector<std::string>& failures() const { return failures_; }

   private:
    std::vector<std::string> failures_;
    int failed_ = 0;
    int total_ = 0;
};

std::string show(const RationalMatrix& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", (" : "(";
        for (std::size_t j = 0; j < m.size(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += ")";
    }
    return s + ")";
}

RationalMatrix diag2(const char* a, const char* b) { return M({{a, "0"}, {"0", b}}); }

bool is_constant_nonzero(const RationalFunction& f) { return !f.is_zero() && f.is_polynomial() && f.numerator().degree() == 0; }

void ac1(Check& c) {
    const DifferenceSystem e = testing::example1();
    c.expect(phi_dispersion(e, P("z-2")) == 3, "dispersion at z-2 is not 3");
    const DesingOutcome o = desingularize_A(e, P("z-2"));
    c.expect(o.status == Status::fully_desingularized, "status " + to_string(o.status));
    const RationalMatrix t = M({{"z^3-3*z^2+2*z", "1/2"}, {"0", "1"}});
    c.expect(o.certificate.transformation == t, "T = " + show(o.certificate.transformation));
    c.expect(o.certificate.target.matrix() == M({{"1", "0"}, {"-2*z^3+2*z", "2"}}),
             "target = " + show(o.certificate.target.matrix()));
    c.expect(det(o.certificate.transformation) == F("z*(z-1)*(z-2)"), "det(T) = " + to_string(det(o.certificate.transformation)));
}

void ac2(Check& c) {
    const DifferenceSystem e = testing::example1();
    const auto fr = factorial_check(e, P("z-2"), phi_dispersion(e, P("z-2")));
    c.expect(fr.has_value(), "no factorial relation within the dispersion");
    if (fr) {
        c.expect(fr->k == 3, "k = " + std::to_string(fr->k));
        c.expect(lift(fr->M.reps()) == M({{"0", "0"}, {"-12", "6"}}), "M = " + show(lift(fr->M.reps())));
        c.expect(lift(fr->N.reps()) == M({{"0", "-3"}, {"0", "-6"}}), "N = " + show(lift(fr->N.reps())));
    }
    c.expect(oracle::factorial_index_linear(e.matrix(), 2, 10) == 3, "pointwise product oracle disagrees on k");
    const DesingOutcome a = desingularize_A(e, P("z-2"));
    const DesingOutcome b = desingularize_B(e, P("z-2"));
    c.expect(b.status == Status::fully_desingularized, "status " + to_string(b.status));
    c.expect(b.certificate.transformation == a.certificate.transformation * diag2("1/2", "1"),
             "T_B = " + show(b.certificate.transformation));
    c.expect(b.certificate.target.matrix() == M({{"1", "0"}, {"-z*(z^2-1)", "2"}}),
             "target = " + show(b.certificate.target.matrix()));
}

void ac3(Check& c) {
    const DifferenceSystem e = testing::example1();
    const DesingOutcome o = desingularize_A(e, P("z-2"));
    if (o.certificate.trail.size() < 2) {
        c.expect(false, "trail too short");
        return;
    }
    const DifferenceSystem first = gauge(e, lift(o.certificate.trail[0].matrix * o.certificate.trail[1].matrix));
    c.expect(first.matrix() == M({{"(z+1)/(z-1)", "0"}, {"-2*z-2", "2"}}), "after one step: " + show(first.matrix()));
    c.expect(phi_dispersion(first, P("z-1")) == 2, "dispersion after one step is not 2");
    c.expect(residue_rank(leading_matrix(e.matrix(), P("z-2"))) == 1, "leading rank is not 1");
}

void ac4(Check& c) {
    const DifferenceSystem b = testing::blocked();
    c.expect(classify(b, P("z+1")) == Classification::not_removable, "z+1 is not not-removable");
    c.expect(classify(b, P("z")) == Classification::not_removable, "z is not not-removable");
    c.expect(is_phi_minimal(b, P("z+1")), "z+1 is not phi-minimal");
    c.expect(phi_dispersion(b, P("z+1")) == 0, "dispersion at z+1 is not 0");
    c.expect(!is_phi_minimal(b, P("z")), "z is phi-minimal");
    const DesingOutcome at = desingularize_at(b, P("z"));
    c.expect(at.blocking && *at.blocking == P("z+1"), "blocking member is not z+1");
    c.expect(gauge(b, diag2("z", "1")).matrix() == diag2("z+1", "1/(z+1)"), "gauge by diag(z,1) differs");
}

void ac5(Check& c) {
    const DifferenceSystem s = testing::rank_example();
    const DesingOutcome o = rank_reduce(s, P("z"));
    const RationalMatrix t = M({{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "1"}});
    // Up to a constant invertible right factor.
    const RationalMatrix c0 = inverse(t) * o.certificate.transformation;
    bool constant = is_constant_nonzero(det(c0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) constant = constant && c0(i, j).is_polynomial() && c0(i, j).numerator().degree() <= 0;
    c.expect(constant, "T = " + show(o.certificate.transformation));
    c.expect(o.certificate.target.matrix() == M({{"z^2", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1/z"}}),
             "target = " + show(o.certificate.target.matrix()));
    const bool ranks = o.achieved.size() == 1 && o.achieved[0].old_rank == 2 && o.achieved[0].new_rank == 1;
    c.expect(ranks, "leading rank does not go 2 -> 1");
    c.expect(order(adjoint(s).matrix(), P("z-1")) == -1, "adjoint order at z-1 before is not -1");
    c.expect(order(adjoint(o.certificate.target).matrix(), P("z-1")) == -2, "adjoint order at z-1 after is not -2");
    c.expect(verify_certificate(o.certificate, o).ok, "certificate does not verify");
}

void ac6(Check& c) {
    c.expect(adjoint(testing::example1()).matrix() == M({{"3*(z-2)/(2*z)", "(3-z)/(2*z)"}, {"1", "0"}}),
             "A* of the first system = " + show(adjoint(testing::example1()).matrix()));
    c.expect(adjoint(testing::rank_example()).matrix() ==
                 M({{"1/(z*(z-1))", "0", "0"}, {"0", "(z-1)/z", "0"}, {"0", "0", "z-1"}}),
             "A* of the rank example = " + show(adjoint(testing::rank_example()).matrix()));
}

void ac7(Check& c) {
    const DifferenceSystem e = testing::example1();
    const std::vector<RationalFunction> y{F("z^3+5*z+6"), F("z^3+3*z^2+8*z+12")};
    c.expect(check_solution(e, y), "y does not solve the system");
    const DesingOutcome o = desingularize_A(e, P("z-2"));
    const RationalMatrix ti = inverse(o.certificate.transformation);
    std::vector<RationalFunction> x(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) x[i] += ti(i, j) * y[j];
    c.expect(check_solution(o.certificate.target, x), "inverse(T_A) y does not solve the desingularized system");
    std::vector<RationalFunction> bad = y;
    bad[0] += RationalFunction(1L);
    c.expect(!check_solution(e, bad), "a perturbed column is accepted");
}

struct Corpus {
    std::vector<PlantedInstance> planted;
    std::vector<std::string> expected;
    std::vector<DifferenceSystem> controls;
    std::vector<DesingOutcome> a, b, ca, cb;
};

Corpus load_corpus() {
    Corpus c;
    const Json manifest = parse_json(testing::slurp(testing::data_path("planted_manifest.json")));
    const int max_degree = manifest["max_degree"].get<int>();
    for (const auto& i : manifest["instances"]) {
        c.planted.push_back(make_planted(i["seed"].get<std::uint64_t>(), i["d"].get<std::size_t>(), max_degree, i["steps"].get<int>()));
        c.expected.push_back(i["expected"].get<std::string>());
    }
    for (const auto& i : manifest["controls"]) c.controls.push_back(make_control(i["seed"].get<std::uint64_t>(), i["d"].get<std::size_t>()));
    for (const auto& p : c.planted) {
        c.a.push_back(desingularize_all(p.singular, Side::r, Algorithm::A));
        c.b.push_back(desingularize_all(p.singular, Side::r, Algorithm::B));
    }
    for (const auto& s : c.controls) {
        c.ca.push_back(desingularize_all(s, Side::r, Algorithm::A));
        c.cb.push_back(desingularize_all(s, Side::r, Algorithm::B));
    }
    return c;
}

void factorial_matches(Check& c, const DesingOutcome& o, const std::string& tag) {
    for (const auto& p : o.passes) {
        if (!is_phi_minimal(p.scaled, p.modulus)) continue;
        const auto fr = factorial_check(p.scaled, p.modulus, p.dispersion);
        c.expect(fr.has_value() == p.succeeded, tag + ": factorial criterion and pass outcome differ at " + to_string(p.modulus));
        if (p.modulus.degree() == 1) {
            const Rational root = -p.modulus.coefficient(0);
            const auto k = oracle::factorial_index_linear(p.scaled.matrix(), root, p.dispersion);
            c.expect(k == (fr ? std::optional<int>(fr->k) : std::nullopt), tag + ": pointwise oracle disagrees on k");
        }
    }
}

void ac8(Check& c, const Corpus& corpus) {
    int passes_seen = 0;
    for (std::size_t i = 0; i < corpus.planted.size(); ++i) {
        const PlantedInstance& p = corpus.planted[i];
        const std::string tag = "seed " + std::to_string(p.seed);
        const DesingOutcome& a = corpus.a[i];
        const DesingOutcome& b = corpus.b[i];
        for (const auto* o : {&a, &b}) {
            const Verification v = verify_certificate(o->certificate, *o);
            c.expect(v.ok, tag + ": certificate fails " + v.check);
            c.expect(to_string(o->status) == corpus.expected[i], tag + ": status " + to_string(o->status));
            if (o->status == Status::fully_desingularized)
                c.expect(oracle::is_polynomial(inverse(o->certificate.transformation) * p.planted_T),
                         tag + ": inverse(T_alg) * planted_T is not polynomial");
        }
        c.expect(a.status == b.status, tag + ": A and B disagree on status");
        if (a.status == Status::fully_desingularized && b.status == a.status) {
            const RationalMatrix ta = a.certificate.transformation, tb = b.certificate.transformation;
            c.expect(oracle::is_polynomial(inverse(ta) * tb) && oracle::is_polynomial(inverse(tb) * ta),
                     tag + ": T_A and T_B are not mutual polynomial quotients");
        }
        std::vector<Polynomial> poles = pole_basis(p.singular);
        if (poles.empty()) poles.push_back(Polynomial::linear(Rational(static_cast<long>(p.seed % 7) - 3)));
        for (const auto& q : poles) {
            int brute = -1;
            try {
                brute = brute_dispersion(p.singular, q, 64);
            } catch (const std::logic_error&) {
            }
            c.expect(brute == phi_dispersion(p.singular, q), tag + ": dispersion routes disagree at " + to_string(q));
        }
        factorial_matches(c, a, tag + " A");
        factorial_matches(c, b, tag + " B");
        passes_seen += static_cast<int>(a.passes.size() + b.passes.size());
    }
    for (std::size_t i = 0; i < corpus.controls.size(); ++i) {
        const std::string tag = "control " + std::to_string(i);
        for (const auto* o : {&corpus.ca[i], &corpus.cb[i]}) {
            c.expect(o->status == Status::not_desingularizable, tag + ": status " + to_string(o->status));
            c.expect(verify_certificate(o->certificate, *o).ok, tag + ": certificate fails");
        }
        factorial_matches(c, corpus.ca[i], tag + " A");
        factorial_matches(c, corpus.cb[i], tag + " B");
    }
    c.expect(corpus.planted.size() == 200, "corpus does not have 200 instances");
    c.expect(passes_seen > 0, "no passes recorded");
}

void ac9(Check& c, const Corpus& corpus) {
    std::vector<const DesingOutcome*> runs;
    for (const auto& o : corpus.a) runs.push_back(&o);
    for (const auto& o : corpus.ca) runs.push_back(&o);
    const DesingOutcome e = desingularize_A(testing::example1(), P("z-2"));
    runs.push_back(&e);
    int iterations = 0;
    for (const auto* o : runs)
        for (const auto& p : o->passes) {
            const auto& its = p.iterations;
            RationalFunction shears(1L);
            for (std::size_t j = 0; j < its.size(); ++j) {
                ++iterations;
                if (j + 1 < its.size()) {
                    c.expect(its[j + 1].dispersion == its[j].dispersion - 1,
                             "dispersion does not drop by 1 at " + to_string(its[j].modulus));
                    c.expect(its[j + 1].modulus == shift(its[j].modulus, 1L), "shear moduli are not consecutive shifts");
                }
                for (int r = 0; r < its[j].rank; ++r) shears *= RationalFunction(its[j].modulus);
            }
            if (!its.empty()) c.expect(p.final_dispersion == its.back().dispersion - 1, "final dispersion is not one less");
            const RationalFunction dt = det(p.transformation);
            c.expect(is_constant_nonzero(dt / shears), "det(T) is not a constant times the product of q^r");
        }
    c.expect(iterations > 0, "no Algorithm A iterations seen");
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"AC1 example1 pipeline with Algorithm A", ac1},
        {"AC2 example1 pipeline with Algorithm B", ac2},
        {"AC3 first Algorithm A step", ac3},
        {"AC4 blocked class", ac4},
        {"AC5 rank reduction", ac5},
        {"AC6 adjoint fixtures", ac6},
        {"AC7 solution checks", ac7},
    };
    int failed = 0;
    auto report = [&failed](const std::string& name, const Check& c) {
        std::cout << (c.ok() ? "PASS " : "FAIL ") << name << " (" << c.total() - c.failed() << "/" << c.total()
                  << " checks)\n";
        for (const auto& f : c.failures()) std::cout << "    " << f << '\n';
        if (!c.ok()) ++failed;
    };
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        report(name, c);
    }
    Check c8, c9;
    try {
        const Corpus corpus = load_corpus();
        ac8(c8, corpus);
        ac9(c9, corpus);
    } catch (const std::exception& e) {
        c8.expect(false, std::string("exception: ") + e.what());
        c9.expect(false, std::string("exception: ") + e.what());
    }
    report("AC8 planted property suite", c8);
    report("AC9 dispersion decrement and shear determinants", c9);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << " in "
              << std::fixed << std::setprecision(1) << secs << " s\n";
    return failed ? 1 : 0;
}
