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

#include "desing/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "desing/document.hpp"
#include "desing/expression.hpp"

namespace desing {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

SystemDocument load_system(const std::string& path) { return system_from_json(parse_json(read_file(path))); }

Polynomial parse_pole(const std::string& text, const std::string& variable) {
    const RationalFunction f = parse_expression(text, variable);
    if (!f.is_polynomial() || f.numerator().is_constant())
        throw UsageError("--pole must be a non-constant polynomial");
    return f.numerator().monic();
}

int max_k_default() {
    const char* env = std::getenv("DESING_MAX_K");
    if (env == nullptr || *env == '\0') return kDefaultMaxK;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000000) throw UsageError("DESING_MAX_K must be a positive integer");
    return static_cast<int>(v);
}

void print_matrix(std::ostream& out, const RationalMatrix& m, const std::string& var) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? ", " : "") << to_string(m(i, j), var);
        out << "]\n";
    }
}

void print_outcome(std::ostream& out, const DesingOutcome& o, const std::string& var) {
    out << "status: " << to_string(o.status) << '\n';
    if (o.blocking) out << "blocked at: " << to_string(*o.blocking, var) << '\n';
    out << "T:\n";
    print_matrix(out, o.certificate.transformation, var);
    out << "transformed:\n";
    print_matrix(out, o.certificate.target.matrix(), var);
    for (const auto& r : o.achieved)
        out << to_string(r.modulus, var) << ": order " << r.old_order << " -> " << r.new_order << ", rank "
            << r.old_rank << " -> " << r.new_rank << '\n';
}

Json side_json(const DifferenceSystem& sys, const PoleSide& side, const std::string& var) {
    Json poles = Json::array();
    for (const auto& p : side.poles) {
        Json e{{"factor", to_string(p.factor, var)},
               {"multiplicity", p.multiplicity},
               {"phi_minimal", p.phi_minimal},
               {"dispersion", p.dispersion},
               {"class", p.class_id},
               {"offset", p.offset},
               {"classification", to_string(classify(sys, p.factor))}};
        e["root"] = p.root ? Json(to_string(*p.root)) : Json(nullptr);
        poles.push_back(std::move(e));
    }
    Json classes = Json::array();
    for (const auto& cls : side.classes) {
        Json c = Json::array();
        for (std::size_t idx : cls) c.push_back(to_string(side.poles[idx].factor, var));
        classes.push_back(std::move(c));
    }
    return Json{{"poles", poles}, {"classes", classes}};
}

void print_side(std::ostream& out, const char* title, const Json& side) {
    out << title << '\n';
    if (side["poles"].empty()) out << "  none\n";
    for (const auto& p : side["poles"]) {
        out << "  " << p["factor"].get<std::string>() << ": multiplicity " << p["multiplicity"].get<int>();
        if (!p["root"].is_null()) out << ", root " << p["root"].get<std::string>();
        out << ", " << (p["phi_minimal"].get<bool>() ? "minimal" : "not minimal") << ", dispersion "
            << p["dispersion"].get<int>() << ", class " << p["class"].get<std::size_t>() << " offset "
            << p["offset"].get<long>() << ", " << p["classification"].get<std::string>() << '\n';
    }
}

struct Options {
    std::string file, cert_file, pole, algorithm = "A", side = "r", out_file;
    bool json = false;
    int max_k = 0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
    const SystemDocument doc = load_system(o.file);
    const DifferenceSystem sys = doc.system();
    const SingularityReport rep = singularities(sys);
    const Json r = side_json(sys, rep.r, doc.variable);
    const Json l = side_json(adjoint(sys), rep.l, doc.variable);
    if (o.json) {
        out << Json{{"r", r}, {"l", l}}.dump(2) << '\n';
    } else {
        print_side(out, "r-poles", r);
        print_side(out, "l-poles", l);
    }
    return 0;
}

int cmd_dispersion(const Options& o, std::ostream& out) {
    const SystemDocument doc = load_system(o.file);
    out << phi_dispersion(doc.system(), parse_pole(o.pole, doc.variable)) << '\n';
    return 0;
}

int emit(const Options& o, const DesingOutcome& outcome, Side side, const std::string& var, std::ostream& out) {
    const Json cert = certificate_to_json(make_certificate_document(outcome, side, var));
    if (!o.out_file.empty()) write_file(o.out_file, cert.dump(2) + "\n");
    if (o.json)
        out << cert.dump(2) << '\n';
    else
        print_outcome(out, outcome, var);
    return outcome.status == Status::not_desingularizable ? 1 : 0;
}

int cmd_desingularize(const Options& o, std::ostream& out) {
    const SystemDocument doc = load_system(o.file);
    const DifferenceSystem sys = doc.system();
    const Algorithm alg = o.algorithm == "A" ? Algorithm::A : Algorithm::B;
    const Side side = o.side == "r" ? Side::r : Side::l;
    DesingOutcome outcome = o.pole.empty()
                                ? desingularize_all(sys, side, alg)
                                : desingularize_at(side == Side::r ? sys : adjoint(sys), parse_pole(o.pole, doc.variable), alg);
    return emit(o, outcome, side, doc.variable, out);
}

int cmd_rank_reduce(const Options& o, std::ostream& out) {
    const SystemDocument doc = load_system(o.file);
    const int max_k = o.max_k > 0 ? o.max_k : max_k_default();
    DesingOutcome outcome = rank_reduce(doc.system(), parse_pole(o.pole, doc.variable), max_k);
    return emit(o, outcome, Side::r, doc.variable, out);
}

int cmd_adjoint(const Options& o, std::ostream& out) {
    const SystemDocument doc = load_system(o.file);
    const DifferenceSystem adj = adjoint(doc.system());
    out << system_to_json({doc.variable, adj.matrix(), adj.direction()}).dump(2) << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemDocument doc = load_system(o.file);
    const CertificateDocument cd = certificate_from_json(parse_json(read_file(o.cert_file)));
    if (cd.variable != doc.variable) throw UsageError("certificate and system use different variables");
    LoadedCertificate lc = load_certificate(cd, doc.system());
    const Verification v = verify_certificate(lc.certificate, lc.claims);
    if (v.ok) {
        out << "ok\n";
        return 0;
    }
    err << "verification failed: " << v.check << ": " << v.diagnostic << '\n';
    return 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Desingularization of linear difference systems", "desing"};
    app.require_subcommand(1);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "List poles, classes, dispersions and classifications");
    analyze->add_option("file", o.file, "System document")->required();
    analyze->add_flag("--json", o.json, "JSON output");

    auto* dispersion = app.add_subcommand("dispersion", "Print the dispersion at a pole");
    dispersion->add_option("file", o.file, "System document")->required();
    dispersion->add_option("--pole", o.pole, "Pole polynomial")->required();

    auto* desing = app.add_subcommand("desingularize", "Remove a pole, or every pole of one side");
    desing->add_option("file", o.file, "System document")->required();
    desing->add_option("--pole", o.pole, "Pole polynomial");
    desing->add_option("--algorithm", o.algorithm, "A or B")->check(CLI::IsMember({"A", "B"}));
    desing->add_option("--side", o.side, "r or l")->check(CLI::IsMember({"r", "l"}));
    desing->add_option("--out", o.out_file, "Write the certificate here");
    desing->add_flag("--json", o.json, "Print the certificate as JSON");

    auto* rank = app.add_subcommand("rank-reduce", "Lower the leading rank at a pole");
    rank->add_option("file", o.file, "System document")->required();
    rank->add_option("--pole", o.pole, "Pole polynomial")->required();
    rank->add_option("--max-k", o.max_k, "Search bound (default 64 or DESING_MAX_K)")->check(CLI::PositiveNumber);
    rank->add_option("--out", o.out_file, "Write the certificate here");

    auto* adj = app.add_subcommand("adjoint", "Print the adjoint system");
    adj->add_option("file", o.file, "System document")->required();

    auto* verify = app.add_subcommand("verify", "Check a certificate against its system");
    verify->add_option("system", o.file, "System document")->required();
    verify->add_option("certificate", o.cert_file, "Certificate document")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (dispersion->parsed()) return cmd_dispersion(o, out);
        if (desing->parsed()) return cmd_desingularize(o, out);
        if (rank->parsed()) return cmd_rank_reduce(o, out);
        if (adj->parsed()) return cmd_adjoint(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
    } catch (const desing::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace desing
