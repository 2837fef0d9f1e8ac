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

#include "desing/document.hpp"

#include "desing/expression.hpp"

namespace desing {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Polynomial parse_polynomial(const std::string& text, const std::string& variable) {
    const RationalFunction f = parse_expression(text, variable);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial: " + text);
    return f.numerator();
}

Status parse_status(const std::string& s) {
    for (Status st : {Status::fully_desingularized, Status::partially_desingularized, Status::rank_reduced,
                      Status::not_desingularizable})
        if (to_string(st) == s) return st;
    throw ParseError("unknown status '" + s + "'");
}

StepKind parse_kind(const std::string& s) {
    if (s == "S") return StepKind::S;
    if (s == "D") return StepKind::D;
    if (s == "U") return StepKind::U;
    throw ParseError("unknown trail kind '" + s + "'");
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m, const std::string& variable) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j), variable));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& variable) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t d = j.size();
    RationalMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != d) throw ParseError("matrix must be square");
        for (std::size_t k = 0; k < d; ++k) {
            if (!row[k].is_string()) throw ParseError("matrix entries must be expression strings");
            try {
                m(i, k) = parse_expression(row[k].get<std::string>(), variable);
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): " + e.what());
            }
        }
    }
    return m;
}

Json system_to_json(const SystemDocument& doc) {
    return Json{{"variable", doc.variable},
                {"matrix", matrix_to_json(doc.matrix, doc.variable)},
                {"direction", doc.direction == Direction::forward ? "forward" : "backward"}};
}

SystemDocument system_from_json(const Json& j) {
    SystemDocument doc;
    if (j.is_object() && j.contains("variable")) doc.variable = string_field(j, "variable");
    if (doc.variable.empty()) throw ParseError("variable name must not be empty");
    doc.matrix = matrix_from_json(field(j, "matrix"), doc.variable);
    if (j.contains("direction")) {
        const std::string dir = string_field(j, "direction");
        if (dir == "forward")
            doc.direction = Direction::forward;
        else if (dir == "backward")
            doc.direction = Direction::backward;
        else
            throw ParseError("direction must be 'forward' or 'backward'");
    }
    return doc;
}

CertificateDocument make_certificate_document(const DesingOutcome& outcome, Side side, const std::string& variable) {
    return {variable,
            side,
            outcome.certificate.transformation,
            outcome.certificate.trail,
            outcome.certificate.target.matrix(),
            outcome.status,
            outcome.achieved,
            outcome.blocking};
}

Json certificate_to_json(const CertificateDocument& doc) {
    Json trail = Json::array();
    for (const auto& s : doc.trail)
        trail.push_back({{"kind", to_string(s.kind)},
                         {"matrix", matrix_to_json(lift(s.matrix), doc.variable)},
                         {"modulus", to_string(s.modulus, doc.variable)}});
    Json moduli = Json::array();
    for (const auto& r : doc.report)
        moduli.push_back({{"modulus", to_string(r.modulus, doc.variable)},
                          {"old_order", r.old_order},
                          {"new_order", r.new_order},
                          {"old_rank", r.old_rank},
                          {"new_rank", r.new_rank}});
    Json report{{"status", to_string(doc.status)}, {"moduli", moduli}};
    if (doc.blocking) report["blocking"] = to_string(*doc.blocking, doc.variable);
    return Json{{"variable", doc.variable},
                {"side", doc.side == Side::r ? "r" : "l"},
                {"transformation", matrix_to_json(doc.transformation, doc.variable)},
                {"trail", trail},
                {"transformed", matrix_to_json(doc.transformed, doc.variable)},
                {"report", report}};
}

CertificateDocument certificate_from_json(const Json& j) {
    CertificateDocument doc;
    if (j.is_object() && j.contains("variable")) doc.variable = string_field(j, "variable");
    if (j.is_object() && j.contains("side")) {
        const std::string side = string_field(j, "side");
        if (side != "r" && side != "l") throw ParseError("side must be 'r' or 'l'");
        doc.side = side == "r" ? Side::r : Side::l;
    }
    doc.transformation = matrix_from_json(field(j, "transformation"), doc.variable);
    doc.transformed = matrix_from_json(field(j, "transformed"), doc.variable);
    const Json& trail = field(j, "trail");
    if (!trail.is_array()) throw ParseError("trail must be an array");
    for (const auto& s : trail) {
        const RationalMatrix m = matrix_from_json(field(s, "matrix"), doc.variable);
        if (!is_polynomial(m)) throw ParseError("trail factors must be polynomial matrices");
        doc.trail.push_back({parse_kind(string_field(s, "kind")), to_polynomial(m),
                             parse_polynomial(string_field(s, "modulus"), doc.variable)});
    }
    const Json& report = field(j, "report");
    doc.status = parse_status(string_field(report, "status"));
    const Json& moduli = field(report, "moduli");
    if (!moduli.is_array()) throw ParseError("report moduli must be an array");
    for (const auto& r : moduli)
        doc.report.push_back({parse_polynomial(string_field(r, "modulus"), doc.variable), int_field(r, "old_order"),
                              int_field(r, "new_order"), int_field(r, "old_rank"), int_field(r, "new_rank")});
    if (report.contains("blocking")) doc.blocking = parse_polynomial(string_field(report, "blocking"), doc.variable);
    return doc;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

LoadedCertificate load_certificate(const CertificateDocument& doc, const DifferenceSystem& sys) {
    const DifferenceSystem source = doc.side == Side::r ? sys : adjoint(sys);
    if (doc.transformation.size() != source.size() || doc.transformed.size() != source.size())
        throw ParseError("certificate size does not match the system");
    DifferenceSystem target(doc.transformed, source.direction());
    GaugeCertificate cert{doc.transformation, doc.trail, source, target};
    DesingOutcome claims{cert, doc.status, doc.report, {}, doc.blocking};
    return {std::move(cert), std::move(claims)};
}

}  // namespace desing
