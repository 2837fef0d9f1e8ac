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

#ifndef DESING_DOCUMENT_HPP
#define DESING_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/desing.hpp"
#include "json.hpp"

namespace desing {

using Json = nlohmann::json;

/// {"variable": "z", "matrix": [["0", "1"], ...], "direction": "forward"}
struct SystemDocument {
    std::string variable = "z";
    RationalMatrix matrix;
    Direction direction = Direction::forward;

    DifferenceSystem system() const { return DifferenceSystem(matrix, direction); }
};

struct CertificateDocument {
    std::string variable = "z";
    Side side = Side::r;
    RationalMatrix transformation;
    std::vector<TrailStep> trail;
    RationalMatrix transformed;
    Status status = Status::not_desingularizable;
    std::vector<ModulusRecord> report;
    std::optional<Polynomial> blocking;
};

Json matrix_to_json(const RationalMatrix& m, const std::string& variable);
/// ParseError on malformed grids or entries.
RationalMatrix matrix_from_json(const Json& j, const std::string& variable);

Json system_to_json(const SystemDocument& doc);
SystemDocument system_from_json(const Json& j);

CertificateDocument make_certificate_document(const DesingOutcome& outcome, Side side,
                                              const std::string& variable = "z");
Json certificate_to_json(const CertificateDocument& doc);
CertificateDocument certificate_from_json(const Json& j);

/// Parses JSON text; ParseError with the byte position on malformed input.
Json parse_json(const std::string& text);

/// Rebuilds the certificate and claimed outcome against the system it was issued for.
struct LoadedCertificate {
    GaugeCertificate certificate;
    DesingOutcome claims;
};
LoadedCertificate load_certificate(const CertificateDocument& doc, const DifferenceSystem& sys);

}  // namespace desing

#endif  // DESING_DOCUMENT_HPP
