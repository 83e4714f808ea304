#pragma once

#include <string>

#include <json.hpp>

#include "domlab/constructions.hpp"
#include "domlab/exact.hpp"

namespace domlab {

// JSON forms are schema-stable; see docs/certificate.schema.json. Anything
// that can exceed 64 bits travels as a decimal string.

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);  // throws schema_error

nlohmann::json gap_certification_to_json(const GapCertification& g);
GapCertification gap_certification_from_json(const nlohmann::json& j);

bool is_gap_certification_json(const nlohmann::json& j);

// Structural validation mirroring the shipped schema file; throws schema_error.
void validate_certificate_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace domlab
