#pragma once

// JSON and text encodings of the value types. Polynomials are JSON objects
// {"<degree>": coeff}; weights are integer arrays; parabolic indices are
// written 1-based as on the command line.

#include "bkf/filtration.hpp"
#include "bkf/verify.hpp"

#include <json.hpp>

#include <string>

namespace bkf {

nlohmann::json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiltrationReport& r);
FiltrationReport filtration_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

/// One "key: value" line per field.
std::string to_text(const VerificationReport& r);
VerificationReport report_from_text(const std::string& text);

std::string to_text(const FiltrationReport& r);

/// "1,0,2" -> {1,0,2}; empty string -> {}.
std::vector<int> parse_int_list(const std::string& s);
std::string join_ints(const std::vector<int>& v, const char* sep = ",");

}  // namespace bkf
