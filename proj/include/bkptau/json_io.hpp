#pragma once

#include "bkptau/hierarchy.hpp"
#include "bkptau/tau.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace bkptau {

/// Rationals travel as "p/q" strings; integers may also appear as JSON numbers.
Rational rational_from_json(const nlohmann::json& j);

/// Parses a JSON array of rationals. Bare tokens such as 1/2 are accepted and quoted before parsing.
std::vector<std::vector<Rational>> parse_constants(std::string_view text);

/// {"lambda": [...], "constants": [["1/2", "0"], ...]}; missing constants mean all zero.
TauSpec tau_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TauSpec& spec);

/// {"is_zero": bool, "defect": canonical string, "witness": monomial string or null}.
nlohmann::json to_json(const DefectReport& r);

/// {"poly": canonical string, "degree": weighted degree or null for 0}.
nlohmann::json poly_json(const Poly& p);

}  // namespace bkptau
