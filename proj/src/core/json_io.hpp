#pragma once

#include <json.hpp>
#include <string>

#include "opwords.hpp"
#include "symfunc.hpp"

namespace qts {

/// Wire format for symmetric functions:
///   {"basis":"s","degree":n,"terms":[{"index":[3,3],"coeff":"q + t"}]}
/// Coefficients use the rational-function text format.
nlohmann::json symf_to_json(const SymF& f, Basis b);
SymF symf_from_json(const nlohmann::json& j);

/// Wire format for operator expressions:
///   {"words":[{"letters":[2,2,1],"coeff":"<ratio>"},...]}
/// Words are listed in the canonical (lexicographic) order.
nlohmann::json opexpr_to_json(const OpExpr& x);
OpExpr opexpr_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit checksum, lowercase hex.
std::string checksum_hex(const std::string& data);

}  // namespace qts
