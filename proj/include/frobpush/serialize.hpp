#pragma once

#include <string>

#include <json.hpp>

#include "frobpush/picard.hpp"
#include "frobpush/positivity.hpp"

namespace frobpush {

nlohmann::json variety_to_json(const VarietyDescriptor& v);
VarietyDescriptor variety_from_json(const nlohmann::json& j);

/// {"variety", "basis", "summands", "rank"}; multiplicities and the rank are
/// decimal strings, unknown multiplicities are "unknown" and the rank null.
nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& r);

/// "O", "O(-2)", "O(1,0)", "O(-C0-2f)", "S(2)".
std::string render_summand(const VarietyDescriptor& v, const Basis& basis, const Summand& s);

/// One "class: multiplicity" line per summand, most positive first, then the rank.
std::string render_text(const Decomposition& d);
std::string render_text(const Verdict& v, const Decomposition& context);

}  // namespace frobpush
