#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "qpsum/element.hpp"

namespace qpsum {

/// Wire schema:
///   {"side":"qsym","basis":"Psi","terms":[{"index":[2,3,2],"coeff":"6/5"}]}
/// Coefficients serialize as "p/q" or plain integer strings; terms appear in
/// canonical order.
nlohmann::ordered_json element_to_json(const BasisElement& f);
BasisElement element_from_json(const nlohmann::json& doc);

std::string element_to_json_string(const BasisElement& f);

/// Plain-text rendering: "2 M[2,3,2] + 6/5 M[5,2] + 4/5 M[2,5] + 12/35 M[7]";
/// the zero element renders as "0".
std::string format_element_text(const BasisElement& f);

/// Accepts either the grammar "Basis:p1,p2,..." (e.g. "Psi:2,3,2", "M:4",
/// "Phi:" for the degree-0 unit) or a JSON element document.
BasisElement parse_element(const std::string& text);

} // namespace qpsum
