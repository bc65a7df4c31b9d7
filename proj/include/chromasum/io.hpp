#pragma once

// JSON wire encodings shared by the CLI and the tests.

#include <json.hpp>

#include "chromasum/chromogeometry.hpp"
#include "chromasum/finite_field.hpp"
#include "chromasum/polynumber.hpp"

namespace chromasum {

/// {"coeffs":[c0,...,c_{r-1}]}
nlohmann::json element_to_json(const FieldElement& a);
/// Accepts the object form or a bare integer (mapped through Z -> F_p).
FieldElement element_from_json(const nlohmann::json& j, const FieldRef& field);

/// {"p","r","q","modulus"}
nlohmann::json field_to_json(const FieldSpec& spec);

/// Coefficient array, constant first, each "num/den".
nlohmann::json polynumber_to_json(const RationalPolynumber& pi);
RationalPolynumber polynumber_from_json(const nlohmann::json& j);

/// {"rows","cols","grid":[[element,...],...]}, row i holding alpha^i.
nlohmann::json polynumber2_to_json(const FieldPolynumber2& pi);
/// Accepts the object form or a bare grid. Throws ParseError on malformed input.
FieldPolynumber2 polynumber2_from_json(const nlohmann::json& j, const FieldRef& field);

nlohmann::json point_to_json(const AffinePoint& point);
/// [{"x":element,"y":element},...] in canonical order.
nlohmann::json circle_to_json(const UnitCircle& circle);

}  // namespace chromasum
