#include "chromasum/io.hpp"

#include "chromasum/error.hpp"

namespace chromasum {

using nlohmann::json;

json element_to_json(const FieldElement& a) {
  json coeffs = json::array();
  for (std::uint32_t c : a.coeffs()) coeffs.push_back(c);
  return json{{"coeffs", coeffs}};
}

FieldElement element_from_json(const json& j, const FieldRef& field) {
  try {
    if (j.is_number_integer()) return FieldElement::from_int(field, j.get<std::int64_t>());
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
      throw MathError(Errc::ParseError, "field element must be {\"coeffs\":[...]} or an integer");
    }
    const json& arr = j["coeffs"];
    if (arr.size() > field->r) throw MathError(Errc::ParseError, "too many coefficients for the field");
    std::vector<std::uint32_t> coeffs(field->r, 0);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto c = arr[i].get<std::int64_t>();
      const auto p = static_cast<std::int64_t>(field->p);
      coeffs[i] = static_cast<std::uint32_t>(((c % p) + p) % p);
    }
    return FieldElement(field, std::move(coeffs));
  } catch (const json::exception& e) {
    throw MathError(Errc::ParseError, e.what());
  }
}

json field_to_json(const FieldSpec& spec) {
  return json{{"p", spec.p}, {"r", spec.r}, {"q", spec.q}, {"modulus", spec.modulus}};
}

json polynumber_to_json(const RationalPolynumber& pi) {
  json arr = json::array();
  for (const Rational& c : pi.coeffs()) arr.push_back(c.to_string());
  return arr;
}

RationalPolynumber polynumber_from_json(const json& j) {
  if (!j.is_array()) throw MathError(Errc::ParseError, "polynumber must be a JSON array");
  std::vector<Rational> coeffs;
  for (const json& c : j) {
    if (c.is_string()) {
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else {
      throw MathError(Errc::ParseError, "polynumber coefficient must be a string or integer");
    }
  }
  return RationalPolynumber(Rational{}, std::move(coeffs));
}

json polynumber2_to_json(const FieldPolynumber2& pi) {
  json grid = json::array();
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < pi.cols(); ++j) row.push_back(element_to_json(pi.at(i, j)));
    grid.push_back(std::move(row));
  }
  return json{{"rows", pi.rows()}, {"cols", pi.cols()}, {"grid", std::move(grid)}};
}

FieldPolynumber2 polynumber2_from_json(const json& j, const FieldRef& field) {
  const json* grid = &j;
  if (j.is_object()) {
    if (!j.contains("grid")) throw MathError(Errc::ParseError, "2-polynumber object needs \"grid\"");
    grid = &j["grid"];
  }
  if (!grid->is_array()) throw MathError(Errc::ParseError, "2-polynumber grid must be an array of rows");
  FieldPolynumber2 out(FieldElement::zero(field));
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const json& row = (*grid)[i];
    if (!row.is_array()) throw MathError(Errc::ParseError, "2-polynumber row must be an array");
    for (std::size_t k = 0; k < row.size(); ++k) out.set(i, k, element_from_json(row[k], field));
  }
  return out;
}

json point_to_json(const AffinePoint& point) {
  return json{{"x", element_to_json(point.x)}, {"y", element_to_json(point.y)}};
}

json circle_to_json(const UnitCircle& circle) {
  json arr = json::array();
  for (const AffinePoint& point : circle.points) arr.push_back(point_to_json(point));
  return arr;
}

}  // namespace chromasum
