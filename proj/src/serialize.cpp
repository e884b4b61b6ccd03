#include "parab/serialize.hpp"

#include <cstdint>

#include "parab/errors.hpp"

namespace parab {

Json poly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(rational_string(p.coeff(k)));
  return arr;
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw invalid_params("poly JSON must be an array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string())
      c.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      c.emplace_back(e.get<long>());
    else
      throw invalid_params("poly JSON entries must be strings or integers");
  }
  return UniPoly(std::move(c));
}

namespace {
int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p())
    throw invalid_params("Laurent coefficient exceeds int64 in JSON output");
  return v.get_si();
}
}  // namespace

Json laurent_to_json(const LaurentBiPoly& p) {
  Json arr = Json::array();
  for (const auto& [k, c] : p.terms())
    arr.push_back(Json::array({k.first, k.second, to_i64(c.re), to_i64(c.im)}));
  return arr;
}

LaurentBiPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw invalid_params("Laurent JSON must be an array");
  LaurentBiPoly p;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw invalid_params("Laurent JSON entries must be [i, j, re, im]");
    p.add_term(e[0].get<long>(), e[1].get<long>(),
               GaussInt(Int(e[2].get<long>()), Int(e[3].get<long>())));
  }
  return p;
}

}  // namespace parab
