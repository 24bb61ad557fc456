#ifndef FIBHESS_JSON_IO_HPP
#define FIBHESS_JSON_IO_HPP

#include "fibhess/bivar_poly.hpp"
#include "fibhess/hessenberg.hpp"
#include "fibhess/sequence.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace fibhess {

using json = nlohmann::json;

/// Term list in canonical order; coefficients are exact decimal strings.
inline json poly_to_json(const BivarPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"xexp", m.xexp}, {"yexp", m.yexp}, {"re", c.re().str()}, {"im", c.im().str()}});
  }
  return terms;
}

inline BivarPoly poly_from_json(const json& terms) {
  if (!terms.is_array()) throw std::invalid_argument("poly: expected a term array");
  std::vector<std::pair<Monomial, GaussianInt>> parsed;
  for (const auto& t : terms) {
    Monomial m{t.at("xexp").get<std::uint32_t>(), t.at("yexp").get<std::uint32_t>()};
    parsed.emplace_back(m, GaussianInt(BigInt(t.at("re").get<std::string>()), BigInt(t.at("im").get<std::string>())));
  }
  return BivarPoly::from_terms(parsed);
}

struct OutputRecord {
  int p = 0;
  int n = 0;
  std::string method;
  BivarPoly poly;
};

inline json to_json(const OutputRecord& r) {
  return {{"p", r.p}, {"n", r.n}, {"method", r.method}, {"poly", poly_to_json(r.poly)}};
}

inline OutputRecord record_from_json(const json& j) {
  return {j.at("p").get<int>(), j.at("n").get<int>(), j.at("method").get<std::string>(), poly_from_json(j.at("poly"))};
}

inline json to_json(const CrossCheckReport& rep) {
  json values = json::object();
  for (Route r : kAllRoutes) values[route_name(r)] = poly_to_json(rep.value(r));
  json mismatch = nullptr;
  if (rep.first_mismatch)
    mismatch = json::array({route_name(rep.first_mismatch->first), route_name(rep.first_mismatch->second)});
  return {{"p", rep.p}, {"n", rep.n}, {"all_equal", rep.all_equal}, {"first_mismatch", mismatch}, {"values", values}};
}

inline json matrix_to_json(const HessenbergMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.order(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.order(); ++c) row.push_back(poly_to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fibhess

#endif  // FIBHESS_JSON_IO_HPP
