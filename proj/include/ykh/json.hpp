#pragma once

// JSON views of exact values. Cyclotomic numbers become arrays of "p/q"
// strings, one per power of zeta_d below deg(Phi_d).

#include <algorithm>
#include <nlohmann/json.hpp>

#include "ykh/adelic.hpp"
#include "ykh/esystem.hpp"
#include "ykh/invariant.hpp"
#include "ykh/trace_polynomial.hpp"

namespace ykh {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_fraction_string(r); }

inline Json to_json(const Cyclotomic& c) {
  Json arr = Json::array();
  for (const auto& q : c.coefficients()) arr.push_back(to_fraction_string(q));
  return arr;
}

/// Terms in render order: total degree descending, then (z, u) descending.
inline Json to_json(const BiPoly& p) {
  std::vector<std::pair<BiExponent, Cyclotomic>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  Json arr = Json::array();
  for (const auto& [e, c] : terms) arr.push_back(Json{{"z", e.first}, {"u", e.second}, {"coeff", to_json(c)}});
  return arr;
}

inline Json to_json(const RatFunc& f) {
  return Json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

inline Json to_json(const InvariantValue& v) {
  return Json{{"order", v.order()},
              {"zeta", to_json(v.zeta())},
              {"sqrtLambda", v.half_lambda()},
              {"body", to_json(v.body())},
              {"text", v.to_string()}};
}

inline Json to_json(const TracePolynomial& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [e, q] : c.terms())
      arr.push_back(Json{{"z", m.z}, {"x", m.x}, {"u", e}, {"coeff", to_fraction_string(q)}});
  }
  return Json{{"order", p.order()}, {"terms", arr}, {"text", p.to_string()}};
}

inline Json to_json(const ESolution& s) {
  Json values = Json::array();
  for (const auto& v : s.values()) values.push_back(to_json(v));
  return Json{{"d", s.order()},
              {"subset", s.subset()},
              {"zeta", to_json(zeta_value(s))},
              {"values", values},
              {"verified", verify_solution(s.order(), s.values())}};
}

}  // namespace ykh
