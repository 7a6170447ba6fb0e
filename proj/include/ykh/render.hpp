#pragma once

// Canonical text rendering of multivariate polynomials. Terms are listed by
// descending total degree, ties broken lexicographically (descending) on the
// exponent vector in variable order.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ykh/cyclotomic.hpp"
#include "ykh/rational.hpp"

namespace ykh::detail {

struct RenderTerm {
  std::vector<int> exponents;
  std::string magnitude;  // coefficient text without leading sign
  bool negative = false;
  bool unit = false;      // magnitude is exactly 1
};

inline void coefficient_text(const Rational& c, RenderTerm& t) {
  t.negative = sgn(c) < 0;
  Rational mag = abs(c);
  t.unit = mag == 1;
  t.magnitude = to_string(mag);
}

inline void coefficient_text(const Cyclotomic& c, RenderTerm& t) {
  if (c.is_rational()) {
    coefficient_text(c.coefficients()[0], t);
    return;
  }
  t.negative = false;
  t.unit = false;
  t.magnitude = "(" + c.to_string() + ")";
}

inline bool render_before(const RenderTerm& a, const RenderTerm& b) {
  int da = std::accumulate(a.exponents.begin(), a.exponents.end(), 0);
  int db = std::accumulate(b.exponents.begin(), b.exponents.end(), 0);
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

inline std::string render_polynomial(std::vector<RenderTerm> terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), render_before);
  std::string out;
  for (const auto& t : terms) {
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      int e = t.exponents[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    std::string body;
    if (mono.empty()) body = t.magnitude;
    else if (t.unit) body = mono;
    else body = t.magnitude + "*" + mono;
    if (out.empty()) out = (t.negative ? "-" : "") + body;
    else out += (t.negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace ykh::detail
