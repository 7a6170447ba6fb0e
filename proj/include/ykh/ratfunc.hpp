#pragma once

// Polynomials in z and u over Q(zeta_d), and the rational functions they
// generate. Rational functions are kept in lowest terms with a monic
// denominator so that equality is structural.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ykh/cyclotomic.hpp"
#include "ykh/error.hpp"
#include "ykh/render.hpp"

namespace ykh {

/// Exponent pair (z degree, u degree).
using BiExponent = std::pair<int, int>;

class BiPoly {
 public:
  BiPoly() : BiPoly(1) {}
  explicit BiPoly(int order) : order_(order) {}

  static BiPoly constant(int order, const Cyclotomic& c) {
    return monomial(order, 0, 0, c);
  }

  static BiPoly monomial(int order, int z_exp, int u_exp, const Cyclotomic& c) {
    if (z_exp < 0 || u_exp < 0) throw MathError("BiPoly exponents must be non-negative");
    BiPoly p(order);
    if (!c.is_zero()) p.terms_.emplace(BiExponent{z_exp, u_exp}, c.raised_to(order));
    return p;
  }

  static BiPoly monomial(int order, int z_exp, int u_exp) {
    return monomial(order, z_exp, u_exp, Cyclotomic(order, Rational(1)));
  }

  int order() const noexcept { return order_; }
  const std::map<BiExponent, Cyclotomic>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == BiExponent{0, 0});
  }

  void add_term(BiExponent e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int z_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  /// Leading term in rendering order (total degree, then z, then u).
  std::pair<BiExponent, Cyclotomic> leading_term() const {
    if (terms_.empty()) throw MathError("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      int tb = best->first.first + best->first.second;
      int ti = it->first.first + it->first.second;
      if (ti > tb || (ti == tb && it->first > best->first)) best = it;
    }
    return *best;
  }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  BiPoly& operator+=(const BiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BiPoly& operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Cyclotomic& s) { return a *= s; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check(b);
    BiPoly r(a.order_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  BiPoly raised_to(int order) const {
    if (order == order_) return *this;
    BiPoly r(order);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.raised_to(order));
    return r;
  }

  std::complex<double> evaluate(std::complex<double> u, std::complex<double> z) const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms_) s += c.to_complex() * std::pow(z, e.first) * std::pow(u, e.second);
    return s;
  }

  std::string to_string() const {
    std::vector<detail::RenderTerm> out;
    for (const auto& [e, c] : terms_) {
      detail::RenderTerm t;
      t.exponents = {e.first, e.second};
      detail::coefficient_text(c, t);
      out.push_back(std::move(t));
    }
    return detail::render_polynomial(std::move(out), {"z", "u"});
  }

 private:
  void check(const BiPoly& o) const {
    if (o.order_ != order_) throw MathError("polynomial coefficient field mismatch");
  }

  int order_;
  std::map<BiExponent, Cyclotomic> terms_;
};

namespace detail {

// Univariate polynomials in u over Q(zeta_d), dense low to high, trimmed.
using UPolyK = std::vector<Cyclotomic>;
// Polynomials in z with coefficients in K[u], dense low to high, trimmed.
using ZPoly = std::vector<UPolyK>;

inline void trim(UPolyK& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline void trim(ZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline UPolyK upk_sub(const UPolyK& a, const UPolyK& b, int order) {
  UPolyK r(std::max(a.size(), b.size()), Cyclotomic(order));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline UPolyK upk_mul(const UPolyK& a, const UPolyK& b, int order) {
  if (a.empty() || b.empty()) return {};
  UPolyK r(a.size() + b.size() - 1, Cyclotomic(order));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline void upk_divmod(const UPolyK& a, const UPolyK& b, UPolyK& q, UPolyK& r, int order) {
  if (b.empty()) throw MathError("polynomial division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Cyclotomic(order));
  Cyclotomic inv_lead = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Cyclotomic c = r.back() * inv_lead;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[shift + j] -= c * b[j];
    q[shift] = std::move(c);
    r.pop_back();
    trim(r);
  }
  trim(q);
}

inline UPolyK upk_monic(UPolyK p) {
  if (p.empty()) return p;
  Cyclotomic inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

inline UPolyK upk_gcd(UPolyK a, UPolyK b, int order) {
  while (!b.empty()) {
    UPolyK q, r;
    upk_divmod(a, b, q, r, order);
    a = std::move(b);
    b = std::move(r);
  }
  return upk_monic(std::move(a));
}

inline bool upk_is_one(const UPolyK& p) { return p.size() == 1 && p[0].is_one(); }

inline ZPoly to_zpoly(const BiPoly& p) {
  ZPoly out;
  for (const auto& [e, c] : p.terms()) {
    auto zi = static_cast<std::size_t>(e.first);
    auto ui = static_cast<std::size_t>(e.second);
    if (out.size() <= zi) out.resize(zi + 1);
    if (out[zi].size() <= ui) out[zi].resize(ui + 1, Cyclotomic(p.order()));
    out[zi][ui] = c;
  }
  return out;
}

inline BiPoly from_zpoly(const ZPoly& p, int order) {
  BiPoly out(order);
  for (std::size_t zi = 0; zi < p.size(); ++zi)
    for (std::size_t ui = 0; ui < p[zi].size(); ++ui)
      out.add_term({static_cast<int>(zi), static_cast<int>(ui)}, p[zi][ui]);
  return out;
}

inline UPolyK zp_content(const ZPoly& p, int order) {
  UPolyK g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = upk_gcd(g, c, order);
    if (upk_is_one(g)) break;
  }
  return g;
}

inline ZPoly zp_divide_coefficients(const ZPoly& p, const UPolyK& c, int order) {
  if (upk_is_one(c)) return p;
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    UPolyK q, r;
    upk_divmod(p[i], c, q, r, order);
    if (!r.empty()) throw CoherenceError("inexact content division");
    out[i] = std::move(q);
  }
  return out;
}

inline ZPoly zp_primitive(const ZPoly& p, int order) {
  return zp_divide_coefficients(p, zp_content(p, order), order);
}

// Pseudo-remainder of a by b in K[u][z], without the final lc(b)^k scaling.
inline ZPoly zp_prem(ZPoly a, const ZPoly& b, int order) {
  const std::size_t db = b.size() - 1;
  const UPolyK& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    UPolyK la = a.back();
    for (auto& c : a) c = upk_mul(c, lb, order);
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = upk_sub(a[shift + j], upk_mul(la, b[j], order), order);
    trim(a);
  }
  return a;
}

inline ZPoly zp_gcd(ZPoly a, ZPoly b, int order) {
  if (a.empty()) return b.empty() ? b : zp_primitive(b, order);
  if (b.empty()) return zp_primitive(a, order);
  UPolyK content = upk_gcd(zp_content(a, order), zp_content(b, order), order);
  a = zp_primitive(a, order);
  b = zp_primitive(b, order);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zp_prem(a, b, order);
    a = std::move(b);
    b = r.empty() ? r : zp_primitive(r, order);
  }
  for (auto& c : a) c = upk_mul(c, content, order);
  trim(a);
  return a;
}

// a / g where g is known to divide a.
inline ZPoly zp_exact_div(ZPoly a, const ZPoly& g, int order) {
  if (g.empty()) throw MathError("polynomial division by zero");
  const std::size_t dg = g.size() - 1;
  ZPoly q(a.size() >= g.size() ? a.size() - dg : 0);
  while (!a.empty()) {
    if (a.size() - 1 < dg) throw CoherenceError("inexact polynomial division");
    std::size_t shift = a.size() - 1 - dg;
    UPolyK c, r;
    upk_divmod(a.back(), g.back(), c, r, order);
    if (!r.empty()) throw CoherenceError("inexact polynomial division");
    for (std::size_t j = 0; j <= dg; ++j) a[shift + j] = upk_sub(a[shift + j], upk_mul(c, g[j], order), order);
    q[shift] = std::move(c);
    trim(a);
  }
  trim(q);
  return q;
}

// Lowest exponents present in p (z, u); p nonzero.
inline BiExponent min_exponents(const BiPoly& p) {
  BiExponent m{1 << 30, 1 << 30};
  for (const auto& [e, c] : p.terms()) {
    m.first = std::min(m.first, e.first);
    m.second = std::min(m.second, e.second);
  }
  return m;
}

inline BiPoly shift_down(const BiPoly& p, BiExponent s) {
  BiPoly out(p.order());
  for (const auto& [e, c] : p.terms()) out.add_term({e.first - s.first, e.second - s.second}, c);
  return out;
}

}  // namespace detail

/// gcd in Q(zeta_d)[u, z], determined up to a nonzero scalar.
inline BiPoly polynomial_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.order() != b.order()) throw MathError("polynomial coefficient field mismatch");
  const int order = a.order();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Split off the monomial part first; it covers the common cases cheaply.
  auto ma = detail::min_exponents(a);
  auto mb = detail::min_exponents(b);
  BiExponent mono{std::min(ma.first, mb.first), std::min(ma.second, mb.second)};
  BiPoly ra = detail::shift_down(a, ma);
  BiPoly rb = detail::shift_down(b, mb);
  BiPoly core(order);
  if (ra.is_constant() || rb.is_constant()) {
    core = BiPoly::constant(order, Cyclotomic(order, Rational(1)));
  } else {
    core = detail::from_zpoly(detail::zp_gcd(detail::to_zpoly(ra), detail::to_zpoly(rb), order), order);
  }
  return core * BiPoly::monomial(order, mono.first, mono.second);
}

/// a / b for b dividing a exactly.
inline BiPoly polynomial_exact_divide(const BiPoly& a, const BiPoly& b) {
  const int order = a.order();
  if (b.terms().size() == 1) {
    const auto& [e, c] = *b.terms().begin();
    Cyclotomic inv = c.inverse();
    BiPoly out(order);
    for (const auto& [ea, ca] : a.terms()) {
      if (ea.first < e.first || ea.second < e.second) throw CoherenceError("inexact monomial division");
      out.add_term({ea.first - e.first, ea.second - e.second}, ca * inv);
    }
    return out;
  }
  return detail::from_zpoly(detail::zp_exact_div(detail::to_zpoly(a), detail::to_zpoly(b), order), order);
}

class RatFunc {
 public:
  RatFunc() : RatFunc(1) {}
  explicit RatFunc(int order)
      : order_(order), num_(order), den_(BiPoly::constant(order, Cyclotomic(order, Rational(1)))) {}

  RatFunc(BiPoly num, BiPoly den) : order_(num.order()), num_(std::move(num)), den_(std::move(den)) {
    if (den_.order() != order_) throw MathError("numerator/denominator field mismatch");
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    normalize();
  }

  explicit RatFunc(const BiPoly& poly)
      : order_(poly.order()), num_(poly), den_(BiPoly::constant(poly.order(), Cyclotomic(poly.order(), Rational(1)))) {}

  static RatFunc constant(int order, const Cyclotomic& c) { return RatFunc(BiPoly::constant(order, c)); }
  static RatFunc constant(int order, const Rational& c) { return constant(order, Cyclotomic(order, c)); }

  /// z^a u^b with a, b of any sign.
  static RatFunc monomial(int order, int z_exp, int u_exp) {
    BiPoly num = BiPoly::monomial(order, std::max(z_exp, 0), std::max(u_exp, 0));
    BiPoly den = BiPoly::monomial(order, std::max(-z_exp, 0), std::max(-u_exp, 0));
    return RatFunc(std::move(num), std::move(den));
  }

  static RatFunc u(int order) { return monomial(order, 0, 1); }
  static RatFunc z(int order) { return monomial(order, 1, 0); }

  /// Sum of c * z^a * u^b over the given terms; u exponents may be negative.
  static RatFunc from_laurent_terms(int order, const std::map<BiExponent, Cyclotomic>& terms) {
    int shift = 0;
    for (const auto& [e, c] : terms) {
      if (e.first < 0) throw MathError("negative z exponent in polynomial");
      shift = std::max(shift, -e.second);
    }
    BiPoly num(order);
    for (const auto& [e, c] : terms) num.add_term({e.first, e.second + shift}, c.raised_to(order));
    return RatFunc(std::move(num), BiPoly::monomial(order, 0, shift));
  }

  int order() const noexcept { return order_; }
  const BiPoly& numerator() const noexcept { return num_; }
  const BiPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc raised_to(int order) const {
    if (order == order_) return *this;
    RatFunc r(order);
    r.num_ = num_.raised_to(order);
    r.den_ = den_.raised_to(order);
    return r;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw MathError("division by zero rational function");
    return RatFunc(den_, num_);
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc result = constant(order_, Rational(1));
    RatFunc base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this * o.inverse(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    a.check(b);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return RatFunc(a.order_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.order_ == b.order_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// f(u_image, z_image).
  RatFunc substitute(const RatFunc& u_image, const RatFunc& z_image) const {
    auto eval = [&](const BiPoly& p) {
      RatFunc acc(order_);
      for (const auto& [e, c] : p.terms())
        acc += constant(order_, c) * z_image.pow(e.first) * u_image.pow(e.second);
      return acc;
    };
    return eval(num_) / eval(den_);
  }

  std::complex<double> evaluate(std::complex<double> u, std::complex<double> z) const {
    return num_.evaluate(u, z) / den_.evaluate(u, z);
  }

  /// "(N) / (M)"; a unit denominator is kept so the shape is fixed.
  std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

 private:
  void check(const RatFunc& o) const {
    if (o.order_ != order_) throw MathError("rational function field mismatch");
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = BiPoly::constant(order_, Cyclotomic(order_, Rational(1)));
      return;
    }
    if (!den_.is_constant()) {
      BiPoly g = polynomial_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = polynomial_exact_divide(num_, g);
        den_ = polynomial_exact_divide(den_, g);
      }
    }
    Cyclotomic lead = den_.leading_term().second;
    if (!lead.is_one()) {
      Cyclotomic inv = lead.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  }

  int order_;
  BiPoly num_;
  BiPoly den_;
};

}  // namespace ykh
