#pragma once

// Values of the Markov trace: polynomials in z and x_1..x_{d-1} whose
// coefficients are Laurent polynomials in u.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ykh/error.hpp"
#include "ykh/laurent.hpp"
#include "ykh/render.hpp"

namespace ykh {

struct TraceMonomial {
  int z = 0;
  std::vector<int> x;  // exponents of x_1 .. x_{d-1}

  friend auto operator<=>(const TraceMonomial&, const TraceMonomial&) = default;
  friend bool operator==(const TraceMonomial&, const TraceMonomial&) = default;
};

class TracePolynomial {
 public:
  TracePolynomial() : TracePolynomial(1) {}
  explicit TracePolynomial(int order) : order_(order) {
    if (order < 1) throw MathError("trace order must be positive");
  }

  static TracePolynomial constant(int order, const LaurentU& c) {
    TracePolynomial p(order);
    if (!c.is_zero()) p.terms_.emplace(p.unit_monomial(), c);
    return p;
  }
  static TracePolynomial one(int order) { return constant(order, LaurentU(1L)); }

  static TracePolynomial z(int order) {
    TracePolynomial p(order);
    auto m = p.unit_monomial();
    m.z = 1;
    p.terms_.emplace(std::move(m), LaurentU(1L));
    return p;
  }

  /// x_m with the index read mod d; x_0 = 1.
  static TracePolynomial x(int order, long m) {
    return one(order).times_x(m);
  }

  int order() const noexcept { return order_; }
  const std::map<TraceMonomial, LaurentU>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentU coefficient(const TraceMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentU() : it->second;
  }

  void add_term(const TraceMonomial& m, const LaurentU& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TracePolynomial times_z(int power = 1) const {
    TracePolynomial r(order_);
    for (const auto& [m, c] : terms_) {
      auto mm = m;
      mm.z += power;
      r.terms_.emplace_hint(r.terms_.end(), std::move(mm), c);
    }
    return r;
  }

  TracePolynomial times_x(long m) const {
    long r = m % order_;
    if (r < 0) r += order_;
    if (r == 0) return *this;
    TracePolynomial out(order_);
    for (const auto& [mono, c] : terms_) {
      auto mm = mono;
      ++mm.x[static_cast<std::size_t>(r - 1)];
      out.terms_.emplace(std::move(mm), c);
    }
    return out;
  }

  TracePolynomial& operator+=(const TracePolynomial& o) {
    check_order(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  TracePolynomial& operator-=(const TracePolynomial& o) {
    check_order(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  TracePolynomial& operator*=(const LaurentU& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(TracePolynomial a, const LaurentU& s) { return a *= s; }
  friend TracePolynomial operator*(const LaurentU& s, TracePolynomial a) { return a *= s; }

  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    a.check_order(b);
    TracePolynomial r(a.order_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        TraceMonomial m = ma;
        m.z += mb.z;
        for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Fully expanded over z, u, x1, ..., e.g. "z*u^2 - z*u + z - 1/3*u^2*x1*x2".
  std::string to_string() const {
    std::vector<detail::RenderTerm> out;
    for (const auto& [m, c] : terms_) {
      for (const auto& [e, q] : c.terms()) {
        detail::RenderTerm t;
        t.exponents.push_back(m.z);
        t.exponents.push_back(e);
        t.exponents.insert(t.exponents.end(), m.x.begin(), m.x.end());
        detail::coefficient_text(q, t);
        out.push_back(std::move(t));
      }
    }
    std::vector<std::string> names{"z", "u"};
    for (int i = 1; i < order_; ++i) names.push_back("x" + std::to_string(i));
    return detail::render_polynomial(std::move(out), names);
  }

 private:
  TraceMonomial unit_monomial() const {
    return TraceMonomial{0, std::vector<int>(static_cast<std::size_t>(order_ - 1), 0)};
  }

  void check_order(const TracePolynomial& o) const {
    if (o.order_ != order_) throw MathError("trace polynomial order mismatch");
  }

  int order_;
  std::map<TraceMonomial, LaurentU> terms_;
};

}  // namespace ykh
