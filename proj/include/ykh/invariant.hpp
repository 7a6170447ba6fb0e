#pragma once

// The invariant Delta_{d,S} of a braid closure:
//   Delta(b) = D^{n-1} sqrtLambda^{eps(b)} tr_d(b)|_{X_{d,S}},
//   lambda = (z - (1-u) zeta) / (u z),   D = 1 / (z sqrtLambda).
// Values are kept as sqrtLambda^h * body with h in {0, 1}; even powers of
// sqrtLambda are folded into the rational body.

#include <complex>
#include <string>

#include "ykh/braid.hpp"
#include "ykh/esystem.hpp"
#include "ykh/ratfunc.hpp"

namespace ykh {

/// lambda as a rational function of (u, z) for a given zeta.
inline RatFunc lambda_param(int d, const Rational& zeta) {
  RatFunc z = RatFunc::z(d);
  RatFunc u = RatFunc::u(d);
  RatFunc one = RatFunc::constant(d, Rational(1));
  RatFunc zeta_f = RatFunc::constant(d, zeta);
  return (z - (one - u) * zeta_f) / (u * z);
}

inline RatFunc lambda_param(const ESolution& sol) { return lambda_param(sol.order(), zeta_value(sol)); }

class InvariantValue {
 public:
  InvariantValue(int order, Rational zeta, int half, RatFunc body)
      : order_(order), zeta_(std::move(zeta)), half_(0), body_(std::move(body)) {
    if (body_.order() != order_) body_ = body_.raised_to(order_);
    fold(half);
  }

  static InvariantValue one(int order, const Rational& zeta) {
    return InvariantValue(order, zeta, 0, RatFunc::constant(order, Rational(1)));
  }

  int order() const noexcept { return order_; }
  const Rational& zeta() const noexcept { return zeta_; }
  int half_lambda() const noexcept { return half_; }
  const RatFunc& body() const noexcept { return body_; }
  RatFunc lambda() const { return lambda_param(order_, zeta_); }

  /// this * sqrtLambda^k.
  InvariantValue times_sqrt_lambda(long k) const {
    InvariantValue r = *this;
    r.fold(static_cast<long>(half_) + k);
    return r;
  }

  InvariantValue operator-() const {
    InvariantValue r = *this;
    r.body_ = -r.body_;
    return r;
  }

  friend InvariantValue operator*(const InvariantValue& a, const RatFunc& f) {
    return InvariantValue(a.order_, a.zeta_, a.half_, a.body_ * f.raised_to(a.order_));
  }
  friend InvariantValue operator*(const RatFunc& f, const InvariantValue& a) { return a * f; }

  friend InvariantValue operator*(const InvariantValue& a, const InvariantValue& b) {
    a.check(b);
    return InvariantValue(a.order_, a.zeta_, a.half_ + b.half_, a.body_ * b.body_);
  }

  friend InvariantValue operator+(const InvariantValue& a, const InvariantValue& b) {
    a.check(b);
    if (a.body_.is_zero()) return b;
    if (b.body_.is_zero()) return a;
    if (a.half_ != b.half_) throw MathError("cannot add invariant values with different sqrtLambda parity");
    return InvariantValue(a.order_, a.zeta_, a.half_, a.body_ + b.body_);
  }
  friend InvariantValue operator-(const InvariantValue& a, const InvariantValue& b) { return a + (-b); }

  friend bool operator==(const InvariantValue& a, const InvariantValue& b) {
    if (a.order_ != b.order_ || a.zeta_ != b.zeta_) return false;
    if (a.body_.is_zero() && b.body_.is_zero()) return true;
    return a.half_ == b.half_ && a.body_ == b.body_;
  }

  /// "sqrtLambda^h * ((N) / (M))"
  std::string to_string() const { return "sqrtLambda^" + std::to_string(half_) + " * (" + body_.to_string() + ")"; }

  /// Approximate complex value at (u, z), principal branch of sqrt(lambda).
  std::complex<double> evaluate(std::complex<double> u, std::complex<double> z) const {
    std::complex<double> b = body_.evaluate(u, z);
    if (half_ == 0) return b;
    return b * std::sqrt(lambda().evaluate(u, z));
  }

 private:
  void check(const InvariantValue& o) const {
    if (o.order_ != order_ || o.zeta_ != zeta_) throw MathError("invariant values from different specializations");
  }

  // Sets the sqrtLambda exponent to `half`, moving whole lambda powers into the body.
  void fold(long half) {
    long q = half >= 0 ? half / 2 : -((-half + 1) / 2);
    half_ = static_cast<int>(half - 2 * q);
    if (q != 0 && !body_.is_zero()) body_ *= lambda().pow(q);
  }

  int order_;
  Rational zeta_;
  int half_;
  RatFunc body_;
};

/// D = 1 / (z sqrtLambda).
inline InvariantValue normalization_d(int d, const Rational& zeta) {
  return InvariantValue(d, zeta, -1, RatFunc::monomial(d, -1, 0));
}

/// D^{n-1} sqrtLambda^{eps} * trace, for an already specialized trace of b.
inline InvariantValue delta_from_trace(int d, const Rational& zeta, const BraidWord& b, const RatFunc& trace) {
  const long n = b.strands();
  return InvariantValue(d, zeta, static_cast<int>(0), trace * RatFunc::monomial(d, static_cast<int>(-(n - 1)), 0))
      .times_sqrt_lambda(exponent_sum(b) - (n - 1));
}

inline InvariantValue delta_invariant(const ESolution& sol, const BraidWord& b) {
  return delta_from_trace(sol.order(), zeta_value(sol), b, trace_of_braid(b, sol));
}

inline InvariantValue delta_invariant(int d, const ESolution& sol, const BraidWord& b) {
  if (d != sol.order()) throw MathError("solution order does not match d");
  return delta_invariant(sol, b);
}

/// The four braids obtained by giving the letter at `index` the exponents +2, +1, 0, -1.
struct SkeinQuadruple {
  BraidWord plus_plus, plus, zero, minus;
};

inline SkeinQuadruple skein_quadruple(const BraidWord& b, std::size_t index) {
  if (index >= b.letters().size()) throw MathError("crossing index out of range");
  return {replace_letter(b, index, 2), replace_letter(b, index, 1), replace_letter(b, index, 0),
          replace_letter(b, index, -1)};
}

/// sqrtLambda Delta(L-) == Delta(L++)/(lambda u) + Delta(L+)/sqrtLambda - Delta(L0)/u.
inline bool skein_check(const ESolution& sol, const BraidWord& b, std::size_t index) {
  auto q = skein_quadruple(b, index);
  const int d = sol.order();
  RatFunc inv_u = RatFunc::monomial(d, 0, -1);
  InvariantValue lhs = delta_invariant(sol, q.minus).times_sqrt_lambda(1);
  InvariantValue rhs = delta_invariant(sol, q.plus_plus).times_sqrt_lambda(-2) * inv_u +
                       delta_invariant(sol, q.plus).times_sqrt_lambda(-1) - delta_invariant(sol, q.zero) * inv_u;
  return lhs == rhs;
}

inline bool skein_check(int d, const ESolution& sol, const BraidWord& b, std::size_t index) {
  if (d != sol.order()) throw MathError("solution order does not match d");
  return skein_check(sol, b, index);
}

/// The d = 1 specialization: the HOMFLYPT polynomial in the (u, z) normalization.
inline InvariantValue homflypt_specialize(const BraidWord& b) {
  return delta_invariant(solution_from_subset(1, {0}), b);
}

/// u sqrtLambda Delta(L-) - Delta(L+)/sqrtLambda == (u - 1) Delta(L0), valid at d = 1.
inline bool homflypt_skein_check(const BraidWord& b, std::size_t index) {
  auto q = skein_quadruple(b, index);
  RatFunc u = RatFunc::u(1);
  InvariantValue lhs = homflypt_specialize(q.minus).times_sqrt_lambda(1) * u -
                       homflypt_specialize(q.plus).times_sqrt_lambda(-1);
  return lhs == homflypt_specialize(q.zero) * (u - RatFunc::constant(1, Rational(1)));
}

/// Image of a value under u -> 1/u, z -> (z + (u-1) zeta)/u, sqrtLambda -> 1/sqrtLambda.
/// Delta(mirror(b)) equals the image of Delta(b).
inline InvariantValue mirror_image(const InvariantValue& v) {
  const int d = v.order();
  RatFunc u = RatFunc::u(d);
  RatFunc z = RatFunc::z(d);
  RatFunc u_image = RatFunc::monomial(d, 0, -1);
  RatFunc z_image = (z + (u - RatFunc::constant(d, Rational(1))) * RatFunc::constant(d, v.zeta())) / u;
  RatFunc body = v.body().substitute(u_image, z_image);
  return InvariantValue(d, v.zeta(), v.half_lambda(), body * v.lambda().pow(-v.half_lambda()));
}

}  // namespace ykh
