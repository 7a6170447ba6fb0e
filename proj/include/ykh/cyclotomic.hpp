#pragma once

// Exact arithmetic in Q(zeta_d), zeta_d = exp(2 pi i / d), in the power basis
// 1, zeta, ..., zeta^{phi(d)-1} reduced modulo the cyclotomic polynomial.

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "ykh/error.hpp"
#include "ykh/rational.hpp"

namespace ykh {

namespace detail {

// Dense polynomial over Q, coefficients low to high; no trailing zeros.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q b + r with deg r < deg b. b must be nonzero.
inline void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

struct CyclotomicData {
  int order = 1;
  QPoly phi;                       // monic Phi_d
  std::vector<QPoly> power_table;  // x^k mod Phi_d, padded to deg(Phi_d) entries
};

inline const CyclotomicData& cyclotomic_data(int d);

inline QPoly compute_cyclotomic_polynomial(int d) {
  QPoly p(static_cast<std::size_t>(d) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    QPoly q, r;
    divmod(p, cyclotomic_data(e).phi, q, r);
    p = std::move(q);
  }
  return p;
}

inline const CyclotomicData& cyclotomic_data(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<CyclotomicData>();
  data->order = d;
  data->phi = compute_cyclotomic_polynomial(d);
  const std::size_t phi_deg = data->phi.size() - 1;
  const std::size_t table_size = std::max<std::size_t>(2 * phi_deg, static_cast<std::size_t>(d));
  QPoly cur{Rational(1)};
  for (std::size_t k = 0; k < table_size; ++k) {
    QPoly padded = cur;
    padded.resize(phi_deg, Rational(0));
    data->power_table.push_back(std::move(padded));
    // cur <- x * cur mod Phi
    QPoly next(cur.size() + 1, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    trim(next);
    if (next.size() > phi_deg) {
      Rational top = next.back();
      for (std::size_t j = 0; j <= phi_deg; ++j) next[j] -= top * data->phi[j];
      trim(next);
    }
    cur = std::move(next);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(d, std::move(data));
  return *it->second;
}

}  // namespace detail

/// The d-th cyclotomic polynomial, coefficients low to high.
inline const std::vector<Rational>& cyclotomic_polynomial(int d) {
  if (d < 1) throw MathError("cyclotomic order must be positive");
  return detail::cyclotomic_data(d).phi;
}

inline int euler_phi(int d) { return static_cast<int>(cyclotomic_polynomial(d).size()) - 1; }

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}

  explicit Cyclotomic(int order) : order_(order) {
    if (order < 1) throw MathError("cyclotomic order must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
  }

  Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

  static Cyclotomic from_coefficients(int order, std::vector<Rational> coeffs) {
    Cyclotomic c(order);
    if (coeffs.size() != c.coeffs_.size()) {
      throw MathError("expected " + std::to_string(c.coeffs_.size()) + " power-basis coordinates");
    }
    c.coeffs_ = std::move(coeffs);
    return c;
  }

  /// zeta_d^a.
  static Cyclotomic root(int order, long a) {
    Cyclotomic c(order);
    long r = a % order;
    if (r < 0) r += order;
    c.coeffs_ = detail::cyclotomic_data(order).power_table[static_cast<std::size_t>(r)];
    return c;
  }

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!ykh::is_zero(c)) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!ykh::is_zero(coeffs_[i])) return false;
    return true;
  }

  bool is_one() const { return is_rational() && coeffs_[0] == 1; }

  /// Image under Q(zeta_d) -> Q(zeta_{d'}), zeta_d -> zeta_{d'}^{d'/d}.
  Cyclotomic raised_to(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) {
      throw MathError("cannot coerce order " + std::to_string(order_) + " into order " +
                      std::to_string(new_order));
    }
    const auto& table = detail::cyclotomic_data(new_order).power_table;
    const int step = new_order / order_;
    Cyclotomic out(new_order);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (ykh::is_zero(coeffs_[k])) continue;
      const auto& img = table[k * static_cast<std::size_t>(step)];
      for (std::size_t j = 0; j < img.size(); ++j)
        if (!ykh::is_zero(img[j])) out.coeffs_[j] += coeffs_[k] * img[j];
    }
    return out;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.order_ != order_) return *this = common(*this, o) + common(o, *this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& o) {
    if (o.order_ != order_) return *this = common(*this, o) - common(o, *this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

  Cyclotomic& operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return common(a, b) * common(b, a);
    if (a.coeffs_.size() == 1) return Cyclotomic(a.order_, a.coeffs_[0] * b.coeffs_[0]);
    const auto& table = detail::cyclotomic_data(a.order_).power_table;
    const std::size_t n = a.coeffs_.size();
    std::vector<Rational> full(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (ykh::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!ykh::is_zero(b.coeffs_[j])) full[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Cyclotomic out(a.order_);
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (ykh::is_zero(full[k])) continue;
      if (k < n) {
        out.coeffs_[k] += full[k];
      } else {
        const auto& img = table[k];
        for (std::size_t j = 0; j < n; ++j)
          if (!ykh::is_zero(img[j])) out.coeffs_[j] += full[k] * img[j];
      }
    }
    return out;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  Cyclotomic inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) return Cyclotomic(order_, 1 / coeffs_[0]);
    using detail::QPoly;
    QPoly a = coeffs_;
    detail::trim(a);
    QPoly b = cyclotomic_polynomial(order_);
    // Invariant: s_a * self == a, s_b * self == b (mod Phi).
    QPoly s_a{Rational(1)}, s_b{};
    while (!b.empty()) {
      QPoly q, r;
      detail::divmod(a, b, q, r);
      QPoly s_r = detail::sub(s_a, detail::mul(q, s_b));
      a = std::move(b);
      b = std::move(r);
      s_a = std::move(s_b);
      s_b = std::move(s_r);
    }
    // a is a nonzero constant since Phi is irreducible.
    Rational scale = 1 / a[0];
    QPoly q, r;
    detail::divmod(s_a, cyclotomic_polynomial(order_), q, r);
    Cyclotomic out(order_);
    for (std::size_t i = 0; i < r.size(); ++i) out.coeffs_[i] = r[i] * scale;
    return out;
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(order_, Rational(1));
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
      if (a.order_ % b.order_ != 0 && b.order_ % a.order_ != 0) {
        int l = std::lcm(a.order_, b.order_);
        return a.raised_to(l).coeffs_ == b.raised_to(l).coeffs_;
      }
      return common(a, b).coeffs_ == common(b, a).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
  }

  std::complex<double> to_complex() const {
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (ykh::is_zero(coeffs_[k])) continue;
      double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
      sum += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return sum;
  }

  /// e.g. "1/2 - zeta4" or "-1".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (ykh::is_zero(c)) continue;
      Rational mag = abs(c);
      std::string sym = k == 0 ? "" : (k == 1 ? "zeta" + std::to_string(order_)
                                              : "zeta" + std::to_string(order_) + "^" + std::to_string(k));
      std::string body;
      if (k == 0) body = ykh::to_string(mag);
      else if (mag == 1) body = sym;
      else body = ykh::to_string(mag) + "*" + sym;
      if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + body;
      else out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }

 private:
  // `a` brought to the larger of the two orders (which must divide each other).
  static Cyclotomic common(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.order_ % a.order_ == 0) return a.raised_to(b.order_);
    if (a.order_ % b.order_ == 0) return a;
    throw MathError("order mismatch: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
  }

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

/// zeta_d^a in canonical form.
inline Cyclotomic cyclotomic_root(int d, long a) { return Cyclotomic::root(d, a); }

}  // namespace ykh
