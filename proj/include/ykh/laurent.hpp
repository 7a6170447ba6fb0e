#pragma once

// Laurent polynomials in u with rational coefficients.

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ykh/rational.hpp"

namespace ykh {

class LaurentU {
 public:
  using Term = std::pair<int, Rational>;  // (exponent, coefficient)

  LaurentU() = default;
  LaurentU(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, Rational(c));
  }
  LaurentU(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!ykh::is_zero(c)) terms_.emplace_back(0, c);
  }

  /// c * u^e
  static LaurentU monomial(int e, const Rational& c = Rational(1)) {
    LaurentU p;
    if (!ykh::is_zero(c)) p.terms_.emplace_back(e, c);
    return p;
  }

  static LaurentU u() { return monomial(1); }

  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static LaurentU from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentU p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) p.terms_.back().second += c;
      else p.terms_.emplace_back(e, std::move(c));
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

  Rational coefficient(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Rational(0);
  }

  LaurentU operator-() const {
    LaurentU r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentU& operator+=(const LaurentU& o) { return *this = merge(*this, o, false); }
  LaurentU& operator-=(const LaurentU& o) { return *this = merge(*this, o, true); }
  LaurentU& operator*=(const LaurentU& o) { return *this = *this * o; }

  LaurentU& operator*=(const Rational& r) {
    if (ykh::is_zero(r)) terms_.clear();
    for (auto& t : terms_) t.second *= r;
    return *this;
  }

  friend LaurentU operator+(const LaurentU& a, const LaurentU& b) { return merge(a, b, false); }
  friend LaurentU operator-(const LaurentU& a, const LaurentU& b) { return merge(a, b, true); }

  friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
    return from_terms(std::move(prod));
  }

  friend bool operator==(const LaurentU& a, const LaurentU& b) { return a.terms_ == b.terms_; }

  /// Substitutes u -> u^{-1}.
  LaurentU inverted_variable() const {
    std::vector<Term> t;
    for (const auto& [e, c] : terms_) t.emplace_back(-e, c);
    return from_terms(std::move(t));
  }

  LaurentU pow(unsigned e) const {
    LaurentU r(1L);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  std::complex<double> evaluate(std::complex<double> u) const {
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(u, e);
    return s;
  }

  /// Highest power first, e.g. "u^2 - u + 1", "-1/2*u^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      std::string sym = e == 0 ? "" : (e == 1 ? "u" : "u^" + std::to_string(e));
      std::string body;
      if (e == 0) body = ykh::to_string(mag);
      else if (mag == 1) body = sym;
      else body = ykh::to_string(mag) + "*" + sym;
      if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + body;
      else out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  LaurentU scaled(int shift, const Rational& c) const {
    LaurentU r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, x] : terms_) r.terms_.emplace_back(e + shift, x * c);
    return r;
  }

  static LaurentU merge(const LaurentU& a, const LaurentU& b, bool subtract) {
    LaurentU r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? Rational(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].second - b.terms_[j].second)
                              : Rational(a.terms_[i].second + b.terms_[j].second);
        if (!ykh::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return ykh::is_zero(t.second); });
  }

  std::vector<Term> terms_;
};

}  // namespace ykh
