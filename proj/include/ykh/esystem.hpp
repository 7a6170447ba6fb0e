#pragma once

// The E-system on the trace parameters x_0..x_{d-1} and its solutions
// X_{d,S}: x_k = (1/|S|) sum_{s in S} zeta_d^{s k}.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ykh/cyclotomic.hpp"
#include "ykh/error.hpp"
#include "ykh/ratfunc.hpp"
#include "ykh/trace.hpp"
#include "ykh/trace_polynomial.hpp"

namespace ykh {

/// E_d^{(m)} = sum_{s=0}^{d-1} x_{m+s} x_{d-s}, indices mod d, x_0 = x_d = 1.
inline Cyclotomic e_polynomial(int d, int m, const std::vector<Cyclotomic>& values) {
  if (static_cast<int>(values.size()) != d) throw MathError("E-polynomial needs exactly d values");
  if (m < 0 || m >= d) throw MathError("E-polynomial index out of range");
  auto x = [&](int k) -> const Cyclotomic& { return values[static_cast<std::size_t>(((k % d) + d) % d)]; };
  Cyclotomic sum(values[0].order());
  for (int s = 0; s < d; ++s) sum += x(m + s) * x(d - s);
  return sum;
}

/// True iff E_d^{(m)} = x_m E_d^{(0)} for 1 <= m <= d-1.
inline bool verify_solution(int d, const std::vector<Cyclotomic>& values) {
  if (static_cast<int>(values.size()) != d || !values[0].is_one()) {
    throw MathError("E-system values must have length d and x_0 = 1");
  }
  Cyclotomic e0 = e_polynomial(d, 0, values);
  for (int m = 1; m < d; ++m)
    if (!(e_polynomial(d, m, values) == values[static_cast<std::size_t>(m)] * e0)) return false;
  return true;
}

/// Normalizes a residue list into a sorted subset of Z/dZ.
inline std::vector<int> normalize_subset(int d, const std::vector<int>& residues) {
  if (d < 1) throw MathError("modulus must be positive");
  std::vector<int> s;
  for (int r : residues) s.push_back(((r % d) + d) % d);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// "{0,2} mod 4"
inline std::string subset_to_string(int d, const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "} mod " + std::to_string(d);
}

class ESolution {
 public:
  int order() const noexcept { return d_; }
  const std::vector<int>& subset() const noexcept { return subset_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& value(long k) const { return values_[static_cast<std::size_t>(((k % d_) + d_) % d_)]; }

  friend bool operator==(const ESolution& a, const ESolution& b) {
    return a.d_ == b.d_ && a.subset_ == b.subset_;
  }

 private:
  friend ESolution solution_from_subset(int d, const std::vector<int>& subset);
  ESolution(int d, std::vector<int> subset, std::vector<Cyclotomic> values)
      : d_(d), subset_(std::move(subset)), values_(std::move(values)) {}

  int d_;
  std::vector<int> subset_;
  std::vector<Cyclotomic> values_;
};

/// Gerardin's solution attached to a non-empty S in Z/dZ. The E-condition is
/// re-checked on construction.
inline ESolution solution_from_subset(int d, const std::vector<int>& subset) {
  auto s = normalize_subset(d, subset);
  if (s.empty()) throw MathError("E-system solutions need a non-empty subset");
  Rational inv_size = make_rational(1, static_cast<long>(s.size()));
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    Cyclotomic x(d);
    for (int a : s) x += Cyclotomic::root(d, static_cast<long>(a) * k);
    values.push_back(x * inv_size);
  }
  if (!verify_solution(d, values)) {
    throw CoherenceError("character sum for " + subset_to_string(d, s) + " fails the E-condition");
  }
  return ESolution(d, std::move(s), std::move(values));
}

/// zeta_{d,S} = tr(e_{d,i}) = 1/|S|.
inline Rational zeta_value(const ESolution& sol) {
  return make_rational(1, static_cast<long>(sol.subset().size()));
}

/// S^d_{d'} = { s(a) + b : a in S, b in ker(Z/d'Z -> Z/dZ) } with the section
/// s(a) = representative of a in 0..d-1.
inline std::vector<int> lift_subset(int d, int d_prime, const std::vector<int>& subset) {
  if (d < 1 || d_prime < 1 || d_prime % d != 0) {
    throw MathError(std::to_string(d) + " does not divide " + std::to_string(d_prime));
  }
  auto s = normalize_subset(d, subset);
  if (s.empty()) throw MathError("cannot lift an empty subset");
  std::vector<int> out;
  for (int a : s)
    for (int b = 0; b < d_prime; b += d) out.push_back(a + b);
  std::sort(out.begin(), out.end());
  return out;
}

/// All 2^d - 1 solutions, subsets in increasing bitmask order.
inline std::vector<ESolution> enumerate_solutions(int d) {
  if (d < 1 || d > 20) throw MathError("enumeration supports 1 <= d <= 20");
  std::vector<ESolution> out;
  for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
    std::vector<int> s;
    for (int a = 0; a < d; ++a)
      if (mask & (1UL << a)) s.push_back(a);
    out.push_back(solution_from_subset(d, s));
  }
  return out;
}

/// Replaces every x_m by the given exact value (values[0] must be 1).
inline RatFunc substitute_values(const TracePolynomial& p, const std::vector<Cyclotomic>& values) {
  const int d = p.order();
  if (static_cast<int>(values.size()) != d) throw MathError("substitution order mismatch");
  std::map<BiExponent, Cyclotomic> terms;
  for (const auto& [mono, coeff] : p.terms()) {
    Cyclotomic x_value(d, Rational(1));
    for (std::size_t m = 0; m < mono.x.size(); ++m)
      if (mono.x[m]) x_value *= values[m + 1].raised_to(d).pow(mono.x[m]);
    if (x_value.is_zero()) continue;
    for (const auto& [e, q] : coeff.terms()) {
      auto [it, inserted] = terms.try_emplace(BiExponent{mono.z, e}, x_value * q);
      if (!inserted) it->second += x_value * q;
    }
  }
  return RatFunc::from_laurent_terms(d, terms);
}

/// The trace polynomial specialised at an E-solution.
inline RatFunc trace_poly_substitute(const TracePolynomial& p, const ESolution& sol) {
  if (p.order() != sol.order()) {
    throw MathError("trace of order " + std::to_string(p.order()) + " cannot take a solution of order " +
                    std::to_string(sol.order()));
  }
  return substitute_values(p, sol.values());
}

/// tr_d(b) specialised at `sol`.
inline RatFunc trace_of_braid(const BraidWord& b, const ESolution& sol) {
  return trace_poly_substitute(trace_of_braid(sol.order(), b), sol);
}

inline RatFunc trace_of_braid(int d, const BraidWord& b, const ESolution& sol) {
  if (d != sol.order()) throw MathError("solution order does not match d");
  return trace_of_braid(b, sol);
}

}  // namespace ykh
