#pragma once

// Finite truncations of the inverse systems indexed by divisibility:
// divisor chains d_1 | d_2 | ... | d_k, the connecting maps
//   theta: Z/d'Z -> Z/dZ,  rho: Y_{d',n} -> Y_{d,n},  xi: x_a -> x_{a mod d},
// and tuples that are coherent along them.

#include <sstream>
#include <string>
#include <vector>

#include "ykh/braid.hpp"
#include "ykh/error.hpp"
#include "ykh/esystem.hpp"
#include "ykh/invariant.hpp"
#include "ykh/trace.hpp"
#include "ykh/yokonuma.hpp"

namespace ykh {

namespace detail {
inline void require_divides(int d, int d_prime) {
  if (d < 1 || d_prime < 1 || d_prime % d != 0) {
    throw MathError(std::to_string(d) + " does not divide " + std::to_string(d_prime));
  }
}
}  // namespace detail

class DivisorChain {
 public:
  explicit DivisorChain(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw MathError("divisor chain must be non-empty");
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[j] < 1) throw MathError("divisor chain entries must be positive");
      if (j > 0) {
        if (entries_[j] <= entries_[j - 1]) throw MathError("divisor chain entries must increase");
        if (entries_[j] % entries_[j - 1] != 0) {
          throw MathError(std::to_string(entries_[j - 1]) + " does not divide " + std::to_string(entries_[j]));
        }
      }
    }
  }

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  int base() const { return entries_.front(); }

  friend bool operator==(const DivisorChain&, const DivisorChain&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < entries_.size(); ++j) out += (j ? "," : "") + std::to_string(entries_[j]);
    return out;
  }

 private:
  std::vector<int> entries_;
};

/// Parses "2,4,8"; syntax problems raise ParseError, divisibility problems MathError.
inline DivisorChain parse_chain(std::string_view text) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!tok.empty() && detail::is_space(tok.front())) {
      tok.remove_prefix(1);
      ++start;
    }
    while (!tok.empty() && detail::is_space(tok.back())) tok.remove_suffix(1);
    auto value = detail::parse_integer_token(tok);
    if (!value || *value < 1 || *value > 1'000'000) {
      throw ParseError("invalid divisor chain entry '" + std::string(tok) + "'", start);
    }
    entries.push_back(static_cast<int>(*value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DivisorChain(std::move(entries));
}

/// m mod d for a residue m mod d'.
inline int theta(int d, int d_prime, long m) {
  detail::require_divides(d, d_prime);
  long r = ((m % d_prime) + d_prime) % d_prime;
  return static_cast<int>(r % d);
}

/// Framings reduced entrywise mod d; permutations and coefficients unchanged.
inline AlgebraElement rho(int d, int d_prime, const AlgebraElement& a) {
  detail::require_divides(d, d_prime);
  if (a.order() != d_prime) throw MathError("rho expects an element of order " + std::to_string(d_prime));
  auto terms = a.terms();
  for (auto& [w, c] : terms) {
    w.d = d;
    for (int& f : w.framings) f = theta(d, d_prime, f);
  }
  return AlgebraElement::from_terms(d, a.strands(), terms);
}

/// x_a -> x_{a mod d} with x_0 = 1; z and u untouched.
inline TracePolynomial xi(int d, int d_prime, const TracePolynomial& p) {
  detail::require_divides(d, d_prime);
  if (p.order() != d_prime) throw MathError("xi expects a trace polynomial of order " + std::to_string(d_prime));
  TracePolynomial out(d);
  for (const auto& [mono, c] : p.terms()) {
    TraceMonomial m{mono.z, std::vector<int>(static_cast<std::size_t>(d - 1), 0)};
    for (std::size_t a = 0; a < mono.x.size(); ++a) {
      int b = theta(d, d_prime, static_cast<long>(a) + 1);
      if (b != 0) m.x[static_cast<std::size_t>(b - 1)] += mono.x[a];
    }
    out.add_term(m, c);
  }
  return out;
}

class CoherentElement {
 public:
  CoherentElement(DivisorChain chain, std::vector<AlgebraElement> parts)
      : chain_(std::move(chain)), parts_(std::move(parts)) {
    if (parts_.size() != chain_.size()) throw MathError("one algebra element per chain entry is required");
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j].order() != chain_[j]) throw MathError("part order does not match the chain");
      if (parts_[j].strands() != parts_[0].strands()) throw MathError("parts must share the strand count");
    }
    for (std::size_t j = 0; j + 1 < parts_.size(); ++j) {
      if (!(rho(chain_[j], chain_[j + 1], parts_[j + 1]) == parts_[j])) {
        throw CoherenceError("element tuple is not coherent between levels " + std::to_string(chain_[j]) + " and " +
                             std::to_string(chain_[j + 1]));
      }
    }
  }

  const DivisorChain& chain() const noexcept { return chain_; }
  const std::vector<AlgebraElement>& parts() const noexcept { return parts_; }
  int strands() const { return parts_.front().strands(); }

 private:
  DivisorChain chain_;
  std::vector<AlgebraElement> parts_;
};

class CoherentTrace {
 public:
  CoherentTrace(DivisorChain chain, std::vector<TracePolynomial> parts)
      : chain_(std::move(chain)), parts_(std::move(parts)) {
    if (parts_.size() != chain_.size()) throw MathError("one trace polynomial per chain entry is required");
    for (std::size_t j = 0; j < parts_.size(); ++j)
      if (parts_[j].order() != chain_[j]) throw MathError("trace order does not match the chain");
    for (std::size_t j = 0; j + 1 < parts_.size(); ++j) {
      if (!(xi(chain_[j], chain_[j + 1], parts_[j + 1]) == parts_[j])) {
        throw CoherenceError("trace tuple is not coherent between levels " + std::to_string(chain_[j]) + " and " +
                             std::to_string(chain_[j + 1]));
      }
    }
  }

  const DivisorChain& chain() const noexcept { return chain_; }
  const std::vector<TracePolynomial>& parts() const noexcept { return parts_; }

 private:
  DivisorChain chain_;
  std::vector<TracePolynomial> parts_;
};

inline CoherentElement coherent_represent(const DivisorChain& chain, const BraidWord& b) {
  std::vector<AlgebraElement> parts;
  for (int d : chain.entries()) parts.push_back(represent_braid(d, b));
  return CoherentElement(chain, std::move(parts));
}

/// The coherent idempotent (e_{d_j,i})_j.
inline CoherentElement coherent_idempotent(const DivisorChain& chain, int n, int i) {
  std::vector<AlgebraElement> parts;
  for (int d : chain.entries()) parts.push_back(idempotent_e(d, n, i));
  return CoherentElement(chain, std::move(parts));
}

inline CoherentTrace adelic_trace(const CoherentElement& ce) {
  std::vector<TracePolynomial> parts;
  for (const auto& a : ce.parts()) parts.push_back(markov_trace(a));
  return CoherentTrace(ce.chain(), std::move(parts));
}

/// (Delta_{d_j, S_j}(b))_j with S_j the lift of S from Z/d_1Z to Z/d_jZ.
inline std::vector<InvariantValue> adelic_delta(const DivisorChain& chain, const std::vector<int>& subset,
                                                const BraidWord& b) {
  std::vector<InvariantValue> out;
  for (int d : chain.entries()) {
    auto sol = solution_from_subset(d, lift_subset(chain.base(), d, subset));
    out.push_back(delta_invariant(sol, b));
  }
  return out;
}

}  // namespace ykh
