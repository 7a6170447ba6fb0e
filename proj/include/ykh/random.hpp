#pragma once

// Seeded generators for braids, algebra elements and coefficients. Integer
// draws use rejection sampling on mt19937_64 so sequences are identical
// across standard library implementations.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ykh/braid.hpp"
#include "ykh/laurent.hpp"
#include "ykh/yokonuma.hpp"

namespace ykh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw MathError("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Letters drawn uniformly from +-1..+-(n-1); length uniform in [min_len, max_len].
inline BraidWord random_braid(Rng& rng, int n, int max_len, int min_len = 0) {
  std::vector<int> letters;
  if (n >= 2) {
    long len = rng.uniform(min_len, max_len);
    for (long k = 0; k < len; ++k) {
      int gen = static_cast<int>(rng.uniform(1, n - 1));
      letters.push_back(rng.coin() ? gen : -gen);
    }
  }
  return BraidWord(n, std::move(letters));
}

/// One or two terms c u^e with c in [-3, 3] \ {0} and e in [-2, 2].
inline LaurentU random_laurent(Rng& rng) {
  LaurentU out;
  long terms = rng.uniform(1, 2);
  for (long k = 0; k < terms; ++k) {
    long c = rng.uniform(1, 3) * (rng.coin() ? 1 : -1);
    out += LaurentU::monomial(static_cast<int>(rng.uniform(-2, 2)), Rational(c));
  }
  if (out.is_zero()) out = LaurentU(1L);
  return out;
}

inline BasisWord random_basis_word(Rng& rng, int d, int n) {
  BasisWord w{d, n, {}, {}};
  for (int j = 0; j < n; ++j) {
    w.framings.push_back(static_cast<int>(rng.uniform(0, d - 1)));
    w.perm.push_back(j + 1);
  }
  for (int j = n - 1; j > 0; --j) std::swap(w.perm[static_cast<std::size_t>(j)], w.perm[static_cast<std::size_t>(rng.uniform(0, j))]);
  return w;
}

/// Combination of up to `max_terms` random basis words with random coefficients.
inline AlgebraElement random_element(Rng& rng, int d, int n, int max_terms = 3) {
  std::vector<std::pair<BasisWord, LaurentU>> terms;
  long count = rng.uniform(1, max_terms);
  for (long k = 0; k < count; ++k) terms.emplace_back(random_basis_word(rng, d, n), random_laurent(rng));
  return AlgebraElement::from_terms(d, n, terms);
}

}  // namespace ykh
