#pragma once

// Symmetric-group bookkeeping: lexicographic ranking of one-line
// permutations and precomputed right multiplication by simple transpositions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "ykh/error.hpp"

namespace ykh {

/// Largest strand count the algebra engine accepts.
inline constexpr int kMaxStrands = 9;

/// Fixed reduced word of a permutation given in one-line notation with
/// values 1..n. Repeatedly pick the smallest i with perm(i) > perm(i+1),
/// apply s_i on the right, record i; the recorded list reversed is the word.
inline std::vector<int> canonical_reduced_word(std::vector<int> perm) {
  std::vector<int> recorded;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < perm.size() && perm[i] < perm[i + 1]) ++i;
    if (i + 1 >= perm.size()) break;
    std::swap(perm[i], perm[i + 1]);
    recorded.push_back(static_cast<int>(i) + 1);
  }
  return {recorded.rbegin(), recorded.rend()};
}

/// Multiplies out a word in the simple transpositions (1-based indices) as
/// a composition of functions, s_{i1} o s_{i2} o ..., in one-line notation.
inline std::vector<int> permutation_of_word(int n, const std::vector<int>& word) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i : word) std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  return perm;
}

inline int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

namespace detail {

struct PermTable {
  int n = 0;
  std::uint64_t count = 1;
  std::vector<std::vector<std::uint8_t>> perms;         // 0-based one-line, by lex rank
  std::vector<std::vector<std::uint32_t>> right_mul;    // [i][rank] -> rank of w o s_{i+1}
  std::vector<std::vector<std::uint8_t>> descent;       // [i][rank] -> w(i+1) > w(i+2)
  std::vector<std::uint64_t> factorial;

  std::uint32_t rank(const std::vector<std::uint8_t>& p) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      int smaller = 0;
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[j] < p[i]) ++smaller;
      r += static_cast<std::uint64_t>(smaller) * factorial[p.size() - 1 - i];
    }
    return static_cast<std::uint32_t>(r);
  }
};

inline const PermTable& perm_table(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw MathError("strand count " + std::to_string(n) + " outside supported range 1.." +
                    std::to_string(kMaxStrands));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PermTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  auto t = std::make_unique<PermTable>();
  t->n = n;
  t->factorial.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) t->factorial[static_cast<std::size_t>(i)] = t->factorial[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  t->count = t->factorial[static_cast<std::size_t>(n)];

  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    t->perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  t->right_mul.assign(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<std::uint32_t>(t->count));
  t->descent.assign(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<std::uint8_t>(t->count));
  for (int i = 0; i + 1 < n; ++i) {
    for (std::uint64_t r = 0; r < t->count; ++r) {
      auto q = t->perms[r];
      auto ui = static_cast<std::size_t>(i);
      t->descent[ui][r] = q[ui] > q[ui + 1];
      std::swap(q[ui], q[ui + 1]);
      t->right_mul[ui][r] = t->rank(q);
    }
  }
  auto [it, inserted] = cache.emplace(n, std::move(t));
  return *it->second;
}

}  // namespace detail
}  // namespace ykh
