#pragma once

// The Markov trace tr_d on Y_{d,n}, computed basis word by basis word.
//
// For t^a g_w in Y_{d,n}:
//  * n = 1: tr(t_1^m) = x_m (x_0 = 1).
//  * w(n) = n: tr(t^a g_w) = x_{a_n} tr(t^{a'} g_{w'}) with the last strand removed.
//  * otherwise write w = v (s_{n-1} ... s_k) with v in S_{n-1}; then
//      t^a g_w = X g_{n-1} Y,  X = t^{a'} g_v,  Y = t_{n-1}^{a_n} g_{n-2} ... g_k,
//    and tr(X g_{n-1} Y) = tr(Y X g_{n-1}) = z tr(Y X).

#include <cstdint>
#include <tuple>
#include <unordered_map>

#include "ykh/trace_polynomial.hpp"
#include "ykh/yokonuma.hpp"

namespace ykh {

class TraceEngine {
 public:
  TracePolynomial trace(const AlgebraElement& a) {
    TracePolynomial total(a.order());
    for (const auto& [key, c] : a.raw_terms()) total += trace_word(a, key) * c;
    return total;
  }

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  struct Key {
    int d;
    int n;
    std::uint64_t word;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.word * 0x9E3779B97F4A7C15ULL;
      h ^= (static_cast<std::uint64_t>(k.d) << 32) ^ static_cast<std::uint64_t>(k.n) ^ (h >> 29);
      return static_cast<std::size_t>(h);
    }
  };

  const TracePolynomial& trace_word(const AlgebraElement& owner, std::uint64_t key) {
    const int d = owner.order();
    const int n = owner.strands();
    Key ck{d, n, key};
    if (auto it = cache_.find(ck); it != cache_.end()) return it->second;
    TracePolynomial value = compute(owner.decode(key));
    return cache_.emplace(ck, std::move(value)).first->second;
  }

  TracePolynomial compute(const BasisWord& w) {
    const int d = w.d;
    const int n = w.n;
    if (n == 1) return TracePolynomial::x(d, w.framings[0]);

    const auto last = static_cast<std::size_t>(n - 1);
    std::vector<int> rest_framings(w.framings.begin(), w.framings.end() - 1);
    if (w.perm[last] == n) {
      std::vector<int> rest_perm(w.perm.begin(), w.perm.end() - 1);
      auto sub = AlgebraElement::basis(d, n - 1, rest_framings, rest_perm);
      return trace(sub).times_x(w.framings[last]);
    }

    // k0: 0-based position carrying the value n.
    std::size_t k0 = 0;
    while (w.perm[k0] != n) ++k0;
    std::vector<int> v_perm;
    for (std::size_t j = 0; j < w.perm.size(); ++j)
      if (j != k0) v_perm.push_back(w.perm[j]);
    auto x = AlgebraElement::basis(d, n - 1, rest_framings, v_perm);

    // g_{n-2} ... g_k in S_{n-1}: positions k0..n-2 rotate, k0 -> n-2.
    std::vector<int> y_perm;
    for (int j = 0; j < n - 1; ++j) {
      auto uj = static_cast<std::size_t>(j);
      if (uj < k0) y_perm.push_back(j + 1);
      else if (uj == k0) y_perm.push_back(n - 1);
      else y_perm.push_back(j);
    }
    std::vector<int> y_framings(static_cast<std::size_t>(n - 1), 0);
    y_framings[static_cast<std::size_t>(n - 2)] = w.framings[last];
    auto y = AlgebraElement::basis(d, n - 1, y_framings, y_perm);

    return trace(y * x).times_z();
  }

  std::unordered_map<Key, TracePolynomial, KeyHash> cache_;
};

namespace detail {
inline TraceEngine& thread_trace_engine() {
  thread_local TraceEngine engine;
  return engine;
}
}  // namespace detail

/// tr_d(a) as a polynomial in z, x_1..x_{d-1} with Laurent coefficients in u.
inline TracePolynomial markov_trace(const AlgebraElement& a) {
  return detail::thread_trace_engine().trace(a);
}

/// tr_d of the image of b under sigma_i -> g_i.
inline TracePolynomial trace_of_braid(int d, const BraidWord& b) {
  return markov_trace(represent_braid(d, b));
}

}  // namespace ykh
