#pragma once

// The Yokonuma-Hecke algebra Y_{d,n}(u) in the basis t_1^{a_1}...t_n^{a_n} g_w.
//
// Products are computed by right multiplication with generators:
//   (t^a g_w) t_j = t^{a + unit at w(j)} g_w
//   (t^a g_w) g_i = t^a g_{w s_i}                     if l(w s_i) > l(w)
//   (t^a g_w) g_i = t^a g_{w'} (1 + (u-1) e_i - (u-1) e_i g_i)   otherwise,
// where w = w' s_i and the t-factors of e_i are pushed left through g_{w'}.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ykh/braid.hpp"
#include "ykh/error.hpp"
#include "ykh/laurent.hpp"
#include "ykh/permutation.hpp"

namespace ykh {

/// Basis element t_1^{a_1} ... t_n^{a_n} g_w.
struct BasisWord {
  int d = 1;
  int n = 1;
  std::vector<int> framings;  // a_j in 0..d-1
  std::vector<int> perm;      // w in one-line notation, values 1..n

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
};

namespace detail {

struct AlgebraContext {
  int d = 1;
  int n = 1;
  std::uint64_t perm_count = 1;
  std::vector<std::uint64_t> digit_weight;  // d^{n-1-j}
  const PermTable* perms = nullptr;
  LaurentU quad_coeff;                      // (u - 1) / d

  std::uint64_t framing_index(std::uint64_t key) const { return key / perm_count; }
  std::uint32_t perm_rank(std::uint64_t key) const { return static_cast<std::uint32_t>(key % perm_count); }
  std::uint64_t make_key(std::uint64_t fidx, std::uint64_t rank) const { return fidx * perm_count + rank; }

  int digit(std::uint64_t fidx, int j) const {
    return static_cast<int>((fidx / digit_weight[static_cast<std::size_t>(j)]) % static_cast<std::uint64_t>(d));
  }

  // Adds `amount` (any sign) to framing j, mod d.
  std::uint64_t bump(std::uint64_t fidx, int j, int amount) const {
    int old = digit(fidx, j);
    int neu = ((old + amount) % d + d) % d;
    auto w = digit_weight[static_cast<std::size_t>(j)];
    return fidx - static_cast<std::uint64_t>(old) * w + static_cast<std::uint64_t>(neu) * w;
  }
};

inline const AlgebraContext& algebra_context(int d, int n) {
  if (d < 1) throw MathError("Yokonuma-Hecke order d must be positive");
  const PermTable& perms = perm_table(n);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<AlgebraContext>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({d, n}); it != cache.end()) return *it->second;

  auto ctx = std::make_unique<AlgebraContext>();
  ctx->d = d;
  ctx->n = n;
  ctx->perms = &perms;
  ctx->perm_count = perms.count;
  ctx->digit_weight.assign(static_cast<std::size_t>(n), 1);
  long double total = static_cast<long double>(perms.count);
  for (int j = n - 2; j >= 0; --j)
    ctx->digit_weight[static_cast<std::size_t>(j)] = ctx->digit_weight[static_cast<std::size_t>(j + 1)] * static_cast<std::uint64_t>(d);
  for (int j = 0; j < n; ++j) total *= d;
  if (total >= static_cast<long double>(std::numeric_limits<std::int64_t>::max())) {
    throw MathError("Y_{" + std::to_string(d) + "," + std::to_string(n) + "} is too large to index");
  }
  ctx->quad_coeff = (LaurentU::u() - LaurentU(1L)) * LaurentU(make_rational(1, d));
  auto [it, inserted] = cache.emplace(std::make_pair(d, n), std::move(ctx));
  return *it->second;
}

// Sparse accumulator for building elements.
class TermAccumulator {
 public:
  void add(std::uint64_t key, const LaurentU& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }

  std::vector<std::pair<std::uint64_t, LaurentU>> finish() {
    std::vector<std::pair<std::uint64_t, LaurentU>> out;
    out.reserve(map_.size());
    for (auto& [k, c] : map_)
      if (!c.is_zero()) out.emplace_back(k, std::move(c));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    map_.clear();
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, LaurentU> map_;
};

}  // namespace detail

class AlgebraElement {
 public:
  using RawTerm = std::pair<std::uint64_t, LaurentU>;

  AlgebraElement(int d, int n) : ctx_(&detail::algebra_context(d, n)) {}

  static AlgebraElement unit(int d, int n) { return basis(d, n, std::vector<int>(static_cast<std::size_t>(n), 0), identity_perm(n)); }

  /// c * t^framings g_perm; framings are reduced mod d.
  static AlgebraElement basis(int d, int n, const std::vector<int>& framings, const std::vector<int>& perm,
                              const LaurentU& c = LaurentU(1L)) {
    AlgebraElement e(d, n);
    e.terms_.clear();
    if (!c.is_zero()) e.terms_.emplace_back(e.encode(framings, perm), c);
    return e;
  }

  /// Sum of c * word over the given pairs; like terms are collected.
  static AlgebraElement from_terms(int d, int n, const std::vector<std::pair<BasisWord, LaurentU>>& terms) {
    AlgebraElement e(d, n);
    detail::TermAccumulator acc;
    for (const auto& [w, c] : terms) acc.add(e.encode(w.framings, w.perm), c);
    e.terms_ = acc.finish();
    return e;
  }

  static AlgebraElement basis(const BasisWord& w, const LaurentU& c = LaurentU(1L)) {
    return basis(w.d, w.n, w.framings, w.perm, c);
  }

  /// g_i, 1 <= i <= n-1.
  static AlgebraElement g(int d, int n, int i) {
    check_index(n, i);
    auto perm = identity_perm(n);
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    return basis(d, n, std::vector<int>(static_cast<std::size_t>(n), 0), perm);
  }

  /// t_j^power, 1 <= j <= n.
  static AlgebraElement t(int d, int n, int j, int power = 1) {
    if (j < 1 || j > n) throw MathError("t index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    f[static_cast<std::size_t>(j - 1)] = power;
    return basis(d, n, f, identity_perm(n));
  }

  static AlgebraElement scalar(int d, int n, const LaurentU& c) {
    return basis(d, n, std::vector<int>(static_cast<std::size_t>(n), 0), identity_perm(n), c);
  }

  int order() const noexcept { return ctx_->d; }
  int strands() const noexcept { return ctx_->n; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const std::vector<RawTerm>& raw_terms() const noexcept { return terms_; }

  BasisWord decode(std::uint64_t key) const {
    BasisWord w;
    w.d = ctx_->d;
    w.n = ctx_->n;
    auto fidx = ctx_->framing_index(key);
    const auto& p = ctx_->perms->perms[ctx_->perm_rank(key)];
    for (int j = 0; j < ctx_->n; ++j) {
      w.framings.push_back(ctx_->digit(fidx, j));
      w.perm.push_back(p[static_cast<std::size_t>(j)] + 1);
    }
    return w;
  }

  std::uint64_t encode(const std::vector<int>& framings, const std::vector<int>& perm) const {
    const auto n = static_cast<std::size_t>(ctx_->n);
    if (framings.size() != n || perm.size() != n) throw MathError("basis word has the wrong number of strands");
    std::vector<std::uint8_t> p(n);
    std::vector<bool> seen(n, false);
    std::uint64_t fidx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] < 1 || perm[j] > ctx_->n || seen[static_cast<std::size_t>(perm[j] - 1)])
        throw MathError("not a permutation of 1.." + std::to_string(n));
      seen[static_cast<std::size_t>(perm[j] - 1)] = true;
      p[j] = static_cast<std::uint8_t>(perm[j] - 1);
      int a = ((framings[j] % ctx_->d) + ctx_->d) % ctx_->d;
      fidx += static_cast<std::uint64_t>(a) * ctx_->digit_weight[j];
    }
    return ctx_->make_key(fidx, ctx_->perms->rank(p));
  }

  std::vector<std::pair<BasisWord, LaurentU>> terms() const {
    std::vector<std::pair<BasisWord, LaurentU>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(decode(k), c);
    return out;
  }

  LaurentU coefficient(const BasisWord& w) const {
    auto key = encode(w.framings, w.perm);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const RawTerm& t, std::uint64_t k) { return t.first < k; });
    return (it != terms_.end() && it->first == key) ? it->second : LaurentU();
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = combine(*this, o, false); }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = combine(*this, o, true); }

  AlgebraElement& operator*=(const LaurentU& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return combine(a, b, false); }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return combine(a, b, true); }
  friend AlgebraElement operator*(AlgebraElement a, const LaurentU& s) { return a *= s; }
  friend AlgebraElement operator*(const LaurentU& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// x * g_i.
  AlgebraElement times_g(int i) const {
    check_index(ctx_->n, i);
    detail::TermAccumulator acc;
    for (const auto& [k, c] : terms_) apply_g(acc, k, c, i - 1);
    return from_raw(acc.finish());
  }

  /// x * e_{d,i}.
  AlgebraElement times_e(int i) const {
    check_index(ctx_->n, i);
    detail::TermAccumulator acc;
    LaurentU scale(make_rational(1, ctx_->d));
    for (const auto& [k, c] : terms_) {
      LaurentU cs = c * scale;
      auto fidx = ctx_->framing_index(k);
      auto rank = ctx_->perm_rank(k);
      const auto& w = ctx_->perms->perms[rank];
      int p = w[static_cast<std::size_t>(i - 1)];
      int q = w[static_cast<std::size_t>(i)];
      for (int m = 0; m < ctx_->d; ++m)
        acc.add(ctx_->make_key(ctx_->bump(ctx_->bump(fidx, p, m), q, -m), rank), cs);
    }
    return from_raw(acc.finish());
  }

  /// x * g_i^{-1} = x g_i - (u^-1 - 1) x e_i + (u^-1 - 1) x e_i g_i.
  AlgebraElement times_g_inverse(int i) const {
    LaurentU c = LaurentU::monomial(-1) - LaurentU(1L);
    AlgebraElement xe = times_e(i);
    AlgebraElement out = times_g(i);
    out += (xe.times_g(i) - xe) * c;
    return out;
  }

  /// Image under Y_{d,n} -> Y_{d,n'} (n' >= n), new strands unframed and fixed.
  AlgebraElement embedded(int new_n) const {
    if (new_n < ctx_->n) throw MathError("cannot embed into fewer strands");
    AlgebraElement out(ctx_->d, new_n);
    detail::TermAccumulator acc;
    for (const auto& [k, c] : terms_) {
      BasisWord w = decode(k);
      for (int j = ctx_->n; j < new_n; ++j) {
        w.framings.push_back(0);
        w.perm.push_back(j + 1);
      }
      acc.add(out.encode(w.framings, w.perm), c);
    }
    out.terms_ = acc.finish();
    return out;
  }

  /// Terms sorted by framings then permutation, e.g. "(u - 1)*t1*t2^2*g1 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      BasisWord w = decode(k);
      std::string word;
      for (int j = 0; j < ctx_->n; ++j) {
        int a = w.framings[static_cast<std::size_t>(j)];
        if (a == 0) continue;
        if (!word.empty()) word += "*";
        word += "t" + std::to_string(j + 1);
        if (a != 1) word += "^" + std::to_string(a);
      }
      for (int i : canonical_reduced_word(w.perm)) {
        if (!word.empty()) word += "*";
        word += "g" + std::to_string(i);
      }
      std::string term;
      if (word.empty()) term = "(" + c.to_string() + ")";
      else if (c == LaurentU(1L)) term = word;
      else term = "(" + c.to_string() + ")*" + word;
      if (!out.empty()) out += " + ";
      out += term;
    }
    return out;
  }

 private:
  explicit AlgebraElement(const detail::AlgebraContext* ctx) : ctx_(ctx) {}

  AlgebraElement from_raw(std::vector<RawTerm> raw) const {
    AlgebraElement r(ctx_);
    r.terms_ = std::move(raw);
    return r;
  }

  static std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j + 1;
    return p;
  }

  static void check_index(int n, int i) {
    if (i < 1 || i > n - 1) {
      throw MathError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
    }
  }

  static void check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.ctx_ != b.ctx_) {
      throw MathError("algebra mismatch: Y_{" + std::to_string(a.ctx_->d) + "," + std::to_string(a.ctx_->n) +
                      "} vs Y_{" + std::to_string(b.ctx_->d) + "," + std::to_string(b.ctx_->n) + "}");
    }
  }

  static AlgebraElement combine(const AlgebraElement& a, const AlgebraElement& b, bool subtract) {
    check_same(a, b);
    AlgebraElement r(a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        LaurentU c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Accumulates c * (basis word `key`) * g_{i+1}.
  void apply_g(detail::TermAccumulator& acc, std::uint64_t key, const LaurentU& c, int i) const {
    const auto& perms = *ctx_->perms;
    auto rank = ctx_->perm_rank(key);
    auto fidx = ctx_->framing_index(key);
    auto ui = static_cast<std::size_t>(i);
    auto shorter = perms.right_mul[ui][rank];
    if (!perms.descent[ui][rank]) {
      acc.add(ctx_->make_key(fidx, shorter), c);
      return;
    }
    // w = w' s_i: g_w g_i = g_{w'} + (u-1) g_{w'} e_i - (u-1) g_{w'} e_i g_i.
    acc.add(ctx_->make_key(fidx, shorter), c);
    const auto& wp = perms.perms[shorter];
    int p = wp[ui];
    int q = wp[ui + 1];
    LaurentU cq = c * ctx_->quad_coeff;
    LaurentU neg = -cq;
    for (int m = 0; m < ctx_->d; ++m) {
      auto f = ctx_->bump(ctx_->bump(fidx, p, m), q, -m);
      acc.add(ctx_->make_key(f, shorter), cq);
      acc.add(ctx_->make_key(f, rank), neg);
    }
  }

  friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

  const detail::AlgebraContext* ctx_;
  std::vector<RawTerm> terms_;
};

/// Product in Y_{d,n}: a is right-multiplied by t^c and then by the
/// generators of the canonical reduced word of each basis word of b.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same(a, b);
  const auto& ctx = *a.ctx_;
  detail::TermAccumulator total;
  for (const auto& [kb, cb] : b.terms_) {
    BasisWord wb = b.decode(kb);
    // a * t^c
    detail::TermAccumulator acc;
    for (const auto& [ka, ca] : a.terms_) {
      auto fidx = ctx.framing_index(ka);
      auto rank = ctx.perm_rank(ka);
      const auto& w = ctx.perms->perms[rank];
      for (int j = 0; j < ctx.n; ++j) {
        int cj = wb.framings[static_cast<std::size_t>(j)];
        if (cj) fidx = ctx.bump(fidx, w[static_cast<std::size_t>(j)], cj);
      }
      acc.add(ctx.make_key(fidx, rank), ca * cb);
    }
    auto cur = acc.finish();
    for (int i : canonical_reduced_word(wb.perm)) {
      for (const auto& [k, c] : cur) a.apply_g(acc, k, c, i - 1);
      cur = acc.finish();
    }
    for (const auto& [k, c] : cur) total.add(k, c);
  }
  return a.from_raw(total.finish());
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

/// e_{d,i} = (1/d) sum_m t_i^m t_{i+1}^{-m}.
inline AlgebraElement idempotent_e(int d, int n, int i) {
  return AlgebraElement::unit(d, n).times_e(i);
}

/// Image of sigma_i^{-1}: g_i - (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i.
inline AlgebraElement g_inverse(int d, int n, int i) {
  return AlgebraElement::unit(d, n).times_g_inverse(i);
}

/// The braid group representation sigma_i -> g_i.
inline AlgebraElement represent_braid(int d, const BraidWord& b) {
  AlgebraElement x = AlgebraElement::unit(d, b.strands());
  for (int k : b.letters()) x = k > 0 ? x.times_g(k) : x.times_g_inverse(-k);
  return x;
}

/// Closed form of g_i^m. The coefficient c below satisfies
///   m = 2k:      g^m = 1 + c e - c e g,  c = (u-1) sum_{l<k} u^{2l}
///   m = 2k+1:    g^m = g - c e + c e g,  c = u(u-1) sum_{l<k} u^{2l}
///   m = -2k:     g^m = 1 + c e - c e g,  c = u^-1 (u^-1 - 1) sum_{l<k} u^{-2l}
///   m = -2k+1:   g^m = g - c e + c e g,  c = (u^-1 - 1) sum_{l<k} u^{-2l}
inline AlgebraElement power_formula(int d, int n, int i, int m) {
  AlgebraElement e = idempotent_e(d, n, i);
  AlgebraElement g = AlgebraElement::g(d, n, i);
  AlgebraElement one = AlgebraElement::unit(d, n);
  AlgebraElement eg = e.times_g(i);
  const bool even = m % 2 == 0;
  const int k = m >= 0 ? m / 2 : (even ? -m / 2 : (1 - m) / 2);
  LaurentU geometric;
  for (int l = 0; l < k; ++l) geometric += LaurentU::monomial(m >= 0 ? 2 * l : -2 * l);
  const LaurentU u = LaurentU::u();
  const LaurentU uinv = LaurentU::monomial(-1);
  const LaurentU one_c(1L);
  LaurentU c;
  if (m >= 0) c = even ? (u - one_c) * geometric : u * (u - one_c) * geometric;
  else c = even ? uinv * (uinv - one_c) * geometric : (uinv - one_c) * geometric;
  if (even) return one + (e - eg) * c;
  return g - (e - eg) * c;
}

}  // namespace ykh
