#pragma once

// Named property suites used by the `verify` command and the acceptance run.
// Every check is an exact equality; a report lists each property with the
// number of cases tried and the first counterexample, if any.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ykh/adelic.hpp"
#include "ykh/braid.hpp"
#include "ykh/esystem.hpp"
#include "ykh/invariant.hpp"
#include "ykh/random.hpp"
#include "ykh/trace.hpp"
#include "ykh/yokonuma.hpp"

namespace ykh {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = describe();
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return !checks.empty();
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.passed() ? "PASS " : "FAIL ") + suite + "/" + c.name + " (" + std::to_string(c.cases) + " cases";
      if (c.failures) out += ", " + std::to_string(c.failures) + " failed; first: " + c.first_failure;
      out += ")\n";
    }
    return out;
  }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random cases per parameter combination; suites scale their loops by it.
  std::size_t samples = 20;
};

/// The (d, S) pairs used for invariant sampling.
inline const std::vector<std::pair<int, std::vector<int>>>& standard_pairs() {
  static const std::vector<std::pair<int, std::vector<int>>> pairs = {
      {1, {0}}, {2, {0}}, {2, {0, 1}}, {3, {0, 1}}, {4, {0, 2}}};
  return pairs;
}

namespace detail {
inline std::string dn_label(int d, int n) { return "d=" + std::to_string(d) + " n=" + std::to_string(n); }
inline std::string pair_label(const ESolution& sol) { return subset_to_string(sol.order(), sol.subset()); }
}  // namespace detail

/// Defining relations, quadratic relation, idempotent relations and cubic
/// relations for d in 1..max_d, n in 2..max_n.
inline SuiteReport relations_suite(int max_d = 4, int max_n = 4) {
  SuiteReport r{"relations", {}};
  CheckResult braid_far{"g_i g_j = g_j g_i (|i-j|>1)"}, braid_near{"g_i g_j g_i = g_j g_i g_j (|i-j|=1)"},
      t_comm{"t_i t_j = t_j t_i"}, t_order{"t_j^d = 1"}, t_g{"t_j g_i = g_i t_{s_i(j)}"},
      quad{"g_i^2 = 1 + (u-1) e_i - (u-1) e_i g_i"}, inv{"g_i g_i^-1 = 1"}, e_idem{"e_i^2 = e_i"},
      e_comm{"e_i e_j = e_j e_i"}, e_g{"e_i g_j = g_j e_i (j=i or |i-j|>1)"},
      e_near{"e_j g_i g_j = g_i g_j e_i (|i-j|=1)"}, cubic{"g_i^3 = -u g_i^2 + g_i + u"},
      cubic_inv{"g_i^-1 = u^-1 g_i^2 + g_i - u^-1"};
  const LaurentU u = LaurentU::u();
  const LaurentU one(1L);
  for (int d = 1; d <= max_d; ++d) {
    for (int n = 2; n <= max_n; ++n) {
      auto label = [d, n] { return detail::dn_label(d, n); };
      auto g = [&](int i) { return AlgebraElement::g(d, n, i); };
      auto e = [&](int i) { return idempotent_e(d, n, i); };
      auto t = [&](int j, int p = 1) { return AlgebraElement::t(d, n, j, p); };
      const auto unit = AlgebraElement::unit(d, n);
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          int gap = std::abs(i - j);
          if (gap > 1) {
            braid_far.record(g(i) * g(j) == g(j) * g(i), label);
            e_g.record(e(i) * g(j) == g(j) * e(i), label);
          }
          if (gap == 1) {
            braid_near.record(g(i) * g(j) * g(i) == g(j) * g(i) * g(j), label);
            e_near.record(e(j) * g(i) * g(j) == g(i) * g(j) * e(i), label);
          }
          e_comm.record(e(i) * e(j) == e(j) * e(i), label);
        }
        AlgebraElement gi = g(i), ei = e(i);
        quad.record(gi * gi == unit + ei * (u - one) - ei * gi * (u - one), label);
        inv.record(gi * g_inverse(d, n, i) == unit && g_inverse(d, n, i) * gi == unit, label);
        e_idem.record(ei * ei == ei, label);
        e_g.record(ei * gi == gi * ei, label);
        AlgebraElement g2 = gi * gi;
        cubic.record(g2 * gi == g2 * (-u) + gi + AlgebraElement::scalar(d, n, u), label);
        LaurentU uinv = LaurentU::monomial(-1);
        cubic_inv.record(g_inverse(d, n, i) == g2 * uinv + gi - AlgebraElement::scalar(d, n, uinv), label);
        for (int j = 1; j <= n; ++j) {
          int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
          t_g.record(t(j) * gi == gi * t(sj), label);
        }
      }
      for (int j = 1; j <= n; ++j) {
        t_order.record(t(j, d) == unit, label);
        for (int k = 1; k <= n; ++k) t_comm.record(t(j) * t(k) == t(k) * t(j), label);
      }
    }
  }
  r.checks = {braid_far, braid_near, t_comm, t_order, t_g, quad, inv, e_idem, e_comm, e_g, e_near, cubic, cubic_inv};
  return r;
}

/// Conjugation and stabilization invariance of Delta for every standard pair.
/// Conjugated braids have n <= 4 and length <= 8 before conjugation;
/// stabilized braids start from n <= 3 so the result has n <= 4.
inline SuiteReport markov_suite(const SuiteOptions& opt) {
  SuiteReport r{"markov", {}};
  CheckResult conj{"Delta(w b w^-1) = Delta(b)"}, stab{"Delta(b sigma_n^+-1) = Delta(b)"};
  Rng rng(opt.seed);
  for (const auto& [d, s] : standard_pairs()) {
    auto sol = solution_from_subset(d, s);
    for (std::size_t k = 0; k < opt.samples; ++k) {
      int n = static_cast<int>(rng.uniform(2, 4));
      BraidWord b = random_braid(rng, n, 8);
      BraidWord w = random_braid(rng, n, 3, 1);
      BraidWord c = markov_conjugate(b, w);
      conj.record(delta_invariant(sol, b) == delta_invariant(sol, c),
                  [&] { return detail::pair_label(sol) + " b=" + print_braid(b) + " w=" + print_braid(w); });
    }
    for (std::size_t k = 0; k < opt.samples; ++k) {
      int n = static_cast<int>(rng.uniform(1, 3));
      BraidWord b = random_braid(rng, n, 8);
      int sign = rng.coin() ? 1 : -1;
      BraidWord st = markov_stabilize(b, sign);
      stab.record(delta_invariant(sol, b) == delta_invariant(sol, st),
                  [&] { return detail::pair_label(sol) + " b=" + print_braid(b) + " sign=" + std::to_string(sign); });
    }
  }
  r.checks = {conj, stab};
  return r;
}

/// Cubic skein relation for every standard pair, and the two-term skein at d = 1.
inline SuiteReport skein_suite(const SuiteOptions& opt) {
  SuiteReport r{"skein", {}};
  CheckResult cubic{"cubic skein relation"}, homfly{"d=1 two-term skein relation"};
  Rng rng(opt.seed);
  for (const auto& [d, s] : standard_pairs()) {
    auto sol = solution_from_subset(d, s);
    for (std::size_t k = 0; k < opt.samples; ++k) {
      int n = static_cast<int>(rng.uniform(2, 4));
      BraidWord b = random_braid(rng, n, 6, 1);
      auto index = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(b.length()) - 1));
      cubic.record(skein_check(sol, b, index), [&] {
        return detail::pair_label(sol) + " b=" + print_braid(b) + " i=" + std::to_string(index);
      });
    }
  }
  for (std::size_t k = 0; k < opt.samples; ++k) {
    int n = static_cast<int>(rng.uniform(2, 4));
    BraidWord b = random_braid(rng, n, 6, 1);
    auto index = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(b.length()) - 1));
    homfly.record(homflypt_skein_check(b, index),
                  [&] { return "b=" + print_braid(b) + " i=" + std::to_string(index); });
  }
  r.checks = {cubic, homfly};
  return r;
}

/// Gerardin solutions satisfy the E-system: exhaustive for d <= exhaustive_d,
/// `opt.samples` random subsets for larger d up to max_d; tr(e_i) = 1/|S|.
inline SuiteReport esystem_suite(const SuiteOptions& opt, int max_d = 10, int exhaustive_d = 8) {
  SuiteReport r{"esystem", {}};
  CheckResult sols{"E-condition for X_{d,S}"}, d3{"d=3 displayed system"}, tre{"tr(e_i) = 1/|S|"};
  Rng rng(opt.seed);
  auto check_subset = [&](int d, const std::vector<int>& s) {
    auto sol = solution_from_subset(d, s);
    sols.record(verify_solution(d, sol.values()), [&] { return detail::pair_label(sol); });
  };
  for (int d = 1; d <= max_d; ++d) {
    if (d <= exhaustive_d) {
      for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
        std::vector<int> s;
        for (int a = 0; a < d; ++a)
          if (mask & (1UL << a)) s.push_back(a);
        check_subset(d, s);
      }
    } else {
      for (std::size_t k = 0; k < opt.samples; ++k) {
        auto mask = static_cast<unsigned long>(rng.uniform(1, (1L << d) - 1));
        std::vector<int> s;
        for (int a = 0; a < d; ++a)
          if (mask & (1UL << a)) s.push_back(a);
        check_subset(d, s);
      }
    }
  }
  for (const auto& sol : enumerate_solutions(3)) {
    const auto& x1 = sol.values()[1];
    const auto& x2 = sol.values()[2];
    Rational two(2);
    bool ok = x1 + x2 * x2 == x1 * x1 * x2 * two && x1 * x1 + x2 == x1 * x2 * x2 * two;
    d3.record(ok, [&] { return detail::pair_label(sol); });
  }
  for (int d = 1; d <= 6; ++d) {
    for (const auto& sol : enumerate_solutions(d)) {
      for (int n = 2; n <= 3; ++n) {
        for (int i = 1; i < n; ++i) {
          RatFunc v = trace_poly_substitute(markov_trace(idempotent_e(d, n, i)), sol);
          tre.record(v == RatFunc::constant(d, zeta_value(sol)),
                     [&] { return detail::pair_label(sol) + " n=" + std::to_string(n) + " i=" + std::to_string(i); });
        }
      }
    }
  }
  r.checks = {sols, d3, tre};
  return r;
}

/// The chains exercised by the coherence suite.
inline std::vector<DivisorChain> standard_chains() {
  return {DivisorChain({1, 2}), DivisorChain({2, 4}), DivisorChain({3, 6}), DivisorChain({2, 6, 12})};
}

/// rho(represent(b)) = represent(b) and xi(tr(a)) = tr(rho(a)) along chains;
/// lift transitivity; componentwise Markov invariance of the adelic invariant.
inline SuiteReport adelic_suite(const SuiteOptions& opt) {
  SuiteReport r{"adelic-coherence", {}};
  CheckResult rep{"rho o represent = represent"}, tr{"xi o tr = tr o rho"}, func{"rho and xi compose"},
      lift{"lift transitivity"}, card{"lift cardinality"}, markov{"adelic Delta Markov invariance"};
  Rng rng(opt.seed);
  for (const auto& chain : standard_chains()) {
    for (std::size_t k = 0; k < opt.samples; ++k) {
      int n = static_cast<int>(rng.uniform(2, 3));
      BraidWord b = random_braid(rng, n, 5);
      bool ok = true;
      try {
        coherent_represent(chain, b);
      } catch (const CoherenceError&) {
        ok = false;
      }
      rep.record(ok, [&] { return "chain " + chain.to_string() + " b=" + print_braid(b); });
      for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        int d = chain[j], dp = chain[j + 1];
        AlgebraElement a = random_element(rng, dp, n);
        tr.record(xi(d, dp, markov_trace(a)) == markov_trace(rho(d, dp, a)), [&] {
          return "d=" + std::to_string(d) + " d'=" + std::to_string(dp) + " a=" + a.to_string();
        });
      }
      if (chain.size() >= 3) {
        AlgebraElement a = random_element(rng, chain[2], n);
        func.record(rho(chain[0], chain[1], rho(chain[1], chain[2], a)) == rho(chain[0], chain[2], a) &&
                        xi(chain[0], chain[1], xi(chain[1], chain[2], markov_trace(a))) ==
                            xi(chain[0], chain[2], markov_trace(a)),
                    [&] { return "a=" + a.to_string(); });
      }
    }
  }
  for (int d = 1; d <= 12; ++d) {
    for (int dp = d; dp <= 12; dp += d) {
      for (int dpp = dp; dpp <= 12; dpp += dp) {
        for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
          std::vector<int> s;
          for (int a = 0; a < d; ++a)
            if (mask & (1UL << a)) s.push_back(a);
          auto direct = lift_subset(d, dpp, s);
          lift.record(direct == lift_subset(dp, dpp, lift_subset(d, dp, s)), [&] {
            return std::to_string(d) + "|" + std::to_string(dp) + "|" + std::to_string(dpp) + " S=" +
                   subset_to_string(d, s);
          });
          card.record(direct.size() == s.size() * static_cast<std::size_t>(dpp / d),
                      [&] { return subset_to_string(d, s) + " -> " + std::to_string(dpp); });
        }
      }
    }
  }
  DivisorChain chain({2, 4});
  for (std::size_t k = 0; k < opt.samples; ++k) {
    std::vector<int> s = {static_cast<int>(rng.uniform(0, 1))};
    if (rng.coin()) s = {0, 1};
    int n = static_cast<int>(rng.uniform(2, 3));
    BraidWord b = random_braid(rng, n, 6);
    BraidWord moved = rng.coin() ? markov_conjugate(b, random_braid(rng, n, 2, 1))
                                 : markov_stabilize(b, rng.coin() ? 1 : -1);
    markov.record(adelic_delta(chain, s, b) == adelic_delta(chain, s, moved),
                  [&] { return "b=" + print_braid(b) + " moved=" + print_braid(moved); });
  }
  r.checks = {rep, tr, func, lift, card, markov};
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "markov", "skein", "esystem", "adelic-coherence"};
  return names;
}

/// Runs a suite by name; std::nullopt for an unknown name.
inline std::optional<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "relations") return relations_suite();
  if (name == "markov") return markov_suite(opt);
  if (name == "skein") return skein_suite(opt);
  if (name == "esystem") return esystem_suite(opt);
  if (name == "adelic-coherence") return adelic_suite(opt);
  return std::nullopt;
}

}  // namespace ykh
