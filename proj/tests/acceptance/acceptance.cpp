// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ykh_cli.hpp"

using namespace ykh;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

const std::vector<std::pair<int, std::vector<int>>> kPaperPairs = {
    {1, {0}}, {2, {0}}, {2, {0, 1}}, {3, {0, 1, 2}}, {4, {0, 2}}};

Outcome from_report(const SuiteReport& r) {
  Outcome o;
  for (const auto& c : r.checks) {
    o.require(c.passed(), c.name + ": " + std::to_string(c.failures) + "/" + std::to_string(c.cases) + " failed (" +
                              c.first_failure + ")");
  }
  std::size_t cases = 0;
  for (const auto& c : r.checks) cases += c.cases;
  if (o.ok) o.note = std::to_string(cases) + " cases";
  return o;
}

Outcome relations() {
  auto o = from_report(relations_suite(4, 4));
  return o;
}

Outcome power_formula_oracle() {
  Outcome o;
  std::size_t cases = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 3; ++n) {
      for (int i = 1; i < n; ++i) {
        AlgebraElement pos = AlgebraElement::unit(d, n), neg = pos;
        o.require(power_formula(d, n, i, 0) == pos, "m=0");
        for (int m = 1; m <= 6; ++m) {
          pos = pos * AlgebraElement::g(d, n, i);
          neg = neg * g_inverse(d, n, i);
          o.require(power_formula(d, n, i, m) == pos, "d=" + std::to_string(d) + " m=" + std::to_string(m));
          o.require(power_formula(d, n, i, -m) == neg, "d=" + std::to_string(d) + " m=" + std::to_string(-m));
          cases += 2;
        }
      }
    }
  }
  if (o.ok) o.note = std::to_string(cases) + " powers";
  return o;
}

Outcome trace_axioms() {
  Outcome o;
  Rng rng(1001);
  std::size_t pairs = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      o.require(markov_trace(AlgebraElement::unit(d, n)) == TracePolynomial::one(d), "tr(1)");
      for (int k = 0; k < 200; ++k) {
        AlgebraElement a = random_element(rng, d, n), b = random_element(rng, d, n);
        TracePolynomial ta = markov_trace(a);
        o.require(markov_trace(a * b) == markov_trace(b * a), "cyclicity d=" + std::to_string(d));
        AlgebraElement big = a.embedded(n + 1);
        o.require(markov_trace(big.times_g(n)) == ta.times_z(), "tr(a g_n)");
        int m = static_cast<int>(rng.uniform(0, d - 1));
        o.require(markov_trace(big * AlgebraElement::t(d, n + 1, n + 1, m)) == ta.times_x(m), "tr(a t^m)");
        ++pairs;
      }
    }
  }
  if (o.ok) o.note = std::to_string(pairs) + " random pairs";
  return o;
}

Outcome esystem() {
  SuiteOptions opt{2024, 100};
  Outcome o = from_report(esystem_suite(opt, 10, 8));
  for (int d = 1; d <= 8; ++d)
    for (const auto& sol : enumerate_solutions(d)) o.require(oracle::e_condition(d, sol.values()), "brute force");
  return o;
}

Outcome factorization() {
  Outcome o;
  Rng rng(1005);
  std::size_t cases = 0;
  for (int d = 1; d <= 4; ++d) {
    for (const auto& sol : enumerate_solutions(d)) {
      RatFunc zeta = RatFunc::constant(d, zeta_value(sol));
      for (int k = 0; k < 100; ++k) {
        int n = static_cast<int>(rng.uniform(1, 3));
        AlgebraElement alpha = random_element(rng, d, n).embedded(n + 1);
        RatFunc lhs = trace_poly_substitute(markov_trace(alpha.times_e(n)), sol);
        RatFunc rhs = trace_poly_substitute(markov_trace(alpha), sol) * zeta;
        o.require(lhs == rhs, subset_to_string(d, sol.subset()) + " alpha=" + alpha.to_string());
        ++cases;
      }
    }
  }
  if (o.ok) o.note = std::to_string(cases) + " alphas";
  return o;
}

Outcome paper_values() {
  Outcome o;
  for (const auto& [d, s] : kPaperPairs) {
    auto sol = solution_from_subset(d, s);
    oracle::Params p(d, zeta_value(sol));
    std::string tag = subset_to_string(d, sol.subset());
    o.require(delta_invariant(sol, parse_braid("1:")) == InvariantValue::one(d, p.zeta), "unknot " + tag);
    o.require(delta_invariant(sol, parse_braid("1 1 1")) == oracle::right_trefoil(p), "right trefoil " + tag);
    o.require(delta_invariant(sol, parse_braid("-1 -1 -1")) == oracle::left_trefoil(p), "left trefoil " + tag);
    o.require(delta_invariant(sol, parse_braid("1 1")) == oracle::hopf(p), "Hopf " + tag);
  }
  if (o.ok) o.note = "5 pairs x 4 values";
  return o;
}

Outcome markov_invariance() { return from_report(markov_suite(SuiteOptions{7007, 300})); }

Outcome skein() { return from_report(skein_suite(SuiteOptions{8008, 100})); }

Outcome homflypt() {
  Outcome o;
  Rng rng(9009);
  for (int k = 0; k < 100; ++k) {
    int n = static_cast<int>(rng.uniform(2, 4));
    BraidWord b = random_braid(rng, n, 6, 1);
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(b.length()) - 1));
    o.require(homflypt_skein_check(b, i), "skein at " + print_braid(b));
  }
  oracle::HomflyptPowers reference;
  for (int k = -6; k <= 6; ++k) {
    std::vector<int> letters(static_cast<std::size_t>(std::abs(k)), k < 0 ? -1 : 1);
    o.require(homflypt_specialize(BraidWord(2, letters)) == reference(k), "sigma^" + std::to_string(k));
  }
  InvariantValue right = homflypt_specialize(parse_braid("1 1 1"));
  InvariantValue left = homflypt_specialize(parse_braid("-1 -1 -1"));
  o.require(mirror_image(right) == left && mirror_image(left) == right, "trefoil mirror");
  if (o.ok) o.note = "100 crossings, 13 powers, mirror pair";
  return o;
}

Outcome adelic() { return from_report(adelic_suite(SuiteOptions{1010, 50})); }

Outcome golden() {
  Outcome o;
  std::ifstream cases(std::string(YKH_GOLDEN_DIR) + "/cases.txt");
  o.require(static_cast<bool>(cases), "missing cases.txt");
  std::string line;
  std::size_t count = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::string name = line.substr(0, bar);
    std::vector<std::string> args;
    std::istringstream fields(line.substr(bar + 1));
    std::string arg;
    while (std::getline(fields, arg, '|')) args.push_back(arg);
    for (auto& a : args)
      if (a.rfind("@DATA@", 0) == 0) a = std::string(YKH_DATA_DIR) + a.substr(6);
    std::string outputs[2];
    for (auto& text : outputs) {
      std::ostringstream out, err;
      int code = cli::run_cli(args, out, err);
      text = "exit " + std::to_string(code) + "\n" + out.str();
    }
    std::ifstream expected_file(std::string(YKH_GOLDEN_DIR) + "/" + name + ".out");
    std::stringstream expected;
    expected << expected_file.rdbuf();
    o.require(outputs[0] == outputs[1], name + ": runs differ");
    o.require(static_cast<bool>(expected_file) && outputs[0] == expected.str(), name + ": differs from golden file");
    ++count;
  }
  if (o.ok) o.note = std::to_string(count) + " golden cases";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "relations", relations},
      {2, "power formula", power_formula_oracle},
      {3, "trace axioms", trace_axioms},
      {4, "E-system", esystem},
      {5, "trace factorization", factorization},
      {6, "invariant values", paper_values},
      {7, "Markov invariance", markov_invariance},
      {8, "cubic skein relation", skein},
      {9, "d=1 HOMFLYPT", homflypt},
      {10, "adelic coherence", adelic},
      {11, "CLI determinism", golden},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.note << " ["
              << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
