#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ykh;

namespace {
struct Case {
  int d;
  std::vector<int> s;
};
const std::vector<Case> kCases = {{1, {0}}, {2, {0}}, {2, {0, 1}}, {3, {0, 1, 2}}, {4, {0, 2}}, {3, {0, 1}}};
}  // namespace

TEST(Invariant, LambdaIdentities) {
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    oracle::Params p(c.d, zeta_value(sol));
    EXPECT_EQ(lambda_param(sol), p.lambda);
    EXPECT_EQ(p.one - p.lambda * p.u, p.z.inverse() * p.zeta_f * (p.one - p.u));
    EXPECT_EQ(normalization_d(c.d, p.zeta), p.big_d());
    InvariantValue dsz = normalization_d(c.d, p.zeta).times_sqrt_lambda(1) * p.z;
    EXPECT_EQ(dsz, InvariantValue::one(c.d, p.zeta));
  }
}

TEST(Invariant, PaperValues) {
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    oracle::Params p(c.d, zeta_value(sol));
    EXPECT_EQ(delta_invariant(sol, parse_braid("1:")), InvariantValue::one(c.d, p.zeta));
    EXPECT_EQ(delta_invariant(sol, parse_braid("1 1 1")), oracle::right_trefoil(p));
    EXPECT_EQ(delta_invariant(sol, parse_braid("-1 -1 -1")), oracle::left_trefoil(p));
    EXPECT_EQ(delta_invariant(sol, parse_braid("1 1")), oracle::hopf(p));
  }
}

TEST(Invariant, HopfCoefficientIsUMinusOne) {
  auto sol = solution_from_subset(2, {0, 1});
  oracle::Params p(2, zeta_value(sol));
  InvariantValue plus_variant = p.value(1, (p.one + (p.u + p.one) * (p.zeta_f - p.z)) / p.z);
  EXPECT_FALSE(delta_invariant(sol, parse_braid("1 1")) == plus_variant);
}

TEST(Invariant, UnknotsAndUnlinks) {
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    Rational zeta = zeta_value(sol);
    for (const char* unknot : {"1", "-1", "1 2", "1 -2", "-1 2 -3", "2 1 3"})
      EXPECT_EQ(delta_invariant(sol, parse_braid(unknot)), InvariantValue::one(c.d, zeta)) << unknot;
    InvariantValue dpow = InvariantValue::one(c.d, zeta);
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(delta_invariant(sol, BraidWord::identity(n)), dpow);
      dpow = dpow * normalization_d(c.d, zeta);
    }
  }
}

TEST(Invariant, MarkovInvarianceSample) {
  Rng rng(77);
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    for (int k = 0; k < 15; ++k) {
      int n = static_cast<int>(rng.uniform(2, 3));
      BraidWord b = random_braid(rng, n, 6);
      EXPECT_EQ(delta_invariant(sol, b), delta_invariant(sol, markov_conjugate(b, random_braid(rng, n, 3, 1))));
      EXPECT_EQ(delta_invariant(sol, b), delta_invariant(sol, markov_stabilize(b, rng.coin() ? 1 : -1)));
    }
  }
}

TEST(Invariant, SkeinExamples) {
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(skein_check(sol, parse_braid("1 1 1"), i));
    EXPECT_TRUE(skein_check(sol, parse_braid("1 2 1"), 1));
  }
  EXPECT_THROW(skein_check(solution_from_subset(1, {0}), parse_braid("1"), 1), MathError);
}

TEST(Invariant, SkeinFailsForWrongCoefficients) {
  // Replacing 1/(lambda u) by 1/lambda breaks the identity.
  auto sol = solution_from_subset(2, {0});
  auto q = skein_quadruple(parse_braid("1 1 1"), 0);
  RatFunc inv_u = RatFunc::monomial(2, 0, -1);
  InvariantValue lhs = delta_invariant(sol, q.minus).times_sqrt_lambda(1);
  InvariantValue wrong = delta_invariant(sol, q.plus_plus).times_sqrt_lambda(-2) +
                         delta_invariant(sol, q.plus).times_sqrt_lambda(-1) - delta_invariant(sol, q.zero) * inv_u;
  EXPECT_FALSE(lhs == wrong);
}

TEST(Invariant, HomflyptMatchesSkeinRecursion) {
  oracle::HomflyptPowers reference;
  for (int k = -5; k <= 6; ++k) {
    std::vector<int> letters(static_cast<std::size_t>(std::abs(k)), k < 0 ? -1 : 1);
    EXPECT_EQ(homflypt_specialize(BraidWord(2, letters)), reference(k)) << k;
  }
  oracle::Params p(1, Rational(1));
  EXPECT_EQ(homflypt_specialize(parse_braid("1 1 1")), oracle::right_trefoil(p));
  EXPECT_EQ(homflypt_specialize(parse_braid("1 1")), p.value(1, (p.one + (p.u - p.one) * (p.one - p.z)) / p.z));
}

TEST(Invariant, HomflyptSkeinOnRandomCrossings) {
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    int n = static_cast<int>(rng.uniform(2, 4));
    BraidWord b = random_braid(rng, n, 6, 1);
    EXPECT_TRUE(homflypt_skein_check(b, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(b.length()) - 1))));
  }
}

TEST(Invariant, MirrorRelation) {
  Rng rng(6);
  for (const auto& c : kCases) {
    auto sol = solution_from_subset(c.d, c.s);
    oracle::Params p(c.d, zeta_value(sol));
    EXPECT_EQ(mirror_image(oracle::right_trefoil(p)), oracle::left_trefoil(p));
    EXPECT_EQ(mirror_image(oracle::left_trefoil(p)), oracle::right_trefoil(p));
    for (int k = 0; k < 5; ++k) {
      BraidWord b = random_braid(rng, static_cast<int>(rng.uniform(2, 3)), 5);
      EXPECT_EQ(mirror_image(delta_invariant(sol, b)), delta_invariant(sol, mirror(b))) << print_braid(b);
    }
  }
}

TEST(Invariant, ParityAndArithmetic) {
  auto sol = solution_from_subset(2, {0});
  oracle::Params p(2, zeta_value(sol));
  InvariantValue h = oracle::hopf(p);
  EXPECT_EQ(h.half_lambda(), 1);
  EXPECT_EQ(h.times_sqrt_lambda(1).half_lambda(), 0);
  EXPECT_EQ(h.times_sqrt_lambda(1).body(), h.body() * p.lambda);
  EXPECT_EQ(h.times_sqrt_lambda(-1).body(), h.body());
  EXPECT_EQ(h.times_sqrt_lambda(-3).body(), h.body() / p.lambda);
  EXPECT_THROW(h + InvariantValue::one(2, p.zeta), MathError);
  EXPECT_THROW(h + InvariantValue::one(3, p.zeta), MathError);
  EXPECT_EQ(h - h, InvariantValue(2, p.zeta, 0, RatFunc(2)));
}

TEST(Invariant, RenderingAndEvaluation) {
  auto sol = solution_from_subset(1, {0});
  InvariantValue h = delta_invariant(sol, parse_braid("1 1"));
  EXPECT_EQ(h.to_string(), "sqrtLambda^1 * ((-z*u + z + u) / (z))");
  // u = 2, z = 3: body = -1/3, lambda = (3 + 1) / 6
  auto v = h.evaluate({2.0, 0.0}, {3.0, 0.0});
  EXPECT_NEAR(v.real(), -std::sqrt(2.0 / 3.0) / 3.0, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}
