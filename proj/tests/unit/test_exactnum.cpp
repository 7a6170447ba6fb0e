#include <gtest/gtest.h>

#include <complex>

#include "oracles.hpp"

using namespace ykh;

namespace {
std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(make_rational(-6, 4)), "-3/2");
}

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), q({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), q({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), q({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), q({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), q({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), q({1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(10), 4);
}

TEST(CyclotomicPolynomial, RootsAreNumericRoots) {
  for (int d = 1; d <= 30; ++d) {
    const auto& phi = cyclotomic_polynomial(d);
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / d), value = 0, power = 1;
    for (const auto& c : phi) {
      value += c.get_d() * power;
      power *= z;
    }
    EXPECT_LT(std::abs(value), 1e-9) << d;
  }
}

TEST(Cyclotomic, RootPowersWrap) {
  for (int d = 1; d <= 12; ++d) {
    EXPECT_TRUE(Cyclotomic::root(d, d).is_one());
    EXPECT_TRUE(Cyclotomic::root(d, 0).is_one());
    EXPECT_EQ(Cyclotomic::root(d, -1) * Cyclotomic::root(d, 1), Cyclotomic(d, Rational(1)));
    Cyclotomic sum(d);
    for (int k = 0; k < d; ++k) sum += Cyclotomic::root(d, k);
    EXPECT_EQ(sum, Cyclotomic(d, Rational(d == 1 ? 1 : 0))) << d;
  }
}

TEST(Cyclotomic, ReductionIsCanonical) {
  // zeta4^2 = -1, zeta3^2 = -1 - zeta3, zeta6^3 = -1
  EXPECT_EQ(Cyclotomic::root(4, 2), Cyclotomic(4, Rational(-1)));
  EXPECT_EQ(Cyclotomic::root(3, 2), Cyclotomic::from_coefficients(3, q({-1, -1})));
  EXPECT_EQ(Cyclotomic::root(6, 3), Cyclotomic(6, Rational(-1)));
  EXPECT_EQ(Cyclotomic::root(4, 3).to_string(), "-zeta4");
  EXPECT_EQ((Cyclotomic(4, make_rational(1, 2)) - Cyclotomic::root(4, 1)).to_string(), "1/2 - zeta4");
}

TEST(Cyclotomic, InverseAndNumericAgreement) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int d = static_cast<int>(rng.uniform(1, 12));
    Cyclotomic c(d);
    for (int k = 0; k < d; ++k) c += Cyclotomic::root(d, k) * Rational(rng.uniform(-3, 3));
    if (c.is_zero()) continue;
    Cyclotomic inv = c.inverse();
    EXPECT_TRUE((c * inv).is_one());
    EXPECT_LT(std::abs(c.to_complex() * inv.to_complex() - 1.0), 1e-9);
  }
  EXPECT_THROW(Cyclotomic(5).inverse(), MathError);
}

TEST(Cyclotomic, RaisingAlongDivisors) {
  Cyclotomic a = Cyclotomic::root(2, 1);  // -1
  Cyclotomic b = Cyclotomic::root(4, 1);
  EXPECT_EQ(a * b, Cyclotomic::root(4, 3));
  EXPECT_EQ(Cyclotomic::root(3, 1).raised_to(6), Cyclotomic::root(6, 2));
  EXPECT_THROW(Cyclotomic::root(3, 1) + Cyclotomic::root(4, 1), MathError);
}

TEST(LaurentU, ArithmeticAndRendering) {
  LaurentU u = LaurentU::u();
  LaurentU one(1L);
  LaurentU p = u * u - u + one;
  EXPECT_EQ(p.to_string(), "u^2 - u + 1");
  EXPECT_EQ((p - p).to_string(), "0");
  LaurentU ui = LaurentU::monomial(-1);
  EXPECT_EQ(u * ui, one);
  EXPECT_EQ(p.inverted_variable(), ui * ui - ui + one);
  EXPECT_EQ(p.min_exponent(), 0);
  EXPECT_EQ(p.max_exponent(), 2);
  EXPECT_EQ((u - one).pow(3), u * u * u - u * u * LaurentU(3L) + u * LaurentU(3L) - one);
}

TEST(RatFunc, NormalizesByGcd) {
  const int d = 1;
  RatFunc u = RatFunc::u(d), z = RatFunc::z(d), one = RatFunc::constant(d, Rational(1));
  RatFunc f = (u * u - one) / (u - one);
  EXPECT_EQ(f, u + one);
  EXPECT_EQ(f.denominator(), BiPoly::constant(d, Cyclotomic(d, Rational(1))));
  RatFunc g = (z * u + z) / (z * z * (u + one));
  EXPECT_EQ(g, z.inverse());
  RatFunc h = ((z + u) * (z - u)) / ((z + u) * (z + u) * u);
  EXPECT_EQ(h, (z - u) / ((z + u) * u));
}

TEST(RatFunc, FieldAxiomsOnRandomValues) {
  Rng rng(17);
  const int d = 3;
  RatFunc u = RatFunc::u(d), z = RatFunc::z(d);
  auto random_poly = [&] {
    RatFunc acc(d);
    for (int k = 0; k < 3; ++k) {
      Cyclotomic c = Cyclotomic::root(d, rng.uniform(0, 2)) * Rational(rng.uniform(-2, 2));
      acc += RatFunc::constant(d, c) * z.pow(rng.uniform(0, 2)) * u.pow(rng.uniform(-1, 2));
    }
    return acc;
  };
  for (int k = 0; k < 40; ++k) {
    RatFunc a = random_poly(), b = random_poly(), c = random_poly();
    if (b.is_zero() || c.is_zero()) continue;
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a / b + c / b, (a + c) / b);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a / c) / (b / c), a / b);
  }
}

TEST(RatFunc, SubstituteAndEvaluate) {
  const int d = 2;
  RatFunc u = RatFunc::u(d), z = RatFunc::z(d), one = RatFunc::constant(d, Rational(1));
  RatFunc f = (z + u) / (u * z - one);
  RatFunc g = f.substitute(u.inverse(), z * u);
  EXPECT_EQ(g, (z * u + u.inverse()) / (z - one));
  auto value = f.evaluate({2.0, 0.0}, {3.0, 0.0});
  EXPECT_NEAR(value.real(), 1.0, 1e-12);
  EXPECT_EQ(RatFunc::monomial(d, -2, 1), u / (z * z));
  EXPECT_THROW(RatFunc(d).inverse(), MathError);
}

TEST(RatFunc, RenderIsCanonical) {
  const int d = 4;
  RatFunc u = RatFunc::u(d), z = RatFunc::z(d);
  RatFunc i = RatFunc::constant(d, Cyclotomic::root(d, 1));
  RatFunc f = (z * z * u - i * u) / (RatFunc::constant(d, Rational(2)) * z);
  EXPECT_EQ(f.to_string(), "(1/2*z^2*u + (-1/2*zeta4)*u) / (z)");
}
