#include <cmath>

#include <gtest/gtest.h>

#include "lorentzinv/boost_scalar.hpp"
#include "lorentzinv/error.hpp"
#include "lorentzinv/split_complex.hpp"
#include "oracles.hpp"

using namespace lorentzinv;
namespace t = lorentzinv::testing;

TEST(BoostScalar, HyperbolicIdentityHoldsExactly) {
  const BoostScalar c = BoostScalar::cosh_beta();
  const BoostScalar s = BoostScalar::sinh_beta();
  EXPECT_EQ(c * c - s * s, BoostScalar(1));
  for (int m = 1; m <= 6; ++m) {
    const BoostScalar cm = BoostScalar::cosh_half_multiple(m);
    const BoostScalar sm = BoostScalar::sinh_half_multiple(m);
    EXPECT_EQ(cm * cm - sm * sm, BoostScalar(1));
    // double-angle: cosh(m b) = 2 cosh^2(m b / 2) - 1
    EXPECT_EQ(BoostScalar::cosh_half_multiple(2 * m), BoostScalar(2) * cm * cm - BoostScalar(1));
    EXPECT_EQ(BoostScalar::sinh_half_multiple(2 * m), BoostScalar(2) * sm * cm);
  }
}

TEST(BoostScalar, NumericValuesMatchLibm) {
  for (double beta : {0.1, 0.7, -1.3, 2.5}) {
    EXPECT_NEAR(BoostScalar::cosh_beta().eval_numeric(beta), std::cosh(beta), 1e-12 * std::cosh(beta));
    EXPECT_NEAR(BoostScalar::sinh_beta().eval_numeric(beta), std::sinh(beta), 1e-12 * std::cosh(beta));
    EXPECT_NEAR(BoostScalar::unit().eval_numeric(beta), std::exp(beta / 2), 1e-12 * std::exp(std::abs(beta)));
  }
  EXPECT_THROW(BoostScalar::unit().pow(400).eval_numeric(10.0), Error);
}

TEST(BoostScalar, RingAxiomsOnRandomTriples) {
  t::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const BoostScalar a = t::random_scalar(rng), b = t::random_scalar(rng), c = t::random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, BoostScalar());
    // evaluation is a ring homomorphism
    const double beta = 0.37;
    EXPECT_NEAR((a * b).eval_numeric(beta), t::scalar_value(a, beta) * t::scalar_value(b, beta), 1e-9);
  }
}

TEST(BoostScalar, UnitsInvertAndOthersDoNot) {
  const BoostScalar u = BoostScalar::monomial(Rational(3, 2), -3);
  EXPECT_EQ(u * u.inverse(), BoostScalar(1));
  EXPECT_EQ(u.pow(-2) * u.pow(2), BoostScalar(1));
  try {
    BoostScalar::cosh_beta().inverse();
    FAIL() << "cosh(beta) is not a unit of the Laurent ring";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
  }
  EXPECT_THROW(BoostScalar().inverse(), Error);
}

TEST(BoostScalar, SquareRootsOfUnits) {
  BoostScalar root;
  ASSERT_TRUE(BoostScalar::monomial(Rational(4, 9), 2).exact_sqrt(root));
  EXPECT_EQ(root, BoostScalar::monomial(Rational(2, 3), 1));
  EXPECT_FALSE(BoostScalar::monomial(Rational(4), 1).exact_sqrt(root));
  EXPECT_FALSE(BoostScalar::monomial(Rational(-4), 2).exact_sqrt(root));
}

TEST(BoostScalar, DominantSignFollowsExtremePowers) {
  EXPECT_EQ(BoostScalar::cosh_beta().dominant_sign(), 1);
  EXPECT_EQ((-BoostScalar::cosh_beta()).dominant_sign(), -1);
  EXPECT_EQ(BoostScalar().dominant_sign(), 0);
  EXPECT_THROW(BoostScalar::sinh_beta().dominant_sign(), Error);
}

TEST(BoostScalar, Printing) {
  EXPECT_EQ(BoostScalar(Rational(-5, 3)).to_string(), "-5/3");
  EXPECT_EQ(BoostScalar().to_string(), "0");
  EXPECT_FALSE(BoostScalar::cosh_beta().is_rational());
  EXPECT_THROW(BoostScalar::cosh_beta().as_rational(), Error);
}

TEST(SplitComplex, ModulusIsMultiplicativeAndBoostsCompose) {
  t::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const SplitComplex a{t::uniform_real(rng, -3, 3), t::uniform_real(rng, -3, 3)};
    const SplitComplex b{t::uniform_real(rng, -3, 3), t::uniform_real(rng, -3, 3)};
    EXPECT_NEAR((a * b).modulus_sq(), a.modulus_sq() * b.modulus_sq(), 1e-9);
    const double x = t::uniform_real(rng, -2, 2), y = t::uniform_real(rng, -2, 2);
    const SplitComplex composed = SplitComplex::exp_h(x) * SplitComplex::exp_h(y);
    const SplitComplex direct = SplitComplex::exp_h(x + y);
    EXPECT_NEAR(composed.re, direct.re, 1e-12 * direct.re);
    EXPECT_NEAR(composed.h, direct.h, 1e-12 * direct.re);
    // the boost preserves x^2 - y^2
    EXPECT_NEAR((SplitComplex::exp_h(x) * a).modulus_sq(), a.modulus_sq(), 1e-9 * std::cosh(2 * x) * 10);
  }
}
