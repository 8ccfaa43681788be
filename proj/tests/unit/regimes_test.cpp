#include <cmath>

#include <gtest/gtest.h>

#include "lorentzinv/error.hpp"
#include "lorentzinv/regimes.hpp"
#include "oracles.hpp"

using namespace lorentzinv;
namespace t = lorentzinv::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Point2 random_point(t::Rng& rng) { return {t::uniform_real(rng, -3, 3), t::uniform_real(rng, -3, 3)}; }

FourierSpec random_spec(t::Rng& rng, std::size_t rank, int band) {
  FourierSpec f;
  f.rank = rank;
  const int terms = static_cast<int>(t::uniform_int(rng, 1, 8));
  for (int i = 0; i < terms; ++i) {
    FourierTerm term;
    for (std::size_t r = 0; r < rank; ++r) term.k.push_back(static_cast<int>(t::uniform_int(rng, -band, band)));
    term.cos_amplitude = t::uniform_real(rng, -1, 1);
    term.sin_amplitude = t::uniform_real(rng, -1, 1);
    f.terms.push_back(term);
  }
  return f;
}

// Rational points on the unit circle: t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)),
// the image of the angle 2 atan(t).
struct CirclePoint {
  Rational c, s;
  long double angle;
};

CirclePoint circle_point(const Rational& u) {
  const Rational d = Rational(1) + u * u;
  return {(Rational(1) - u * u) / d, Rational(2) * u / d, 2.0L * std::atan(static_cast<long double>(u.to_double()))};
}

long double fourier_value(const FourierSpec& f, const std::vector<long double>& angles) {
  long double sum = 0;
  for (const auto& term : f.terms) {
    long double phase = 0;
    for (std::size_t i = 0; i < f.rank; ++i) phase += term.k[i] * angles[i];
    sum += term.cos_amplitude * std::cos(phase) + term.sin_amplitude * std::sin(phase);
  }
  return sum;
}

}  // namespace

TEST(LightCone, RoundTripAndQuadraticForm) {
  t::Rng rng(81);
  for (int i = 0; i < 1000; ++i) {
    const Point2 p = random_point(rng);
    const LightConePoint l = LightConePoint::from_xy(p);
    const Point2 back = l.to_xy();
    EXPECT_NEAR(back.x, p.x, 1e-14);
    EXPECT_NEAR(back.y, p.y, 1e-14);
    EXPECT_NEAR(l.rho(), p.x * p.x - p.y * p.y, 1e-12);
    // the boost scales u and v by reciprocal factors
    const double beta = t::uniform_real(rng, -1, 1);
    const LightConePoint m = LightConePoint::from_xy(apply_boost_power(p, beta, 1));
    EXPECT_NEAR(m.u, std::exp(beta) * l.u, 1e-12 * (1 + std::abs(m.u)));
    EXPECT_NEAR(m.v, std::exp(-beta) * l.v, 1e-12 * (1 + std::abs(m.v)));
  }
}

TEST(OrbitSeparation, SameLevelDifferentBranches) {
  const OrbitVerdict v = separate_orbits({2, 1}, {-2, 1}, 0.7);
  EXPECT_FALSE(v.same_orbit);
  EXPECT_EQ(v.reason, OrbitReason::BranchMismatch);
  EXPECT_EQ(v.rho_p, 3.0);
  EXPECT_EQ(v.rho_q, 3.0);
}

TEST(OrbitSeparation, RecoversIntegerSteps) {
  t::Rng rng(82);
  for (int i = 0; i < 500; ++i) {
    const Point2 p = random_point(rng);
    const double beta = t::uniform_real(rng, 0.2, 1.5) * (i % 2 == 0 ? 1 : -1);
    const long n = t::uniform_int(rng, -5, 5);
    const Point2 q = apply_boost_power(p, beta, n);
    const OrbitVerdict v = separate_orbits(p, q, beta);
    ASSERT_TRUE(v.same_orbit) << p.x << "," << p.y << " n=" << n;
    EXPECT_EQ(v.steps, std::optional<long>(n));
    EXPECT_EQ(v.reason, OrbitReason::Matched);
    // symmetric relation with the inverse step
    const OrbitVerdict w = separate_orbits(q, p, beta);
    EXPECT_TRUE(w.same_orbit);
    EXPECT_EQ(w.steps, std::optional<long>(-n));
  }
}

TEST(OrbitSeparation, FractionalStepsAndSymmetry) {
  t::Rng rng(83);
  for (int i = 0; i < 300; ++i) {
    const Point2 p = random_point(rng);
    const Point2 q = random_point(rng);
    const double beta = t::uniform_real(rng, 0.2, 1.5);
    EXPECT_EQ(separate_orbits(p, q, beta).same_orbit, separate_orbits(q, p, beta).same_orbit);
    const OrbitVerdict half = separate_orbits(p, apply_boost_power(p, beta / 2, 3), beta);
    EXPECT_FALSE(half.same_orbit);
    EXPECT_EQ(half.reason, OrbitReason::NonIntegerStep);
    ASSERT_TRUE(half.step_estimate.has_value());
    EXPECT_NEAR(*half.step_estimate, 1.5, 1e-9);
  }
}

TEST(OrbitSeparation, ConeAndOrigin) {
  const OrbitVerdict cone = separate_orbits({1, 1}, apply_boost_power({1, 1}, 0.7, 2), 0.7);
  EXPECT_TRUE(cone.same_orbit);
  EXPECT_EQ(cone.reason, OrbitReason::ConeCase);
  EXPECT_EQ(cone.steps, std::optional<long>(2));
  const OrbitVerdict cone_miss = separate_orbits({1, -1}, {3, -3}, 0.7);
  EXPECT_FALSE(cone_miss.same_orbit);
  EXPECT_EQ(cone_miss.reason, OrbitReason::ConeCase);
  EXPECT_FALSE(separate_orbits({1, 1}, {1, -1}, 0.7).same_orbit);
  EXPECT_TRUE(separate_orbits({0, 0}, {0, 0}, 0.7).same_orbit);
  const OrbitVerdict origin = separate_orbits({0, 0}, {1, 0}, 0.7);
  EXPECT_FALSE(origin.same_orbit);
  EXPECT_EQ(origin.reason, OrbitReason::Origin);
  EXPECT_EQ(code_of([] { separate_orbits({1, 0}, {2, 0}, 0.0); }), ErrorCode::ZeroBeta);
}

TEST(GapFunction, InvariantButNotAFunctionOfTheForm) {
  const GapReport r = schwarz_gap_report(0.7, 500, 7);
  EXPECT_TRUE(r.invariant);
  EXPECT_LT(r.max_orbit_deviation, 1e-10);
  EXPECT_NEAR(r.right_branch_value, std::exp(-1.0 / 3.0), 1e-15);
  EXPECT_EQ(r.left_branch_value, 0.0);
  EXPECT_GT(r.branch_gap, 0.1);
  EXPECT_TRUE(r.not_a_function_of_rho);
  EXPECT_EQ(r.cone_max_value, 0.0);
  // same seed, same report
  EXPECT_EQ(schwarz_gap_report(0.7, 500, 7).max_orbit_deviation, r.max_orbit_deviation);
  for (double level : {0.5, 1.0, 10.0}) {
    const GapReport s = schwarz_gap_report(1.1, 50, 1, level);
    EXPECT_NEAR(s.branch_gap, std::exp(-1.0 / level), 1e-15);
  }
  EXPECT_EQ(code_of([] { schwarz_gap_report(0.0, 10); }), ErrorCode::ZeroBeta);
  EXPECT_EQ(code_of([] { schwarz_gap_report(0.7, 0); }), ErrorCode::ShapeError);
  EXPECT_EQ(code_of([] { schwarz_gap_report(0.7, 10, 0, -1.0); }), ErrorCode::ShapeError);
}

TEST(GapFunction, ValuesOffTheRightBranchVanish) {
  EXPECT_EQ(gap_G(-2, 0), 0.0);
  EXPECT_EQ(gap_G(1, 1), 0.0);
  EXPECT_EQ(gap_G(0, 2), 0.0);
  EXPECT_GT(gap_G(2, 0), 0.0);
}

TEST(Cocompact, FiniteDifferencesAgreeWithNumericOracle) {
  t::Rng rng(84);
  int invariant_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t rank = static_cast<std::size_t>(t::uniform_int(rng, 1, 3));
    Poly p = t::random_poly(rng, rank, static_cast<int>(t::uniform_int(rng, 1, 6)), 4);
    if (i % 5 == 0) p = Poly::constant(rank, BoostScalar(t::random_rational(rng)));
    const TrivialityVerdict v = cocompact_triviality(p, rank);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
      std::vector<double> x(rank);
      for (auto& c : x) c = t::uniform_real(rng, -2, 2);
      for (std::size_t a = 0; a < rank; ++a) {
        auto y = x;
        y[a] += 1;
        worst = std::max(worst, std::abs(t::poly_value(p, y) - t::poly_value(p, x)));
      }
    }
    EXPECT_EQ(v.invariant, worst < 1e-9) << p.to_string();
    EXPECT_TRUE(v.dichotomy_certified);
    if (v.invariant) {
      ++invariant_seen;
      EXPECT_TRUE(v.constant);
    } else {
      ASSERT_TRUE(v.moving_axis.has_value());
      EXPECT_FALSE(v.differences[*v.moving_axis].is_zero());
    }
  }
  EXPECT_GT(invariant_seen, 0);
  EXPECT_EQ(code_of([] { cocompact_triviality(Poly::variable(2, 0), 3); }), ErrorCode::ShapeError);
}

TEST(Torus, GoldenReconstruction) {
  FourierSpec f;
  f.rank = 1;
  f.terms = {{{1}, 0.0, 1.0}, {{2}, 1.0, 0.0}};
  const ReconstructionResult r = torus_reconstruct(f);
  const RationalPoly c = RationalPoly::variable(2, 0), s = RationalPoly::variable(2, 1);
  EXPECT_EQ(r.F, s + Rational(2) * c * c - RationalPoly::constant(2, Rational(1)));
  EXPECT_LT(r.sup_error, 1e-12);
  EXPECT_EQ(r.band_limit, 2);
  EXPECT_EQ(r.grid_points, 8u);
}

TEST(Torus, RandomSpecsMatchExactCircleEvaluation) {
  t::Rng rng(85);
  for (int i = 0; i < 40; ++i) {
    const std::size_t rank = i % 3 == 0 ? 2 : 1;
    const int band = static_cast<int>(t::uniform_int(rng, 1, rank == 2 ? 8 : 16));
    const FourierSpec f = random_spec(rng, rank, band);
    const ReconstructionResult r = torus_reconstruct(f);
    EXPECT_LT(r.sup_error, 1e-10);
    EXPECT_LE(r.F.degree(), static_cast<int>(rank) * band);
    for (int k = 0; k < 4; ++k) {
      std::vector<Rational> point;
      std::vector<long double> angles;
      for (std::size_t a = 0; a < rank; ++a) {
        const CirclePoint cp = circle_point(t::random_rational(rng, 7));
        point.push_back(cp.c);
        point.push_back(cp.s);
        angles.push_back(cp.angle);
      }
      const long double expected = fourier_value(f, angles);
      EXPECT_NEAR(t::poly_value_exact(r.F, point).to_double(), static_cast<double>(expected), 1e-12);
    }
  }
}

TEST(Torus, Limits) {
  FourierSpec wide;
  wide.rank = 1;
  wide.terms = {{{40}, 1.0, 0.0}};
  EXPECT_EQ(code_of([&] { torus_reconstruct(wide); }), ErrorCode::BandLimitTooLarge);
  EXPECT_NO_THROW(torus_reconstruct(wide, 40));
  FourierSpec big;
  big.rank = 4;
  big.terms = {{{16, 0, 0, 1}, 1.0, 0.0}};
  EXPECT_EQ(code_of([&] { torus_reconstruct(big); }), ErrorCode::BandLimitTooLarge);
  FourierSpec bad;
  bad.rank = 2;
  bad.terms = {{{1}, 1.0, 0.0}};
  EXPECT_EQ(code_of([&] { torus_reconstruct(bad); }), ErrorCode::ShapeError);
  FourierSpec empty;
  empty.rank = 1;
  const ReconstructionResult zero = torus_reconstruct(empty);
  EXPECT_TRUE(zero.F.is_zero());
  EXPECT_EQ(zero.grid_points, 4u);
}
