#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorentzinv/polynomial.hpp"

namespace lorentzinv {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// u = x + y, v = x - y, so that x^2 - y^2 = u v and the boost H_beta acts
/// as (u, v) -> (e^beta u, e^-beta v).
struct LightConePoint {
  double u = 0.0;
  double v = 0.0;

  static LightConePoint from_xy(Point2 p) { return {p.x + p.y, p.x - p.y}; }
  Point2 to_xy() const { return {(u + v) / 2, (u - v) / 2}; }
  double rho() const { return u * v; }
};

/// H_beta^n p computed with the matrix entries cosh(n beta), sinh(n beta).
Point2 apply_boost_power(Point2 p, double beta, long n);

/// e^{-1/(x^2 - y^2)} on the right branch (x^2 - y^2 > 0, x > 0), else 0.
double gap_G(double x, double y);

enum class OrbitReason { BranchMismatch, NonIntegerStep, Matched, ConeCase, Origin };

std::string_view orbit_reason_name(OrbitReason r);

struct OrbitVerdict {
  bool same_orbit = false;
  OrbitReason reason = OrbitReason::NonIntegerStep;
  std::optional<long> steps;            // n with H^n p = q, when matched
  std::optional<double> step_estimate;  // ln(u_q / u_p) / beta before rounding
  double rho_p = 0.0;
  double rho_q = 0.0;
};

constexpr double kDefaultOrbitTolerance = 1e-9;

/// Decides whether q = H_beta^n p for some integer n. The signs of u and v
/// are orbit invariants; otherwise the discrete logarithm is rounded and
/// confirmed by applying H_beta^n. Throws ZeroBeta.
OrbitVerdict separate_orbits(Point2 p, Point2 q, double beta, double tolerance = kDefaultOrbitTolerance);

struct GapReport {
  double beta = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  long min_power = -5;
  long max_power = 5;
  double max_orbit_deviation = 0.0;         // max |G(H^n z) - G(z)|
  double max_scaled_orbit_deviation = 0.0;  // same, divided by max(1, e^{2|n beta|})
  double tolerance = 0.0;
  bool invariant = false;
  double level = 3.0;                       // the level set rho = t
  double right_branch_value = 0.0;
  double left_branch_value = 0.0;
  double right_branch_spread = 0.0;         // max |G - e^{-1/t}| along the right branch
  double left_branch_spread = 0.0;          // max |G| along the left branch
  double branch_gap = 0.0;
  double cone_max_value = 0.0;
  bool not_a_function_of_rho = false;
};

/// Samples G along boost orbits and on both branches of rho = level.
/// Throws ZeroBeta, or ShapeError for zero samples or a nonpositive level.
GapReport schwarz_gap_report(double beta, std::size_t samples, std::uint64_t seed = 0, double level = 3.0,
                             double tolerance = 1e-10);

struct TrivialityVerdict {
  bool invariant = false;
  bool constant = false;
  std::vector<Poly> differences;  // p(x + e_i) - p(x)
  std::optional<std::size_t> moving_axis;
  bool dichotomy_certified = false;
};

/// Exact finite differences along the unit translations of Z^n.
TrivialityVerdict cocompact_triviality(const Poly& p, std::size_t lattice_rank);

struct FourierTerm {
  std::vector<int> k;
  double cos_amplitude = 0.0;
  double sin_amplitude = 0.0;
};

/// f(x) = sum_t a_t cos(2 pi k_t . x) + b_t sin(2 pi k_t . x), Z^n-periodic.
struct FourierSpec {
  std::size_t rank = 1;
  std::vector<FourierTerm> terms;

  int band_limit() const;
  double evaluate(const std::vector<double>& x) const;
  void check() const;
};

struct ReconstructionResult {
  RationalPoly F;  // in (c_1, s_1, ..., c_n, s_n); coefficients are exact binary fractions
  double sup_error = 0.0;
  std::size_t grid_points = 0;
  int band_limit = 0;
  double periodicity_error = 0.0;
};

constexpr int kDefaultBandLimitCap = 32;

/// c, s for one axis; c1, s1, ..., cn, sn otherwise.
std::vector<std::string> torus_variable_names(std::size_t rank);

/// Writes f as F o sigma with sigma(x) = (cos 2 pi x_i, sin 2 pi x_i)_i using
/// the multiple-angle recurrences, then checks f = F o sigma on a (4K)^n grid.
/// F is evaluated in extended precision so the error reflects F, not the
/// conditioning of the monomial basis. Throws BandLimitTooLarge.
ReconstructionResult torus_reconstruct(const FourierSpec& f, int band_limit_cap = kDefaultBandLimitCap);

}  // namespace lorentzinv
