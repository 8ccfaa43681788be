#include "lorentzinv/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gmpxx.h>

#include "lorentzinv/error.hpp"

namespace lorentzinv {

namespace {

int sign_of(double a) { return (a > 0) - (a < 0); }

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta == 0.0) throw Error(ErrorCode::ZeroBeta, "beta must be finite and nonzero");
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

constexpr std::size_t kMaxGridPoints = std::size_t{1} << 20;
constexpr mp_bitcnt_t kEvalPrecision = 128;

}  // namespace

Point2 apply_boost_power(Point2 p, double beta, long n) {
  const double t = static_cast<double>(n) * beta;
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  return {c * p.x + s * p.y, s * p.x + c * p.y};
}

double gap_G(double x, double y) {
  const double rho = (x + y) * (x - y);
  if (rho > 0.0 && x > 0.0) return std::exp(-1.0 / rho);
  return 0.0;
}

std::string_view orbit_reason_name(OrbitReason r) {
  switch (r) {
    case OrbitReason::BranchMismatch: return "branch-mismatch";
    case OrbitReason::NonIntegerStep: return "non-integer-step";
    case OrbitReason::Matched: return "matched";
    case OrbitReason::ConeCase: return "cone-case";
    case OrbitReason::Origin: return "origin";
  }
  return "?";
}

OrbitVerdict separate_orbits(Point2 p, Point2 q, double beta, double tolerance) {
  check_beta(beta);
  const LightConePoint lp = LightConePoint::from_xy(p);
  const LightConePoint lq = LightConePoint::from_xy(q);
  OrbitVerdict out;
  out.rho_p = lp.rho();
  out.rho_q = lq.rho();

  const bool p_origin = lp.u == 0.0 && lp.v == 0.0;
  const bool q_origin = lq.u == 0.0 && lq.v == 0.0;
  if (p_origin || q_origin) {
    out.reason = OrbitReason::Origin;
    out.same_orbit = p_origin && q_origin;
    if (out.same_orbit) out.steps = 0;
    return out;
  }
  if (sign_of(lp.u) != sign_of(lq.u) || sign_of(lp.v) != sign_of(lq.v)) {
    out.reason = OrbitReason::BranchMismatch;
    return out;
  }
  const bool cone = lp.u == 0.0 || lp.v == 0.0;
  const OrbitReason miss = cone ? OrbitReason::ConeCase : OrbitReason::NonIntegerStep;
  // u scales by e^{n beta}, v by e^{-n beta}.
  const double ratio = lp.u != 0.0 ? lq.u / lp.u : lp.v / lq.v;
  const double estimate = std::log(ratio) / beta;
  out.step_estimate = estimate;
  out.reason = miss;
  if (!std::isfinite(estimate) || std::abs(estimate) > 1e15) return out;
  const long n = std::lround(estimate);
  if (std::abs(estimate - static_cast<double>(n)) > tolerance) return out;
  const double grow = std::exp(static_cast<double>(n) * beta);
  if (!close(lp.u * grow, lq.u, tolerance) || !close(lp.v / grow, lq.v, tolerance)) return out;
  out.same_orbit = true;
  out.steps = n;
  out.reason = cone ? OrbitReason::ConeCase : OrbitReason::Matched;
  return out;
}

GapReport schwarz_gap_report(double beta, std::size_t samples, std::uint64_t seed, double level, double tolerance) {
  check_beta(beta);
  if (samples == 0) throw Error(ErrorCode::ShapeError, "at least one sample is required");
  if (!(level > 0.0) || !std::isfinite(level)) throw Error(ErrorCode::ShapeError, "level t must be positive");
  GapReport r;
  r.beta = beta;
  r.samples = samples;
  r.seed = seed;
  r.level = level;
  r.tolerance = tolerance;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point2 z{coord(rng), coord(rng)};
    const double g0 = gap_G(z.x, z.y);
    for (long n = r.min_power; n <= r.max_power; ++n) {
      const Point2 w = apply_boost_power(z, beta, n);
      const double dev = std::abs(gap_G(w.x, w.y) - g0);
      const double scale = std::max(1.0, std::exp(2.0 * std::abs(static_cast<double>(n) * beta)));
      r.max_orbit_deviation = std::max(r.max_orbit_deviation, dev);
      r.max_scaled_orbit_deviation = std::max(r.max_scaled_orbit_deviation, dev / scale);
    }
    // Cone points stay on the cone, where G vanishes.
    const double a = coord(rng);
    for (const Point2 c : {Point2{a, a}, Point2{a, -a}}) {
      for (long n = r.min_power; n <= r.max_power; ++n) {
        const Point2 w = apply_boost_power(c, beta, n);
        r.cone_max_value = std::max(r.cone_max_value, gap_G(w.x, w.y));
      }
    }
  }
  r.invariant = r.max_scaled_orbit_deviation < tolerance;

  const double root = std::sqrt(level);
  r.right_branch_value = gap_G(root, 0.0);
  r.left_branch_value = gap_G(-root, 0.0);
  const double expected = std::exp(-1.0 / level);
  for (int i = -20; i <= 20; ++i) {
    const double tau = 0.1 * i;
    const double x = root * std::cosh(tau);
    const double y = root * std::sinh(tau);
    r.right_branch_spread = std::max(r.right_branch_spread, std::abs(gap_G(x, y) - expected));
    r.left_branch_spread = std::max(r.left_branch_spread, std::abs(gap_G(-x, y)));
  }
  r.branch_gap = r.right_branch_value - r.left_branch_value;
  r.not_a_function_of_rho = r.branch_gap > r.right_branch_spread + r.left_branch_spread;
  return r;
}

TrivialityVerdict cocompact_triviality(const Poly& p, std::size_t lattice_rank) {
  if (lattice_rank == 0 || p.nvars() != lattice_rank) {
    throw Error(ErrorCode::ShapeError, "polynomial has " + std::to_string(p.nvars()) + " variables, lattice rank is " +
                                           std::to_string(lattice_rank));
  }
  TrivialityVerdict v;
  v.invariant = true;
  v.dichotomy_certified = true;
  for (std::size_t i = 0; i < lattice_rank; ++i) {
    Poly diff = p.translate(i, BoostScalar(1)) - p;
    const bool annihilated = diff.is_zero();
    if (!annihilated && v.invariant) {
      v.invariant = false;
      v.moving_axis = i;
    }
    // Over characteristic zero, p(x + e_i) = p(x) exactly when x_i is absent.
    if (annihilated != (p.degree_in(i) <= 0)) v.dichotomy_certified = false;
    v.differences.push_back(std::move(diff));
  }
  v.constant = p.is_constant();
  if (v.invariant && !v.constant) v.dichotomy_certified = false;
  return v;
}

int FourierSpec::band_limit() const {
  int k = 0;
  for (const auto& t : terms)
    for (int ki : t.k) k = std::max(k, std::abs(ki));
  return k;
}

void FourierSpec::check() const {
  if (rank == 0) throw Error(ErrorCode::ShapeError, "Fourier rank must be positive");
  for (const auto& t : terms) {
    if (t.k.size() != rank) throw Error(ErrorCode::ShapeError, "frequency vector length differs from rank");
    if (!std::isfinite(t.cos_amplitude) || !std::isfinite(t.sin_amplitude)) {
      throw Error(ErrorCode::ShapeError, "Fourier amplitudes must be finite");
    }
  }
}

double FourierSpec::evaluate(const std::vector<double>& x) const {
  if (x.size() != rank) throw Error(ErrorCode::ShapeError, "evaluation point length differs from rank");
  double sum = 0.0;
  for (const auto& t : terms) {
    double phase = 0.0;
    for (std::size_t i = 0; i < rank; ++i) phase += t.k[i] * x[i];
    const double angle = 2.0 * std::numbers::pi * phase;
    sum += t.cos_amplitude * std::cos(angle) + t.sin_amplitude * std::sin(angle);
  }
  return sum;
}

std::vector<std::string> torus_variable_names(std::size_t rank) {
  if (rank == 1) return {"c", "s"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) {
    names.push_back("c" + std::to_string(i));
    names.push_back("s" + std::to_string(i));
  }
  return names;
}

ReconstructionResult torus_reconstruct(const FourierSpec& f, int band_limit_cap) {
  f.check();
  const std::size_t n = f.rank;
  const std::size_t nv = 2 * n;
  ReconstructionResult out;
  out.band_limit = f.band_limit();
  if (out.band_limit > band_limit_cap) {
    throw Error(ErrorCode::BandLimitTooLarge, "band limit " + std::to_string(out.band_limit) + " exceeds the cap " +
                                                  std::to_string(band_limit_cap));
  }
  const std::size_t side = 4 * static_cast<std::size_t>(std::max(out.band_limit, 1));
  std::size_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid > kMaxGridPoints / side) {
      throw Error(ErrorCode::BandLimitTooLarge, "verification grid (4K)^n is too large for rank " + std::to_string(n));
    }
    grid *= side;
  }

  // cos(j t) = T_j(c) and sin(j t) = s U_{j-1}(c), built by the
  // multiple-angle recurrence X_{j+1} = 2 c X_j - X_{j-1}.
  const auto K = static_cast<std::size_t>(out.band_limit);
  std::vector<std::vector<RationalPoly>> cos_k(n), sin_k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalPoly c = RationalPoly::variable(nv, 2 * i);
    const RationalPoly s = RationalPoly::variable(nv, 2 * i + 1);
    const RationalPoly two_c = Rational(2) * c;
    cos_k[i] = {RationalPoly::constant(nv, Rational(1)), c};
    sin_k[i] = {RationalPoly(nv), s};
    for (std::size_t j = 1; j < K; ++j) {
      cos_k[i].push_back(two_c * cos_k[i][j] - cos_k[i][j - 1]);
      sin_k[i].push_back(two_c * sin_k[i][j] - sin_k[i][j - 1]);
    }
  }
  out.F = RationalPoly(nv);
  for (const auto& t : f.terms) {
    // e^{2 pi i k.x} = prod_i (cos(k_i t_i) + i sin(k_i t_i))
    RationalPoly re = RationalPoly::constant(nv, Rational(1));
    RationalPoly im(nv);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(std::abs(t.k[i]));
      const RationalPoly& ck = cos_k[i][j];
      const RationalPoly sk = t.k[i] < 0 ? -sin_k[i][j] : sin_k[i][j];
      RationalPoly next_re = re * ck - im * sk;
      im = re * sk + im * ck;
      re = std::move(next_re);
    }
    out.F += Rational(mpq_class(t.cos_amplitude)) * re;
    out.F += Rational(mpq_class(t.sin_amplitude)) * im;
  }

  // Verification: F in 128-bit floating point at the double values of sigma.
  std::vector<std::pair<mpf_class, const Exponents*>> coeffs;
  int max_exp = 0;
  for (const auto& [e, c] : out.F.terms()) {
    coeffs.emplace_back(mpf_class(c.raw(), kEvalPrecision), &e);
    for (int x : e) max_exp = std::max(max_exp, x);
  }
  std::vector<std::vector<mpf_class>> powers(nv, std::vector<mpf_class>(static_cast<std::size_t>(max_exp) + 1,
                                                                        mpf_class(0, kEvalPrecision)));
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  mpf_class sum(0, kEvalPrecision);
  mpf_class term(0, kEvalPrecision);
  const double step = 1.0 / static_cast<double>(side);
  for (std::size_t point = 0; point < grid; ++point) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(idx[i]) * step;
      const double angle = 2.0 * std::numbers::pi * x[i];
      const double sigma[2] = {std::cos(angle), std::sin(angle)};
      const double shifted = 2.0 * std::numbers::pi * (x[i] + 1.0);
      out.periodicity_error = std::max({out.periodicity_error, std::abs(std::cos(shifted) - sigma[0]),
                                        std::abs(std::sin(shifted) - sigma[1])});
      for (std::size_t a = 0; a < 2; ++a) {
        auto& pw = powers[2 * i + a];
        pw[0] = 1;
        for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = pw[e - 1] * sigma[a];
      }
    }
    sum = 0;
    for (const auto& [c, e] : coeffs) {
      term = c;
      for (std::size_t v = 0; v < nv; ++v)
        if ((*e)[v] != 0) term *= powers[v][static_cast<std::size_t>((*e)[v])];
      sum += term;
    }
    out.sup_error = std::max(out.sup_error, std::abs(sum.get_d() - f.evaluate(x)));
    for (std::size_t i = 0; i < n; ++i) {
      if (++idx[i] < side) break;
      idx[i] = 0;
    }
  }
  out.grid_points = grid;
  return out;
}

}  // namespace lorentzinv
