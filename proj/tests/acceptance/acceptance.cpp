// Acceptance suite: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lorentzinv/error.hpp"
#include "lorentzinv/invariants.hpp"
#include "lorentzinv/lorentz.hpp"
#include "lorentzinv/membership.hpp"
#include "lorentzinv/regimes.hpp"
#include "oracles.hpp"

using namespace lorentzinv;
namespace t = lorentzinv::testing;

namespace {

using M = Matrix<BoostScalar>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail << "failed: " << what << "; ";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

M rational(std::initializer_list<std::initializer_list<long>> rows) {
  M m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = BoostScalar(v);
    ++i;
  }
  return m;
}

bool same_up_to_scaling(const std::vector<Poly>& got, const std::vector<Poly>& want) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& w : want) {
    bool found = false;
    for (std::size_t i = 0; i < got.size() && !found; ++i) {
      if (!used[i] && t::proportional(got[i], w)) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

void boost_ring(Outcome& o) {
  const GroupSpec h = GroupSpec::boost_cyclic(Transform(boost_matrix(2)), 1);
  const HilbertBasis hb = hilbert_basis(h);
  const Poly x = var(2, 0), y = var(2, 1);
  const Poly rho = x * x - y * y;
  o.require(same_up_to_scaling(hb.generators, {rho}), "basis is {x^2 - y^2}");
  o.require(is_invariant(rho, h).holds, "x^2 - y^2 is invariant in the exact boost unit");
  o.require(!is_invariant(x, h).holds && !is_invariant(x * y, h).holds, "x and xy are not invariant");
  o.detail << "basis {" << hb.generators.front().to_string() << "}; ";
}

void rotation_boost_product(Outcome& o) {
  M gen = M::identity(4);
  const M h = boost_matrix(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gen(2 + i, 2 + j) = h(i, j);
  const GroupSpec spec = GroupSpec::block_product(Transform(gen, {{0, 1, Rational(1, 3)}}), 3);
  const HilbertBasis hb = hilbert_basis(spec);
  const Poly x = var(4, 0), y = var(4, 1), z = var(4, 2), w = var(4, 3);
  const BoostScalar three(3);
  const std::vector<Poly> expected{x * x + y * y, x.pow(3) - Poly(three * x * y * y), Poly(three * x * x * y) - y.pow(3),
                                   z * z - w * w};
  o.require(hb.generators.size() == 4, "four generators");
  o.require(same_up_to_scaling(hb.generators, expected), "generators match up to rational scaling");
  for (const auto& g : hb.generators) o.require(is_invariant(g, spec).holds, "generator invariant");
  o.detail << hb.generators.size() << " generators; ";
}

void reflections(Outcome& o) {
  const Poly x = var(2, 0), y = var(2, 1);
  const HilbertBasis kx = hilbert_basis(GroupSpec::finite({Transform(kappa_x())}));
  const HilbertBasis ky = hilbert_basis(GroupSpec::finite({Transform(kappa_y())}));
  o.require(same_up_to_scaling(kx.generators, {x, y * y}), "kappa_x basis {x, y^2}");
  o.require(same_up_to_scaling(ky.generators, {y, x * x}), "kappa_y basis {y, x^2}");
  int verified = 0;
  // every involution H kappa H^{-1} reduces to its reflection via an exact conjugator
  for (int m = -4; m <= 4; m += 2) {
    for (const M& kappa : {kappa_x(), kappa_y()}) {
      const M a = boost_matrix(m) * kappa * lorentz_inverse(boost_matrix(m));
      const InvolutionNormalForm nf = involution_normal_form(validate(a, 1));
      const M c = nf.conjugator;
      o.require(nf.reflection == kappa, "normal form type");
      o.require(lorentz_inverse(c) * c == M::identity(2), "conjugator is Lorentz");
      o.require(lorentz_inverse(c) * a * c == kappa, "C^{-1} A C = kappa");
      const HilbertBasis hb = hilbert_basis(GroupSpec::finite({Transform(a)}));
      for (const auto& g : hb.generators) o.require(is_invariant_under(g, Transform(a)), "conjugated basis invariant");
      ++verified;
    }
  }
  o.detail << verified << " conjugators verified; ";
}

void molien_oracle(Outcome& o) {
  struct Case {
    const char* name;
    GroupSpec group;
    t::Character character;
  };
  const std::vector<Case> cases{
      {"+-I", GroupSpec::finite({Transform(rational({{-1, 0}, {0, -1}}))}), {{1, 1}, 2}},
      {"C2 reflection", GroupSpec::finite({Transform(rational({{1, 0}, {0, -1}}))}), {{0, 1}, 2}},
      {"C3", GroupSpec::finite({Transform::rotation(2, 0, 1, Rational(1, 3))}), {{1, -1}, 3}},
      {"C4", GroupSpec::finite({Transform(rational({{0, -1}, {1, 0}}))}), {{1, -1}, 4}},
  };
  for (const auto& c : cases) {
    const MolienSeries m = molien(enumerate_finite(c.group), 8);
    const HilbertBasis hb = hilbert_basis(c.group);
    for (int d = 0; d <= 8; ++d) {
      const long oracle = t::count_invariant_monomials(2, d, {c.character});
      o.require(m.expansion[static_cast<std::size_t>(d)] == oracle, std::string(c.name) + " Molien coefficient");
      if (d > 0) {
        o.require(static_cast<long>(subalgebra_dimension(hb.generators, d)) == oracle,
                  std::string(c.name) + " basis products span the invariants");
      }
    }
  }
  o.detail << cases.size() << " groups x degrees 0..8; ";
}

void gap_demo(Outcome& o) {
  const GapReport r = schwarz_gap_report(0.7, 500);
  o.require(r.samples >= 500 && r.min_power == -5 && r.max_power == 5, "sampling window");
  o.require(r.max_orbit_deviation < 1e-10, "orbit deviation below 1e-10");
  o.require(std::abs(r.right_branch_value - std::exp(-1.0 / 3.0)) < 1e-15 && r.left_branch_value == 0.0,
            "branch values e^{-1/3} and 0");
  o.require(r.branch_gap > 0.1, "branch gap above 0.1");
  o.require(r.invariant && r.not_a_function_of_rho, "invariant but not constant on level sets");
  o.detail << "deviation " << r.max_orbit_deviation << ", gap " << r.branch_gap << "; ";
}

void orbit_separation(Outcome& o) {
  const OrbitVerdict v = separate_orbits({2, 1}, {-2, 1}, 0.7);
  o.require(!v.same_orbit && v.reason == OrbitReason::BranchMismatch, "distinct orbits by branch");
  o.require(v.rho_p == 3.0 && v.rho_q == 3.0, "rho(p) = rho(q) = 3");
  const Point2 p{2, 1};
  const OrbitVerdict m = separate_orbits(p, apply_boost_power(p, 0.7, 3), 0.7);
  o.require(m.same_orbit && m.reason == OrbitReason::Matched && m.steps == 3, "matched(3)");
}

void cocompact(Outcome& o) {
  t::Rng rng(2024);
  int cases = 0, invariant = 0, agree = 0;
  for (int i = 0; i < 240; ++i) {
    const std::size_t rank = static_cast<std::size_t>(1 + i % 3);
    const int degree = 1 + (i / 3) % 6;
    Poly p = t::random_poly(rng, rank, degree, 4);
    // every sixth case drops all variables but keeps its nominal degree draw
    if (i % 6 == 5) p = Poly::constant(rank, BoostScalar(t::random_rational(rng)));
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
    const bool numeric = worst < 1e-9;
    ++cases;
    if (v.invariant == numeric) ++agree;
    if (v.invariant) {
      ++invariant;
      o.require(v.constant, "translation-invariant polynomial is constant");
    }
  }
  o.require(agree == cases, "symbolic and numeric tests agree on every case");
  o.detail << cases << " polynomials, " << invariant << " invariant, " << agree << "/" << cases << " agree; ";
}

void torus(Outcome& o) {
  FourierSpec golden;
  golden.rank = 1;
  golden.terms = {{{1}, 0.0, 1.0}, {{2}, 1.0, 0.0}};
  const ReconstructionResult g = torus_reconstruct(golden);
  const RationalPoly c = RationalPoly::variable(2, 0), s = RationalPoly::variable(2, 1);
  o.require(g.F == s + Rational(2) * c * c - RationalPoly::constant(2, Rational(1)), "golden F = s + 2c^2 - 1");
  o.require(g.sup_error < 1e-10, "golden sup error");
  double worst = g.sup_error;
  int specs = 1;
  t::Rng rng(7);
  for (std::size_t rank : {1u, 2u}) {
    for (int band = 1; band <= 16; ++band) {
      FourierSpec f;
      f.rank = rank;
      // the full frequency box [-K, K]^n at the corners and a random fill
      std::vector<int> corner(rank, band);
      f.terms.push_back({corner, t::uniform_real(rng, -1, 1), t::uniform_real(rng, -1, 1)});
      for (int k = 0; k < 6; ++k) {
        std::vector<int> freq(rank);
        for (auto& v : freq) v = static_cast<int>(t::uniform_int(rng, -band, band));
        f.terms.push_back({freq, t::uniform_real(rng, -1, 1), t::uniform_real(rng, -1, 1)});
      }
      const ReconstructionResult r = torus_reconstruct(f);
      worst = std::max(worst, r.sup_error);
      ++specs;
    }
  }
  o.require(worst < 1e-10, "sup error below 1e-10 for K <= 16, n <= 2");
  o.detail << specs << " specs, worst sup error " << worst << "; ";
}

void equivariance(Outcome& o) {
  const GroupSpec h = GroupSpec::boost_cyclic(Transform(boost_matrix(2)), 1);
  const Poly x = var(2, 0), y = var(2, 1);
  const PolyMap grad = gradient(x * x - y * y);
  const PolyMap j_grad({grad[0], Poly(BoostScalar(-1) * grad[1])});
  o.require(check_equivariant(PolyMap::identity(2), h).holds, "identity is equivariant");
  o.require(check_equivariant(j_grad, h).holds, "J grad(x^2 - y^2) is equivariant");
  o.require(!check_equivariant(PolyMap({x, Poly(BoostScalar(-1) * y)}), h).holds, "(x, -y) is rejected");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "boost-invariant ring generated by x^2 - y^2", 1.0, boost_ring},
      {2, "C3 + boost block product: four generators", 10.0, rotation_boost_product},
      {3, "reflection bases {x, y^2}, {y, x^2} with exact conjugators", 1.0, reflections},
      {4, "Molien series equals the invariant monomial count", 30.0, molien_oracle},
      {5, "smooth boost invariant not a function of x^2 - y^2", 5.0, gap_demo},
      {6, "orbit separation on a common level set", 1.0, orbit_separation},
      {7, "translation-invariant polynomials are constant", 30.0, cocompact},
      {8, "torus reconstruction through (cos, sin)", 10.0, torus},
      {9, "boost equivariance of identity and J grad", 1.0, equivariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const Error& e) {
      o.require(false, std::string("threw ") + std::string(error_name(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
      o.require(false, std::string("threw ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.limit_seconds, "runtime limit");
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_seconds, o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
