#include "lorentzinv/membership.hpp"

#include <map>
#include <string>
#include <utility>

#include "lorentzinv/error.hpp"
#include "lorentzinv/linalg.hpp"

namespace lorentzinv {

namespace {

struct Candidate {
  Exponents powers;
  RationalPoly product;
};

void check_generators(const std::vector<RationalPoly>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw Error(ErrorCode::ShapeError, "generator variable count differs from target");
    if (g.is_constant()) throw Error(ErrorCode::ShapeError, "membership generators must be nonconstant");
  }
}

/// Products of generators with weighted degree in [min_degree, max_degree].
std::vector<Candidate> enumerate_products(const std::vector<RationalPoly>& gens, std::size_t nvars, int min_degree,
                                          int max_degree, std::size_t cap) {
  std::vector<Candidate> out;
  std::vector<int> weights;
  for (const auto& g : gens) weights.push_back(g.degree());
  Exponents powers(gens.size(), 0);
  std::size_t visited = 0;
  auto rec = [&](auto&& self, std::size_t i, int degree, const RationalPoly& running) -> void {
    if (i == gens.size()) {
      if (++visited > cap) {
        throw Error(ErrorCode::BoundExceeded,
                    "membership enumeration exceeded " + std::to_string(cap) + " candidate products");
      }
      if (degree >= min_degree) out.push_back({powers, running});
      return;
    }
    RationalPoly acc = running;
    for (int k = 0; degree + k * weights[i] <= max_degree; ++k) {
      powers[i] = k;
      self(self, i + 1, degree + k * weights[i], acc);
      if (degree + (k + 1) * weights[i] <= max_degree) acc *= gens[i];
    }
    powers[i] = 0;
  };
  rec(rec, 0, 0, RationalPoly::constant(nvars, Rational(1)));
  return out;
}

/// Columns = candidate products, rows = monomials (plus those of `extra`).
Matrix<Rational> coefficient_matrix(const std::vector<Candidate>& cands, const RationalPoly* extra,
                                    std::vector<Rational>* rhs) {
  std::map<Exponents, std::size_t, GrevlexGreater> rows;
  auto index_of = [&](const Exponents& e) {
    auto [it, inserted] = rows.try_emplace(e, rows.size());
    return it->second;
  };
  for (const auto& c : cands)
    for (const auto& [e, coeff] : c.product.terms()) index_of(e);
  if (extra != nullptr)
    for (const auto& [e, coeff] : extra->terms()) index_of(e);
  Matrix<Rational> m(rows.size(), cands.size());
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (const auto& [e, coeff] : cands[j].product.terms()) m(rows.at(e), j) = coeff;
  if (rhs != nullptr) {
    rhs->assign(rows.size(), Rational());
    for (const auto& [e, coeff] : extra->terms()) (*rhs)[rows.at(e)] = coeff;
  }
  return m;
}

}  // namespace

MembershipResult membership(const Poly& p, const std::vector<Poly>& gens, const MembershipOptions& options) {
  const RationalPoly target = to_rational(p);
  std::vector<RationalPoly> rgens;
  rgens.reserve(gens.size());
  for (const auto& g : gens) rgens.push_back(to_rational(g));
  check_generators(rgens, p.nvars());

  MembershipResult result;
  if (target.is_zero()) {
    result.inside = true;
    return result;
  }

  bool homogeneous = target.is_homogeneous();
  for (const auto& g : rgens) homogeneous = homogeneous && g.is_homogeneous();
  const int d = target.degree();
  const auto cands = enumerate_products(rgens, p.nvars(), homogeneous ? d : 0, d, options.term_cap);
  result.candidates = cands.size();
  if (cands.empty()) return result;

  std::vector<Rational> rhs;
  const Matrix<Rational> m = coefficient_matrix(cands, &target, &rhs);
  const auto solution = solve(m, rhs);
  if (!solution) return result;
  result.inside = true;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    if (!(*solution)[j].is_zero()) result.witness.push_back({cands[j].powers, (*solution)[j]});
  }
  return result;
}

Poly evaluate_witness(const std::vector<WitnessTerm>& witness, const std::vector<Poly>& gens, std::size_t nvars) {
  Poly out(nvars);
  for (const auto& term : witness) {
    if (term.powers.size() != gens.size()) throw Error(ErrorCode::ShapeError, "witness arity mismatch");
    Poly product = Poly::constant(nvars, BoostScalar(term.coefficient));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (term.powers[i] > 0) product *= gens[i].pow(static_cast<unsigned>(term.powers[i]));
    }
    out += product;
  }
  return out;
}

std::size_t subalgebra_dimension(const std::vector<Poly>& gens, int degree, const MembershipOptions& options) {
  if (degree < 0) return 0;
  if (gens.empty()) return degree == 0 ? 1 : 0;
  std::vector<RationalPoly> rgens;
  for (const auto& g : gens) {
    rgens.push_back(to_rational(g));
    if (!rgens.back().is_homogeneous())
      throw Error(ErrorCode::ShapeError, "graded dimension needs homogeneous generators");
  }
  const std::size_t nvars = gens.front().nvars();
  check_generators(rgens, nvars);
  const auto cands = enumerate_products(rgens, nvars, degree, degree, options.term_cap);
  if (cands.empty()) return 0;
  return rank(coefficient_matrix(cands, nullptr, nullptr));
}

}  // namespace lorentzinv
