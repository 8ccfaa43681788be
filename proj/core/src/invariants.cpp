#include "lorentzinv/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "lorentzinv/complex_pair.hpp"
#include "lorentzinv/error.hpp"
#include "lorentzinv/linalg.hpp"
#include "univariate.hpp"

namespace lorentzinv {

namespace {

std::vector<Rational> angles_of(const Transform& g, const std::vector<Plane>& planes) {
  std::vector<Rational> out;
  for (const auto& p : planes) out.push_back(g.angle_on(p));
  return out;
}

struct LightConeBlock {
  BoostScalar plus;   // eigenvalue on u = x + y
  BoostScalar minus;  // eigenvalue on v = x - y
};

/// A [[a, b], [b, a]] block with b != 0 on the last two coordinates that
/// does not mix with the others.
std::optional<LightConeBlock> decoupled_boost(const Matrix<BoostScalar>& base) {
  const std::size_t d = base.rows();
  if (d < 2) return std::nullopt;
  const std::size_t x = d - 2;
  const std::size_t y = d - 1;
  for (std::size_t k = 0; k < x; ++k) {
    if (!base(x, k).is_zero() || !base(y, k).is_zero() || !base(k, x).is_zero() || !base(k, y).is_zero()) {
      return std::nullopt;
    }
  }
  const BoostScalar& a = base(x, x);
  const BoostScalar& b = base(x, y);
  if (!(base(y, y) == a) || !(base(y, x) == b) || b.is_zero()) return std::nullopt;
  return LightConeBlock{a + b, a - b};
}

/// Substitutes x = (u + v)/2, y = (u - v)/2 in the last two slots.
GaussianPoly to_light_cone(const GaussianPoly& m) {
  const std::size_t d = m.nvars();
  std::vector<GaussianPoly> images;
  for (std::size_t k = 0; k < d; ++k) images.push_back(GaussianPoly::variable(d, k));
  const GaussianScalar half(BoostScalar(Rational(1, 2)));
  const GaussianPoly u = GaussianPoly::variable(d, d - 2);
  const GaussianPoly v = GaussianPoly::variable(d, d - 1);
  images[d - 2] = half * (u + v);
  images[d - 1] = half * (u - v);
  return substitute(m, images);
}

/// moved_e * e^{2 pi i (phase(e) - offset)} == target_e for every monomial e.
bool phase_match(const GaussianPoly& moved, const GaussianPoly& target, const std::vector<Plane>& planes,
                 const std::vector<Rational>& angles, const Rational& offset = Rational()) {
  for (const auto& [e, c] : moved.terms()) {
    const Rational phase = fractional_part(monomial_phase(e, planes, angles) - offset);
    if (!equal_after_phase(c, phase, target.coefficient(e))) return false;
  }
  for (const auto& [e, c] : target.terms()) {
    if (moved.terms().count(e) == 0) return false;
  }
  return true;
}

bool translation_invariant(const Poly& p, std::size_t var) { return p.translate(var, BoostScalar(1)) == p; }

Poly average_over_bases(const Poly& p, const TorusSplit& split) {
  Poly sum(p.nvars());
  for (const auto& b : split.bases) sum += substitute_linear(p, b);
  return BoostScalar(Rational(1, static_cast<long>(split.bases.size()))) * sum;
}

bool fixed_by_rotations(const Exponents& e, const TorusSplit& split) {
  return std::all_of(split.angle_group.begin(), split.angle_group.end(), [&](const std::vector<Rational>& angles) {
    return monomial_phase(e, split.planes, angles).is_zero();
  });
}

Poly reynolds_with(const Poly& p, const TorusSplit& split) {
  const Poly avg = average_over_bases(p, split);
  if (split.planes.empty()) return avg;
  const GaussianPoly mixed = to_complex_pair(avg, split.planes);
  GaussianPoly kept(mixed.nvars());
  for (const auto& [e, c] : mixed.terms()) {
    if (fixed_by_rotations(e, split)) kept.add_term(e, c);
  }
  return from_complex_pair(kept, split.planes);
}

std::vector<Poly> invariant_space_with(const FiniteGroup& group, const TorusSplit& split, int degree) {
  const auto monos = monomials_of_degree(group.dimension, degree);
  std::map<Exponents, std::size_t, GrevlexGreater> column;
  for (std::size_t j = 0; j < monos.size(); ++j) column.emplace(monos[j], j);
  Matrix<Rational> images(monos.size(), monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const RationalPoly r = to_rational(reynolds_with(Poly::monomial(monos[i], BoostScalar(1)), split));
    for (const auto& [e, c] : r.terms()) images(i, column.at(e)) = c;
  }
  const RowEchelon echelon = row_reduce(std::move(images));
  std::vector<Poly> out;
  for (std::size_t r = 0; r < echelon.rank(); ++r) {
    Poly p(group.dimension);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (!echelon.reduced(r, j).is_zero()) p.add_term(monos[j], BoostScalar(echelon.reduced(r, j)));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Poly normalize_leading(const Poly& p) {
  if (p.is_zero()) return p;
  const BoostScalar& lead = p.leading_term().second;
  if (!lead.is_rational()) return p;
  return BoostScalar(lead.as_rational().inverse()) * p;
}

uni::Coeffs rational_coeffs(const std::vector<BoostScalar>& c) {
  uni::Coeffs out;
  for (const auto& x : c) out.push_back(x.as_rational());
  return out;
}

std::vector<long> expand_series(const uni::Coeffs& num, const uni::Coeffs& den, int order) {
  std::vector<Rational> a;
  for (int k = 0; k <= order; ++k) {
    Rational v = static_cast<std::size_t>(k) < num.size() ? num[static_cast<std::size_t>(k)] : Rational();
    for (int j = 1; j <= k && static_cast<std::size_t>(j) < den.size(); ++j) {
      v -= den[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k - j)];
    }
    a.push_back(v);
  }
  std::vector<long> out;
  for (const auto& v : a) {
    if (!v.is_integer() || !v.numerator().fits_slong_p()) {
      throw Error(ErrorCode::Internal, "Molien coefficient " + v.to_string() + " is not a machine integer");
    }
    out.push_back(v.numerator().get_si());
  }
  return out;
}

/// Involutions of O(1,1) other than +-I get their basis from the normal form.
std::optional<HilbertBasis> involution_table(const GroupSpec& group) {
  if (group.dimension != 2 || group.generators.size() != 1 || group.generators.front().has_rotations()) {
    return std::nullopt;
  }
  const Transform& gen = group.generators.front();
  const auto id = Matrix<BoostScalar>::identity(2);
  if (!(gen.base() * gen.base() == id) || gen.base() == id || gen.base() == BoostScalar(-1) * id) return std::nullopt;
  std::optional<LorentzMatrix> a;
  try {
    a = validate(gen, 1);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotLorentz) return std::nullopt;
    throw;
  }
  InvolutionNormalForm nf;
  try {
    nf = involution_normal_form(*a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoExactConjugator && gen.base_is_rational()) return std::nullopt;
    throw;
  }
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const std::vector<Poly> table = nf.type == ReflectionType::KappaX ? std::vector<Poly>{x, y * y}
                                                                     : std::vector<Poly>{y, x * x};
  const Matrix<BoostScalar> back = lorentz_inverse(nf.conjugator);
  HilbertBasis hb;
  hb.nvars = 2;
  hb.group_order = 2;
  hb.degree_bound = 2;
  for (const auto& t : table) {
    hb.generators.push_back(normalize_leading(substitute_linear(t, back)));
    hb.degrees.push_back(t.degree());
    hb.provenance.push_back(Provenance::InvolutionTable);
    if (!is_invariant_under(hb.generators.back(), gen)) {
      throw Error(ErrorCode::Internal, "normal-form generator " + hb.generators.back().to_string() + " is not invariant");
    }
  }
  hb.involution = nf;
  return hb;
}

}  // namespace

bool is_invariant_under(const Poly& p, const Transform& g) {
  if (p.nvars() != g.dim()) throw Error(ErrorCode::ShapeError, "polynomial and group act on different dimensions");
  const auto planes = g.planes();
  const auto angles = angles_of(g, planes);
  GaussianPoly mixed = to_complex_pair(p, planes);
  Matrix<BoostScalar> base = g.base();
  if (auto block = decoupled_boost(base)) {
    const std::size_t x = base.rows() - 2;
    const std::size_t y = base.rows() - 1;
    mixed = to_light_cone(mixed);
    base(x, x) = block->plus;
    base(y, y) = block->minus;
    base(x, y) = BoostScalar();
    base(y, x) = BoostScalar();
  }
  return phase_match(substitute_linear(mixed, to_gaussian(base)), mixed, planes, angles);
}

InvarianceResult is_invariant(const Poly& p, const GroupSpec& group) {
  group.check();
  if (p.nvars() != group.dimension) {
    throw Error(ErrorCode::ShapeError, "polynomial has " + std::to_string(p.nvars()) + " variables, group acts on " +
                                           std::to_string(group.dimension));
  }
  if (group.kind == GroupKind::LatticeTranslation) {
    for (std::size_t i = 0; i < group.lattice_rank; ++i)
      if (!translation_invariant(p, i)) return {false, i};
    return {};
  }
  for (std::size_t k = 0; k < group.generators.size(); ++k)
    if (!is_invariant_under(p, group.generators[k])) return {false, k};
  return {};
}

bool is_equivariant_under(const PolyMap& f, const Transform& g) {
  const std::size_t d = g.dim();
  if (f.size() != d || f.nvars() != d) throw Error(ErrorCode::ShapeError, "equivariance needs a square map of the group's dimension");
  const auto planes = g.planes();
  const auto angles = angles_of(g, planes);
  std::vector<GaussianPoly> tilde;
  for (std::size_t k = 0; k < d; ++k) {
    tilde.push_back(f[k].map_coefficients<GaussianScalar>([](const BoostScalar& b) { return GaussianScalar(b); }));
  }
  std::vector<Rational> character(d);
  const GaussianScalar i_unit = GaussianScalar::i_unit();
  for (std::size_t p = 0; p < planes.size(); ++p) {
    const auto [i, j] = planes[p];
    const GaussianPoly fi = tilde[i];
    const GaussianPoly fj = tilde[j];
    tilde[i] = fi + i_unit * fj;
    tilde[j] = fi - i_unit * fj;
    character[i] = angles[p];
    character[j] = fractional_part(-angles[p]);
  }
  std::vector<GaussianPoly> mixed;
  for (const auto& t : tilde) mixed.push_back(to_complex_pair(t, planes));
  const Matrix<GaussianScalar> base = to_gaussian(g.base());
  std::set<std::size_t> plane_slots;
  for (const auto& [i, j] : planes) {
    plane_slots.insert(i);
    plane_slots.insert(j);
  }
  for (std::size_t k = 0; k < d; ++k) {
    const GaussianPoly lhs = substitute_linear(mixed[k], base);
    GaussianPoly rhs(d);
    if (plane_slots.count(k) != 0) {
      rhs = mixed[k];
    } else {
      for (std::size_t l = 0; l < d; ++l)
        if (!is_zero(base(k, l))) rhs += base(k, l) * mixed[l];
    }
    if (!phase_match(lhs, rhs, planes, angles, character[k])) return false;
  }
  return true;
}

InvarianceResult check_equivariant(const PolyMap& f, const GroupSpec& group) {
  group.check();
  if (f.size() != group.dimension || f.nvars() != group.dimension) {
    throw Error(ErrorCode::ShapeError, "equivariance needs a square map of the group's dimension");
  }
  if (group.kind == GroupKind::LatticeTranslation) {
    for (std::size_t i = 0; i < group.lattice_rank; ++i) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Poly shift = Poly::constant(f.nvars(), BoostScalar(k == i ? 1 : 0));
        if (!(f[k].translate(i, BoostScalar(1)) == f[k] + shift)) return {false, i};
      }
    }
    return {};
  }
  for (std::size_t k = 0; k < group.generators.size(); ++k)
    if (!is_equivariant_under(f, group.generators[k])) return {false, k};
  return {};
}

TorusSplit split_rotations(const FiniteGroup& group) {
  std::set<Plane> plane_set;
  for (const auto& g : group.elements)
    for (const auto& p : g.planes()) plane_set.insert(p);
  TorusSplit split;
  split.planes.assign(plane_set.begin(), plane_set.end());
  std::vector<std::set<std::vector<Rational>>> angle_sets;
  for (const auto& g : group.elements) {
    auto it = std::find(split.bases.begin(), split.bases.end(), g.base());
    std::size_t idx = static_cast<std::size_t>(it - split.bases.begin());
    if (it == split.bases.end()) {
      split.bases.push_back(g.base());
      angle_sets.emplace_back();
    }
    angle_sets[idx].insert(angles_of(g, split.planes));
  }
  const auto identity = Matrix<BoostScalar>::identity(group.dimension);
  auto id_it = std::find(split.bases.begin(), split.bases.end(), identity);
  if (id_it == split.bases.end()) throw Error(ErrorCode::Internal, "finite group without identity");
  const auto& rotations = angle_sets[static_cast<std::size_t>(id_it - split.bases.begin())];
  for (const auto& s : angle_sets) {
    if (s != rotations) {
      throw Error(ErrorCode::UnsupportedGroup,
                  "group is not a direct product of its matrix parts and its tagged rotations");
    }
  }
  split.angle_group.assign(rotations.begin(), rotations.end());
  return split;
}

Poly reynolds(const Poly& p, const FiniteGroup& group) {
  if (p.nvars() != group.dimension) throw Error(ErrorCode::ShapeError, "polynomial and group act on different dimensions");
  return reynolds_with(p, split_rotations(group));
}

std::vector<Poly> invariant_space(const FiniteGroup& group, int degree) {
  if (degree < 0) return {};
  return invariant_space_with(group, split_rotations(group), degree);
}

MolienSeries molien(const FiniteGroup& group, int order) {
  if (order < 0) throw Error(ErrorCode::ShapeError, "Molien truncation order must be nonnegative");
  const TorusSplit split = split_rotations(group);
  std::set<std::size_t> in_plane;
  for (const auto& [i, j] : split.planes) {
    in_plane.insert(i);
    in_plane.insert(j);
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < group.dimension; ++k)
    if (in_plane.count(k) == 0) rest.push_back(k);

  // Matrix parts: (1/|B|) sum_B 1/det(I - z B) on the untagged coordinates.
  std::map<uni::Coeffs, long> dets;
  for (const auto& b : split.bases) {
    Matrix<BoostScalar> r(rest.size(), rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = 0; j < rest.size(); ++j) r(i, j) = b(rest[i], rest[j]);
    ++dets[uni::trim(rational_coeffs(reversed_characteristic(r)))];
  }
  uni::Coeffs num{Rational()};
  uni::Coeffs den{Rational(1)};
  num = uni::trim(num);
  for (const auto& [c, mult] : dets) {
    const uni::Coeffs g = uni::gcd(den, c);
    const uni::Coeffs c_over_g = uni::exact_div(c, g);
    num = uni::add(uni::mul(num, c_over_g), uni::scale(uni::exact_div(den, g), Rational(mult)));
    den = uni::mul(den, c_over_g);
  }
  num = uni::scale(num, Rational(1, static_cast<long>(split.bases.size())));

  // Tagged planes: the rotation subgroup acts diagonally on (z, zbar), so its
  // invariants are free over C[z^N, zbar^N] on the invariant monomials with
  // exponents below N in each slot.
  if (!split.planes.empty()) {
    std::vector<long> period(split.planes.size(), 1);
    for (const auto& angles : split.angle_group) {
      for (std::size_t p = 0; p < angles.size(); ++p) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), mpz_class(period[p]).get_mpz_t(), angles[p].denominator().get_mpz_t());
        period[p] = l.get_si();
      }
    }
    uni::Coeffs plane_num;
    uni::Coeffs plane_den{Rational(1)};
    Exponents e(group.dimension, 0);
    auto rec = [&](auto&& self, std::size_t p, int degree) -> void {
      if (p == split.planes.size()) {
        if (!fixed_by_rotations(e, split)) return;
        if (plane_num.size() <= static_cast<std::size_t>(degree)) plane_num.resize(static_cast<std::size_t>(degree) + 1);
        plane_num[static_cast<std::size_t>(degree)] += Rational(1);
        return;
      }
      for (long r = 0; r < period[p]; ++r) {
        for (long s = 0; s < period[p]; ++s) {
          e[split.planes[p].first] = static_cast<int>(r);
          e[split.planes[p].second] = static_cast<int>(s);
          self(self, p + 1, degree + static_cast<int>(r + s));
        }
      }
    };
    rec(rec, 0, 0);
    for (long n : period) {
      const uni::Coeffs f = uni::one_minus_power(static_cast<int>(n));
      plane_den = uni::mul(plane_den, uni::mul(f, f));
    }
    num = uni::mul(num, uni::trim(plane_num));
    den = uni::mul(den, plane_den);
  }

  const uni::Coeffs g = uni::gcd(num, den);
  if (!g.empty()) {
    num = uni::exact_div(num, g);
    den = uni::exact_div(den, g);
  }
  const Rational lead = den.front().inverse();
  MolienSeries out;
  out.numerator = uni::scale(num, lead);
  out.denominator = uni::scale(den, lead);
  out.expansion = expand_series(out.numerator, out.denominator, order);
  return out;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Reynolds: return "reynolds";
    case Provenance::BoostCore: return "boost-core";
    case Provenance::InvolutionTable: return "involution-table";
    case Provenance::UnionAssembly: return "union-assembly";
  }
  return "?";
}

HilbertBasis hilbert_basis_finite(const GroupSpec& group, const HilbertOptions& options) {
  const FiniteGroup elements = enumerate_finite(group, options.closure_cap);
  if (auto table = involution_table(group)) {
    try {
      table->molien = molien(elements, table->degree_bound);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonRationalCoefficient) throw;
    }
    return *table;
  }
  const TorusSplit split = split_rotations(elements);
  const int bound = options.max_degree.value_or(static_cast<int>(elements.order()));
  if (bound < 1) throw Error(ErrorCode::ShapeError, "degree bound must be at least 1");

  HilbertBasis hb;
  hb.nvars = group.dimension;
  hb.group_order = elements.order();
  hb.degree_bound = bound;
  hb.molien = molien(elements, bound);
  for (int d = 1; d <= bound; ++d) {
    const std::vector<Poly> space = invariant_space_with(elements, split, d);
    const long expected = hb.molien->expansion[static_cast<std::size_t>(d)];
    for (const auto& q : space) {
      if (hb.generators.empty() || !membership(q, hb.generators, options.membership).inside) {
        hb.generators.push_back(q);
        hb.degrees.push_back(d);
        hb.provenance.push_back(Provenance::Reynolds);
      }
    }
    DegreeCertificate cert{d, expected, space.size(), subalgebra_dimension(hb.generators, d, options.membership)};
    if (static_cast<long>(cert.invariant_dimension) != expected ||
        static_cast<long>(cert.generated_dimension) != expected) {
      throw Error(ErrorCode::CertificateFailed,
                  "degree " + std::to_string(d) + ": Molien predicts " + std::to_string(expected) +
                      ", Reynolds images span " + std::to_string(cert.invariant_dimension) +
                      ", basis products span " + std::to_string(cert.generated_dimension));
    }
    hb.certificate.push_back(cert);
  }
  return hb;
}

HilbertBasis hilbert_basis_lorentz(const GroupSpec& group, const HilbertOptions& options) {
  if (group.kind != GroupKind::BoostCyclic && group.kind != GroupKind::BlockProduct) {
    throw Error(ErrorCode::ShapeError, "expected a boost-cyclic or block-product group");
  }
  group.check();
  const std::size_t n = *group.signature_n;
  const LorentzMatrix a = validate(group.generators.front(), n);
  const BlockForm block = detect_block_structure(a);
  if (!block.boost_nonzero()) {
    throw Error(ErrorCode::ZeroBoost, "boost block has sinh(beta) = 0; use the finite-group path");
  }
  HilbertBasis hb;
  hb.nvars = n + 1;
  const std::size_t m = n - 1;
  if (m > 0) {
    const HilbertBasis rot = hilbert_basis_finite(GroupSpec::finite({block.rotation_block}), options);
    std::vector<std::size_t> index(m);
    for (std::size_t i = 0; i < m; ++i) index[i] = i;
    for (std::size_t k = 0; k < rot.generators.size(); ++k) {
      hb.generators.push_back(rot.generators[k].embed(n + 1, index));
      hb.degrees.push_back(rot.degrees[k]);
      hb.provenance.push_back(Provenance::UnionAssembly);
    }
    hb.certificate = rot.certificate;
  }
  const Poly xm = Poly::variable(n + 1, m);
  const Poly y = Poly::variable(n + 1, n);
  hb.generators.push_back(xm * xm - y * y);
  hb.degrees.push_back(2);
  hb.provenance.push_back(Provenance::BoostCore);
  for (const auto& g : hb.generators) {
    if (!is_invariant_under(g, a.transform())) {
      throw Error(ErrorCode::Internal, "assembled generator " + g.to_string() + " is not invariant");
    }
  }
  hb.degree_bound = *std::max_element(hb.degrees.begin(), hb.degrees.end());
  hb.block = block;
  return hb;
}

HilbertBasis hilbert_basis(const GroupSpec& group, const HilbertOptions& options) {
  switch (group.kind) {
    case GroupKind::Finite: return hilbert_basis_finite(group, options);
    case GroupKind::BoostCyclic:
    case GroupKind::BlockProduct: return hilbert_basis_lorentz(group, options);
    case GroupKind::LatticeTranslation: {
      group.check();
      HilbertBasis hb;
      hb.nvars = group.lattice_rank;
      return hb;
    }
  }
  throw Error(ErrorCode::Internal, "unknown group kind");
}

}  // namespace lorentzinv
