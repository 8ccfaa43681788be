#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lorentzinv/group.hpp"
#include "lorentzinv/lorentz.hpp"
#include "lorentzinv/membership.hpp"
#include "lorentzinv/polynomial.hpp"

namespace lorentzinv {

struct InvarianceResult {
  bool holds = true;
  std::optional<std::size_t> failing_generator;
};

/// Exact test p o g == p. A decoupled boost block on the last two
/// coordinates is diagonalized in light-cone coordinates (u, v) = (x + y, x - y);
/// tagged rotation planes are handled in complex-pair coordinates.
bool is_invariant_under(const Poly& p, const Transform& g);

/// Checks every generator; lattice groups act by unit translations.
InvarianceResult is_invariant(const Poly& p, const GroupSpec& group);

/// Exact test F(g x) == g F(x).
bool is_equivariant_under(const PolyMap& f, const Transform& g);
InvarianceResult check_equivariant(const PolyMap& f, const GroupSpec& group);

/// Splits a finite group as (matrix parts) x (rotation angles on tagged
/// planes). Throws UnsupportedGroup when the group is not such a product.
struct TorusSplit {
  std::vector<Plane> planes;
  std::vector<Matrix<BoostScalar>> bases;          // distinct matrix parts
  std::vector<std::vector<Rational>> angle_group;  // angles of the rotation subgroup, per plane
};
TorusSplit split_rotations(const FiniteGroup& group);

/// (1/|G|) sum_g p o g.
Poly reynolds(const Poly& p, const FiniteGroup& group);

/// Row-reduced basis of the degree-d invariants (Reynolds images of all
/// degree-d monomials), each with grevlex leading coefficient 1.
std::vector<Poly> invariant_space(const FiniteGroup& group, int degree);

struct MolienSeries {
  std::vector<Rational> numerator;    // ascending powers of z
  std::vector<Rational> denominator;  // constant term 1
  std::vector<long> expansion;        // coefficients of z^0 .. z^K
};

/// Phi(z) = (1/|G|) sum_g 1/det(I - z g) in lowest terms, expanded to z^order.
MolienSeries molien(const FiniteGroup& group, int order);

enum class Provenance { Reynolds, BoostCore, InvolutionTable, UnionAssembly };

std::string_view provenance_name(Provenance p);

struct DegreeCertificate {
  int degree = 0;
  long molien = 0;
  std::size_t invariant_dimension = 0;  // rank of the Reynolds images
  std::size_t generated_dimension = 0;  // dimension spanned by basis products
};

struct HilbertBasis {
  std::size_t nvars = 0;
  std::vector<Poly> generators;
  std::vector<int> degrees;
  std::vector<Provenance> provenance;
  std::optional<std::size_t> group_order;
  int degree_bound = 0;
  std::optional<MolienSeries> molien;
  std::vector<DegreeCertificate> certificate;
  std::optional<InvolutionNormalForm> involution;
  std::optional<BlockForm> block;
};

struct HilbertOptions {
  /// Search cutoff; defaults to the group order.
  std::optional<int> max_degree;
  std::size_t closure_cap = kDefaultClosureCap;
  MembershipOptions membership;
};

/// Finite groups. A single non-central involution of O(1,1) uses its
/// reflection normal form; everything else is Reynolds averaging of
/// monomials with greedy pruning by membership, certified degree by degree
/// against the Molien series. Throws CertificateFailed on disagreement.
HilbertBasis hilbert_basis_finite(const GroupSpec& group, const HilbertOptions& options = {});

/// Cyclic Lorentz groups generated by diag(R, +-H) with R of finite order:
/// the basis of R (embedded) together with x_n^2 - y^2.
HilbertBasis hilbert_basis_lorentz(const GroupSpec& group, const HilbertOptions& options = {});

/// Dispatch on the group kind; lattice translations have only constants.
HilbertBasis hilbert_basis(const GroupSpec& group, const HilbertOptions& options = {});

}  // namespace lorentzinv
