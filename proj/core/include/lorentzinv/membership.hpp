#pragma once

#include <cstddef>
#include <vector>

#include "lorentzinv/polynomial.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv {

/// coefficient * prod_i gens[i]^powers[i]
struct WitnessTerm {
  Exponents powers;
  Rational coefficient;
};

struct MembershipResult {
  bool inside = false;
  std::vector<WitnessTerm> witness;
  std::size_t candidates = 0;  // generator products examined
};

struct MembershipOptions {
  std::size_t term_cap = 1'000'000;
};

/// Decides p in R[gens] by degree-bounded exact linear algebra. Products of
/// generators are weighted by their total degrees and bounded by deg(p);
/// when p and all generators are homogeneous only products of weighted
/// degree exactly deg(p) are needed. Coefficients must be rational.
MembershipResult membership(const Poly& p, const std::vector<Poly>& gens, const MembershipOptions& options = {});

/// Expands a witness back into a polynomial.
Poly evaluate_witness(const std::vector<WitnessTerm>& witness, const std::vector<Poly>& gens, std::size_t nvars);

/// Dimension of the degree-d homogeneous component of R[gens] for
/// homogeneous nonconstant generators.
std::size_t subalgebra_dimension(const std::vector<Poly>& gens, int degree, const MembershipOptions& options = {});

}  // namespace lorentzinv
