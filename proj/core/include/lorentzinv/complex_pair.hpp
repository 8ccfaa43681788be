#pragma once

#include <vector>

#include "lorentzinv/gaussian.hpp"
#include "lorentzinv/polynomial.hpp"
#include "lorentzinv/transform.hpp"

namespace lorentzinv {

using GaussianScalar = Gaussian<BoostScalar>;
using GaussianPoly = Polynomial<GaussianScalar>;

/// Complex-pair coordinates: for each plane (i, j), slot i holds z = x_i + i x_j
/// and slot j holds its conjugate; other slots keep their real coordinate.
/// A rotation by angle a on the plane multiplies z^r zbar^s by e^{2 pi i a (r - s)}.
GaussianPoly to_complex_pair(const Poly& p, const std::vector<Plane>& planes);
GaussianPoly to_complex_pair(const GaussianPoly& p, const std::vector<Plane>& planes);

/// Inverse change of coordinates, keeping complex coefficients.
GaussianPoly from_complex_pair_gaussian(const GaussianPoly& m, const std::vector<Plane>& planes);

/// Inverse change of coordinates; throws Internal if the result is not real.
Poly from_complex_pair(const GaussianPoly& m, const std::vector<Plane>& planes);

/// sum_p angle_p (r_p - s_p) reduced into [0, 1).
Rational monomial_phase(const Exponents& e, const std::vector<Plane>& planes, const std::vector<Rational>& angles);

/// Exact test of lhs * e^{2 pi i phase} == rhs. Only quarter turns keep
/// values inside Q(i)(s); at any other phase both sides must vanish.
bool equal_after_phase(const GaussianScalar& lhs, const Rational& phase, const GaussianScalar& rhs);

GaussianScalar to_gaussian(const BoostScalar& b);
Matrix<GaussianScalar> to_gaussian(const Matrix<BoostScalar>& m);

}  // namespace lorentzinv
