#include "lorentzinv/complex_pair.hpp"

#include "lorentzinv/error.hpp"

namespace lorentzinv {

namespace {

GaussianScalar g(const Rational& re, const Rational& im) { return GaussianScalar(BoostScalar(re), BoostScalar(im)); }

GaussianPoly term(std::size_t nvars, std::size_t var, const GaussianScalar& c) {
  return c * GaussianPoly::variable(nvars, var);
}

std::vector<GaussianPoly> to_images(std::size_t nvars, const std::vector<Plane>& planes) {
  std::vector<GaussianPoly> images;
  for (std::size_t k = 0; k < nvars; ++k) images.push_back(GaussianPoly::variable(nvars, k));
  const Rational half(1, 2);
  for (const auto& [i, j] : planes) {
    if (i >= nvars || j >= nvars) throw Error(ErrorCode::ShapeError, "rotation plane outside the polynomial's variables");
    // x_i = (z + zbar)/2, x_j = (z - zbar)/(2i)
    images[i] = term(nvars, i, g(half, 0)) + term(nvars, j, g(half, 0));
    images[j] = term(nvars, i, g(0, -half)) + term(nvars, j, g(0, half));
  }
  return images;
}

}  // namespace

GaussianScalar to_gaussian(const BoostScalar& b) { return GaussianScalar(b); }

Matrix<GaussianScalar> to_gaussian(const Matrix<BoostScalar>& m) {
  return m.map<GaussianScalar>([](const BoostScalar& b) { return GaussianScalar(b); });
}

GaussianPoly to_complex_pair(const GaussianPoly& p, const std::vector<Plane>& planes) {
  if (planes.empty()) return p;
  return substitute(p, to_images(p.nvars(), planes));
}

GaussianPoly to_complex_pair(const Poly& p, const std::vector<Plane>& planes) {
  return to_complex_pair(p.map_coefficients<GaussianScalar>([](const BoostScalar& b) { return GaussianScalar(b); }), planes);
}

GaussianPoly from_complex_pair_gaussian(const GaussianPoly& m, const std::vector<Plane>& planes) {
  if (planes.empty()) return m;
  const std::size_t nvars = m.nvars();
  std::vector<GaussianPoly> images;
  for (std::size_t k = 0; k < nvars; ++k) images.push_back(GaussianPoly::variable(nvars, k));
  for (const auto& [i, j] : planes) {
    if (i >= nvars || j >= nvars) throw Error(ErrorCode::ShapeError, "rotation plane outside the polynomial's variables");
    images[i] = term(nvars, i, g(1, 0)) + term(nvars, j, g(0, 1));
    images[j] = term(nvars, i, g(1, 0)) + term(nvars, j, g(0, -1));
  }
  return substitute(m, images);
}

Poly from_complex_pair(const GaussianPoly& m, const std::vector<Plane>& planes) {
  const GaussianPoly back = from_complex_pair_gaussian(m, planes);
  Poly out(back.nvars());
  for (const auto& [e, c] : back.terms()) {
    if (!c.im.is_zero()) throw Error(ErrorCode::Internal, "complex-pair polynomial is not real");
    out.add_term(e, c.re);
  }
  return out;
}

Rational monomial_phase(const Exponents& e, const std::vector<Plane>& planes, const std::vector<Rational>& angles) {
  Rational phase;
  for (std::size_t p = 0; p < planes.size(); ++p) {
    phase += angles[p] * Rational(e[planes[p].first] - e[planes[p].second]);
  }
  return fractional_part(phase);
}

bool equal_after_phase(const GaussianScalar& lhs, const Rational& phase, const GaussianScalar& rhs) {
  const Rational quarter_turns = phase * Rational(4);
  if (!quarter_turns.is_integer()) return is_zero(lhs) && is_zero(rhs);
  return i_power<BoostScalar>(quarter_turns.numerator().get_si()) * lhs == rhs;
}

}  // namespace lorentzinv
