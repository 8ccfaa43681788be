#include "lorentzinv/lorentz.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "lorentzinv/error.hpp"

namespace lorentzinv {

Matrix<BoostScalar> MinkowskiForm::matrix() const {
  Matrix<BoostScalar> j = Matrix<BoostScalar>::identity(dim());
  j(n, n) = BoostScalar(-1);
  return j;
}

Matrix<BoostScalar> boost_matrix(int half_multiple) {
  const BoostScalar c = BoostScalar::cosh_half_multiple(half_multiple);
  const BoostScalar s = BoostScalar::sinh_half_multiple(half_multiple);
  return Matrix<BoostScalar>{{c, s}, {s, c}};
}

Matrix<BoostScalar> kappa_x() { return Matrix<BoostScalar>{{1, 0}, {0, -1}}; }
Matrix<BoostScalar> kappa_y() { return Matrix<BoostScalar>{{-1, 0}, {0, 1}}; }

Matrix<BoostScalar> lambda_p(std::size_t n) {
  Matrix<BoostScalar> m = Matrix<BoostScalar>::identity(n + 1);
  m(0, 0) = BoostScalar(-1);
  return m;
}

Matrix<BoostScalar> lambda_t(std::size_t n) { return MinkowskiForm{n}.matrix(); }
Matrix<BoostScalar> lambda_pt(std::size_t n) { return lambda_p(n) * lambda_t(n); }

LorentzMatrix validate(const Transform& t, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ShapeError, "signature (n,1) needs n >= 1");
  if (t.dim() != n + 1) {
    throw Error(ErrorCode::ShapeError, "expected a square matrix of size " + std::to_string(n + 1));
  }
  for (const auto& tag : t.rotations()) {
    if (tag.second >= n) throw Error(ErrorCode::NotLorentz, "rotation plane touches the time coordinate");
  }
  const Matrix<BoostScalar> j = MinkowskiForm{n}.matrix();
  const Matrix<BoostScalar> defect = t.base().transpose() * j * t.base() - j;
  for (std::size_t r = 0; r < defect.rows(); ++r) {
    for (std::size_t c = 0; c < defect.cols(); ++c) {
      if (!defect(r, c).is_zero()) {
        throw Error(ErrorCode::NotLorentz, "A^T J A - J has entry (" + std::to_string(r) + "," + std::to_string(c) +
                                               ") = " + defect(r, c).to_string());
      }
    }
  }
  const BoostScalar d = determinant(t.base());
  if (!(d == BoostScalar(1)) && !(d == BoostScalar(-1))) {
    throw Error(ErrorCode::Internal, "Lorentz matrix with determinant " + d.to_string());
  }
  return LorentzMatrix(t, n, d == BoostScalar(1) ? 1 : -1);
}

LorentzMatrix validate(const Matrix<BoostScalar>& a, std::size_t n) { return validate(Transform(a), n); }

Matrix<BoostScalar> lorentz_inverse(const Matrix<BoostScalar>& a) {
  const MinkowskiForm form{a.rows() - 1};
  const auto j = form.matrix();
  return j * a.transpose() * j;
}

std::string_view component_name(Component c) {
  switch (c) {
    case Component::SO0: return "SO0";
    case Component::LambdaP: return "Lambda_p*SO0";
    case Component::LambdaT: return "Lambda_t*SO0";
    case Component::LambdaPT: return "Lambda_pt*SO0";
  }
  return "?";
}

Component component(const LorentzMatrix& a) {
  const int time_sign = a.base()(a.n(), a.n()).dominant_sign();
  if (a.det() > 0) return time_sign > 0 ? Component::SO0 : Component::LambdaPT;
  return time_sign > 0 ? Component::LambdaP : Component::LambdaT;
}

std::string_view reflection_name(ReflectionType r) { return r == ReflectionType::KappaX ? "kappa_x" : "kappa_y"; }

InvolutionNormalForm involution_normal_form(const LorentzMatrix& a) {
  if (a.n() != 1) throw Error(ErrorCode::ShapeError, "involution normal form needs signature (1,1)");
  const auto& m = a.base();
  const auto id = Matrix<BoostScalar>::identity(2);
  if (!(m * m == id)) throw Error(ErrorCode::NotInvolutive, "A^2 != I");
  if (m == id || m == BoostScalar(-1) * id) throw Error(ErrorCode::Central, "A = +-I has no reflection normal form");

  // Involutions other than +-I are [[a, b], [-b, -a]] with a^2 - b^2 = 1.
  InvolutionNormalForm nf;
  const int lead = m(0, 0).dominant_sign();
  if (lead > 0) {
    nf.type = ReflectionType::KappaX;
    nf.reflection = kappa_x();
    nf.cosh_beta = m(0, 0);
    nf.sinh_beta = m(0, 1);
  } else {
    nf.type = ReflectionType::KappaY;
    nf.reflection = kappa_y();
    nf.cosh_beta = -m(0, 0);
    nf.sinh_beta = -m(0, 1);
  }
  const BoostScalar e_beta = nf.cosh_beta + nf.sinh_beta;
  if (!e_beta.exact_sqrt(nf.half_unit)) {
    throw Error(ErrorCode::NoExactConjugator, "e^beta = " + e_beta.to_string() + " has no exact square root");
  }
  const BoostScalar inv = nf.half_unit.inverse();
  const BoostScalar half(Rational(1, 2));
  const BoostScalar ch = half * (nf.half_unit + inv);
  const BoostScalar sh = half * (nf.half_unit - inv);
  nf.conjugator = Matrix<BoostScalar>{{ch, -sh}, {-sh, ch}};
  if (!(lorentz_inverse(nf.conjugator) * m * nf.conjugator == nf.reflection)) {
    throw Error(ErrorCode::Internal, "involution conjugator failed exact verification");
  }
  return nf;
}

std::optional<std::size_t> transform_order(const Transform& t, std::size_t cap) {
  Transform power = t;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * t;
  }
  return std::nullopt;
}

BlockForm detect_block_structure(const LorentzMatrix& a) {
  const std::size_t n = a.n();
  const std::size_t m = n - 1;  // rotation block size
  const auto& base = a.base();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m; j <= n; ++j) {
      if (!base(i, j).is_zero() || !base(j, i).is_zero()) {
        throw Error(ErrorCode::NotBlock, "off-diagonal block entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") is nonzero");
      }
    }
  }
  BlockForm out;
  out.boost = base.block(m, m, 2, 2);
  if (!(out.boost(0, 0) == out.boost(1, 1)) || !(out.boost(0, 1) == out.boost(1, 0))) {
    throw Error(ErrorCode::NotBlock, "(x_n, y) block is not of the form [[a, b], [b, a]]");
  }
  out.boost_sign = out.boost(0, 0).dominant_sign();
  out.cosh_beta = BoostScalar(out.boost_sign) * out.boost(0, 0);
  out.sinh_beta = BoostScalar(out.boost_sign) * out.boost(0, 1);

  Matrix<BoostScalar> r = base.block(0, 0, m, m);
  for (const auto& x : r.data()) {
    if (!x.is_rational()) throw Error(ErrorCode::NotBlock, "rotation block has boost-dependent entries");
  }
  if (!(r.transpose() * r == Matrix<BoostScalar>::identity(m))) {
    throw Error(ErrorCode::NotBlock, "rotation block is not orthogonal");
  }
  std::vector<RotationTag> tags;
  for (const auto& tag : a.transform().rotations()) {
    if (tag.second >= m) throw Error(ErrorCode::NotBlock, "rotation tag leaves the Euclidean block");
    tags.push_back(tag);
  }
  out.rotation_block = Transform(std::move(r), std::move(tags));
  if (m > 0) out.rotation_order = transform_order(out.rotation_block);
  return out;
}

}  // namespace lorentzinv
