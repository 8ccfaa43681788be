#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "lorentzinv/boost_scalar.hpp"
#include "lorentzinv/matrix.hpp"
#include "lorentzinv/transform.hpp"

namespace lorentzinv {

/// Q(x_1..x_n, y) = x_1^2 + ... + x_n^2 - y^2 on R^{n,1}.
struct MinkowskiForm {
  std::size_t n = 1;

  std::size_t dim() const { return n + 1; }
  /// diag(1, ..., 1, -1); also the time reversal Lambda_t.
  Matrix<BoostScalar> matrix() const;
};

/// The standard boost H on the (x, y) plane in half-unit form.
Matrix<BoostScalar> boost_matrix(int half_multiple = 2);
Matrix<BoostScalar> kappa_x();
Matrix<BoostScalar> kappa_y();

/// Parity reversal: -1 in the first spatial slot.
Matrix<BoostScalar> lambda_p(std::size_t n);
Matrix<BoostScalar> lambda_t(std::size_t n);
Matrix<BoostScalar> lambda_pt(std::size_t n);

/// A Transform verified to preserve the Minkowski form of signature (n, 1).
class LorentzMatrix {
 public:
  const Transform& transform() const { return transform_; }
  const Matrix<BoostScalar>& base() const { return transform_.base(); }
  std::size_t n() const { return n_; }
  int det() const { return det_; }

 private:
  friend LorentzMatrix validate(const Transform& t, std::size_t n);
  LorentzMatrix(Transform t, std::size_t n, int det) : transform_(std::move(t)), n_(n), det_(det) {}

  Transform transform_;
  std::size_t n_;
  int det_;
};

/// Checks A^T J A = J exactly; throws NotLorentz naming the offending entry.
LorentzMatrix validate(const Transform& t, std::size_t n);
LorentzMatrix validate(const Matrix<BoostScalar>& a, std::size_t n);

/// Inverse of a Lorentz matrix, J A^T J.
Matrix<BoostScalar> lorentz_inverse(const Matrix<BoostScalar>& a);

enum class Component { SO0, LambdaP, LambdaT, LambdaPT };

std::string_view component_name(Component c);

/// Connected component from det(A) and the sign of the time-time entry.
Component component(const LorentzMatrix& a);

enum class ReflectionType { KappaX, KappaY };

std::string_view reflection_name(ReflectionType r);

struct InvolutionNormalForm {
  ReflectionType type;
  Matrix<BoostScalar> reflection;  // kappa_x or kappa_y
  Matrix<BoostScalar> conjugator;  // C with C^{-1} A C = reflection
  BoostScalar cosh_beta;
  BoostScalar sinh_beta;
  BoostScalar half_unit;           // e^{beta/2}
};

/// Normal form of an involution of O(1,1) other than +-I. The conjugator has
/// entries cosh(beta/2), -sinh(beta/2) and is checked exactly before return.
/// Throws NotInvolutive, Central, ShapeError or NoExactConjugator.
InvolutionNormalForm involution_normal_form(const LorentzMatrix& a);

struct BlockForm {
  Transform rotation_block;   // (n-1)x(n-1) orthogonal part with its tags
  Matrix<BoostScalar> boost;  // 2x2 block on (x_n, y)
  BoostScalar cosh_beta;
  BoostScalar sinh_beta;
  int boost_sign = 1;         // -1 when the block is -H
  std::optional<std::size_t> rotation_order;

  bool boost_nonzero() const { return !sinh_beta.is_zero(); }
};

/// Recognizes the literal block form diag(R, +-H). Throws NotBlock.
BlockForm detect_block_structure(const LorentzMatrix& a);

/// Order of a finite-order transform, searched up to `cap`.
std::optional<std::size_t> transform_order(const Transform& t, std::size_t cap = 10000);

}  // namespace lorentzinv
