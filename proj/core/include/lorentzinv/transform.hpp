#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "lorentzinv/boost_scalar.hpp"
#include "lorentzinv/matrix.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv {

using Plane = std::pair<std::size_t, std::size_t>;

/// Rotation of finite order in the coordinate plane (first, second), by
/// `angle` full turns. Kept symbolic: cos(2*pi*angle) never becomes a scalar.
struct RotationTag {
  std::size_t first = 0;
  std::size_t second = 1;
  Rational angle;  // in [0, 1)

  std::size_t order() const;
  Plane plane() const { return {first, second}; }

  friend bool operator==(const RotationTag&, const RotationTag&) = default;
  friend std::strong_ordering operator<=>(const RotationTag& a, const RotationTag& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    if (auto c = a.second <=> b.second; c != 0) return c;
    return a.angle <=> b.angle;
  }
};

/// A linear map x -> base * R x, where R rotates the tagged planes. The base
/// matrix must act as the identity on every tagged coordinate, so the two
/// parts commute and the tags compose by adding angles.
class Transform {
 public:
  Transform() = default;
  explicit Transform(Matrix<BoostScalar> base, std::vector<RotationTag> rotations = {});

  static Transform identity(std::size_t dim) { return Transform(Matrix<BoostScalar>::identity(dim)); }
  static Transform rotation(std::size_t dim, std::size_t first, std::size_t second, const Rational& angle);

  std::size_t dim() const { return base_.rows(); }
  const Matrix<BoostScalar>& base() const { return base_; }
  const std::vector<RotationTag>& rotations() const { return rotations_; }
  bool has_rotations() const { return !rotations_.empty(); }
  bool is_identity() const { return rotations_.empty() && base_ == Matrix<BoostScalar>::identity(dim()); }
  bool base_is_rational() const;

  /// Rotation angle on a plane (zero when untagged).
  Rational angle_on(const Plane& plane) const;
  std::vector<Plane> planes() const;

  friend Transform operator*(const Transform& a, const Transform& b);
  friend bool operator==(const Transform&, const Transform&) = default;
  friend std::strong_ordering operator<=>(const Transform& a, const Transform& b);

 private:
  Matrix<BoostScalar> base_;
  std::vector<RotationTag> rotations_;
};

/// True when the matrix acts as the identity on coordinate c (row and column).
bool acts_trivially_on(const Matrix<BoostScalar>& m, std::size_t c);

}  // namespace lorentzinv
