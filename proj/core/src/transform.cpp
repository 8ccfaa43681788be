#include "lorentzinv/transform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "lorentzinv/error.hpp"

namespace lorentzinv {

std::size_t RotationTag::order() const { return angle.denominator().get_ui(); }

bool acts_trivially_on(const Matrix<BoostScalar>& m, std::size_t c) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const BoostScalar expected = (k == c) ? BoostScalar(1) : BoostScalar(0);
    if (!(m(c, k) == expected) || !(m(k, c) == expected)) return false;
  }
  return true;
}

Transform::Transform(Matrix<BoostScalar> base, std::vector<RotationTag> rotations) : base_(std::move(base)) {
  if (!base_.is_square()) throw Error(ErrorCode::ShapeError, "transform base must be square");
  std::map<Plane, Rational> merged;
  std::set<std::size_t> used;
  for (auto tag : rotations) {
    if (tag.first == tag.second || tag.first >= dim() || tag.second >= dim()) {
      throw Error(ErrorCode::ShapeError, "rotation plane out of range or degenerate");
    }
    if (tag.first > tag.second) {
      std::swap(tag.first, tag.second);
      tag.angle = -tag.angle;
    }
    auto it = merged.find(tag.plane());
    if (it == merged.end()) {
      if (used.count(tag.first) != 0 || used.count(tag.second) != 0) {
        throw Error(ErrorCode::ShapeError, "rotation planes must be disjoint");
      }
      used.insert(tag.first);
      used.insert(tag.second);
      merged.emplace(tag.plane(), tag.angle);
    } else {
      it->second += tag.angle;
    }
  }
  for (const auto& [plane, angle] : merged) {
    if (!acts_trivially_on(base_, plane.first) || !acts_trivially_on(base_, plane.second)) {
      throw Error(ErrorCode::ShapeError, "base matrix must act as the identity on rotation planes");
    }
    Rational a = fractional_part(angle);
    if (!a.is_zero()) rotations_.push_back({plane.first, plane.second, a});
  }
}

Transform Transform::rotation(std::size_t dim, std::size_t first, std::size_t second, const Rational& angle) {
  return Transform(Matrix<BoostScalar>::identity(dim), {{first, second, angle}});
}

bool Transform::base_is_rational() const {
  return std::all_of(base_.data().begin(), base_.data().end(), [](const BoostScalar& b) { return b.is_rational(); });
}

Rational Transform::angle_on(const Plane& plane) const {
  for (const auto& tag : rotations_)
    if (tag.plane() == plane) return tag.angle;
  return Rational();
}

std::vector<Plane> Transform::planes() const {
  std::vector<Plane> out;
  for (const auto& tag : rotations_) out.push_back(tag.plane());
  return out;
}

Transform operator*(const Transform& a, const Transform& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeError, "transform dimension mismatch");
  auto check = [](const Matrix<BoostScalar>& base, const std::vector<RotationTag>& tags) {
    for (const auto& tag : tags) {
      if (!acts_trivially_on(base, tag.first) || !acts_trivially_on(base, tag.second)) {
        throw Error(ErrorCode::UnsupportedGroup, "rotation plane is moved by another generator's matrix part");
      }
    }
  };
  check(a.base_, b.rotations_);
  check(b.base_, a.rotations_);
  std::vector<RotationTag> tags = a.rotations_;
  tags.insert(tags.end(), b.rotations_.begin(), b.rotations_.end());
  // Tags on the same plane merge in the constructor.
  std::map<Plane, Rational> sum;
  for (const auto& t : tags) sum[t.plane()] += t.angle;
  std::vector<RotationTag> merged;
  for (const auto& [plane, angle] : sum) merged.push_back({plane.first, plane.second, angle});
  return Transform(a.base_ * b.base_, std::move(merged));
}

std::strong_ordering operator<=>(const Transform& a, const Transform& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& da = a.base_.data();
  const auto& db = b.base_.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (auto c = da[i] <=> db[i]; c != 0) return c;
  }
  return std::lexicographical_compare_three_way(a.rotations_.begin(), a.rotations_.end(), b.rotations_.begin(),
                                                b.rotations_.end());
}

}  // namespace lorentzinv
