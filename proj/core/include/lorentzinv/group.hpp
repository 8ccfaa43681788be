#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lorentzinv/transform.hpp"

namespace lorentzinv {

enum class GroupKind { Finite, BoostCyclic, BlockProduct, LatticeTranslation };

std::string_view kind_name(GroupKind k);
GroupKind parse_kind(std::string_view name);

/// A group presentation: generators acting on R^dimension. Lorentz kinds
/// carry the spatial dimension n of the signature (n, 1); the lattice kind
/// is Z^rank acting by unit translations and has no matrix generators.
struct GroupSpec {
  GroupKind kind = GroupKind::Finite;
  std::size_t dimension = 0;
  std::optional<std::size_t> signature_n;
  std::vector<Transform> generators;
  std::size_t lattice_rank = 0;

  static GroupSpec finite(std::vector<Transform> generators);
  static GroupSpec boost_cyclic(Transform generator, std::size_t n);
  static GroupSpec block_product(Transform generator, std::size_t n);
  static GroupSpec lattice(std::size_t rank);

  /// Checks shape consistency; throws ShapeError.
  void check() const;
};

/// Elements of a finite group in breadth-first order from the identity,
/// ties within a layer broken by the canonical order on transforms.
struct FiniteGroup {
  std::size_t dimension = 0;
  std::vector<Transform> generators;
  std::vector<Transform> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Transform& t) const;
};

constexpr std::size_t kDefaultClosureCap = 10000;

/// Closure under multiplication; throws CapExceeded past `cap` elements.
FiniteGroup enumerate_finite(const GroupSpec& spec, std::size_t cap = kDefaultClosureCap);

}  // namespace lorentzinv
