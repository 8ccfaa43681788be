#include "lorentzinv/group.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lorentzinv/error.hpp"
#include "lorentzinv/lorentz.hpp"

namespace lorentzinv {

std::string_view kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Finite: return "finite";
    case GroupKind::BoostCyclic: return "boost-cyclic";
    case GroupKind::BlockProduct: return "block-product";
    case GroupKind::LatticeTranslation: return "lattice-translation";
  }
  return "?";
}

GroupKind parse_kind(std::string_view name) {
  if (name == "finite") return GroupKind::Finite;
  if (name == "boost-cyclic") return GroupKind::BoostCyclic;
  if (name == "block-product") return GroupKind::BlockProduct;
  if (name == "lattice-translation") return GroupKind::LatticeTranslation;
  throw Error(ErrorCode::ParseError, "unknown group kind '" + std::string(name) + "'");
}

GroupSpec GroupSpec::finite(std::vector<Transform> generators) {
  GroupSpec g;
  g.kind = GroupKind::Finite;
  if (generators.empty()) throw Error(ErrorCode::ShapeError, "finite group needs at least one generator");
  g.dimension = generators.front().dim();
  g.generators = std::move(generators);
  g.check();
  return g;
}

GroupSpec GroupSpec::boost_cyclic(Transform generator, std::size_t n) {
  GroupSpec g;
  g.kind = GroupKind::BoostCyclic;
  g.dimension = n + 1;
  g.signature_n = n;
  g.generators.push_back(std::move(generator));
  g.check();
  return g;
}

GroupSpec GroupSpec::block_product(Transform generator, std::size_t n) {
  GroupSpec g = boost_cyclic(std::move(generator), n);
  g.kind = GroupKind::BlockProduct;
  return g;
}

GroupSpec GroupSpec::lattice(std::size_t rank) {
  if (rank == 0) throw Error(ErrorCode::ShapeError, "lattice rank must be positive");
  GroupSpec g;
  g.kind = GroupKind::LatticeTranslation;
  g.dimension = rank;
  g.lattice_rank = rank;
  return g;
}

void GroupSpec::check() const {
  if (kind == GroupKind::LatticeTranslation) {
    if (lattice_rank == 0 || dimension != lattice_rank) throw Error(ErrorCode::ShapeError, "bad lattice rank");
    return;
  }
  if (generators.empty()) throw Error(ErrorCode::ShapeError, "group needs at least one generator");
  for (const auto& g : generators) {
    if (g.dim() != dimension) throw Error(ErrorCode::ShapeError, "generator dimensions differ");
  }
  if (kind == GroupKind::BoostCyclic || kind == GroupKind::BlockProduct) {
    if (generators.size() != 1) throw Error(ErrorCode::ShapeError, "cyclic Lorentz group needs exactly one generator");
    if (!signature_n || *signature_n + 1 != dimension) {
      throw Error(ErrorCode::ShapeError, "signature does not match the generator size");
    }
  }
}

bool FiniteGroup::contains(const Transform& t) const {
  return std::find(elements.begin(), elements.end(), t) != elements.end();
}

FiniteGroup enumerate_finite(const GroupSpec& spec, std::size_t cap) {
  if (spec.kind == GroupKind::LatticeTranslation) {
    throw Error(ErrorCode::CapExceeded, "lattice translation groups are infinite");
  }
  spec.check();
  FiniteGroup g;
  g.dimension = spec.dimension;
  g.generators = spec.generators;
  std::set<Transform> seen;
  std::vector<Transform> layer{Transform::identity(spec.dimension)};
  seen.insert(layer.front());
  g.elements = layer;
  while (!layer.empty()) {
    std::set<Transform> next;
    for (const auto& e : layer) {
      for (const auto& gen : spec.generators) {
        Transform p = gen * e;
        if (seen.count(p) == 0 && next.count(p) == 0) {
          next.insert(std::move(p));
          if (seen.size() + next.size() > cap) {
            throw Error(ErrorCode::CapExceeded,
                        "closure exceeds " + std::to_string(cap) + " elements; the group is not finite");
          }
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& e : layer) {
      seen.insert(e);
      g.elements.push_back(e);
    }
  }
  return g;
}

}  // namespace lorentzinv
