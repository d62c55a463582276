#pragma once

#include <memory>
#include <span>

#include "bondtree/core.hpp"

namespace bondtree {

// Read-only bond lookup used by a build. Either a precomputed bond matrix or
// a property set whose bonds are computed on demand. Copies share the
// underlying data, so one source can feed concurrent builds.
class BondSource {
 public:
  // Both factories validate their input (strict, no symmetrization) unless it
  // already passed validation; throws ValidationFailed.
  static BondSource from_matrix(BondMatrix matrix);
  static BondSource from_properties(PropertySet properties);

  // Symmetric; bond(p, p) == 6. Throws UnknownProtein.
  double bond(const ProteinId& p, const ProteinId& q) const;

  bool contains(const ProteinId& id) const;
  std::span<const ProteinId> ids() const;
  bool lazy() const noexcept { return properties_ != nullptr; }

 private:
  BondSource() = default;

  std::shared_ptr<const BondMatrix> matrix_;
  std::shared_ptr<const PropertySet> properties_;
};

}  // namespace bondtree
