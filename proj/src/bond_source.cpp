#include "bondtree/bond_source.hpp"

#include "bondtree/similarity.hpp"

namespace bondtree {

BondSource BondSource::from_matrix(BondMatrix matrix) {
  BondSource source;
  source.matrix_ = std::make_shared<const BondMatrix>(validate(matrix).matrix);
  return source;
}

BondSource BondSource::from_properties(PropertySet properties) {
  BondSource source;
  if (properties.validated()) {
    source.properties_ = std::make_shared<const PropertySet>(std::move(properties));
    return source;
  }
  std::array<SimilarityMatrix, kPropertyCount> checked;
  for (std::size_t k = 0; k < kPropertyCount; ++k) checked[k] = validate(properties.matrices()[k]).matrix;
  source.properties_ = std::make_shared<const PropertySet>(std::move(checked));
  return source;
}

double BondSource::bond(const ProteinId& p, const ProteinId& q) const {
  if (matrix_) return matrix_->bond(p, q);
  return bond_factor(*properties_, p, q);
}

bool BondSource::contains(const ProteinId& id) const {
  return matrix_ ? matrix_->grid().contains(id) : properties_->contains(id);
}

std::span<const ProteinId> BondSource::ids() const { return matrix_ ? matrix_->ids() : properties_->ids(); }

}  // namespace bondtree
