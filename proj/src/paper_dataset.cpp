#include "bondtree/paper_dataset.hpp"

namespace bondtree {
namespace embedded {
extern const std::string_view kPaperManifest;
extern const std::string_view kPaperBond;
extern const std::string_view kPaperStructure;
extern const std::string_view kPaperSequence;
extern const std::string_view kPaperConnectivity;
extern const std::string_view kPaperClusterIndex;
extern const std::string_view kPaperInteractivity;
extern const std::string_view kPaperTaxonomic;
}  // namespace embedded

std::optional<std::string> paper_dataset_file(std::string_view name) {
  using namespace embedded;
  if (name == kManifestFile) return std::string(kPaperManifest);
  if (name == kBondFile) return std::string(kPaperBond);
  if (name == property_file_name(PropertyKind::Structure)) return std::string(kPaperStructure);
  if (name == property_file_name(PropertyKind::Sequence)) return std::string(kPaperSequence);
  if (name == property_file_name(PropertyKind::Connectivity)) return std::string(kPaperConnectivity);
  if (name == property_file_name(PropertyKind::ClusterIndex)) return std::string(kPaperClusterIndex);
  if (name == property_file_name(PropertyKind::Interactivity)) return std::string(kPaperInteractivity);
  if (name == property_file_name(PropertyKind::TaxonomicAgeDiversity)) return std::string(kPaperTaxonomic);
  return std::nullopt;
}

DatasetBundle paper_dataset() {
  static const DatasetBundle bundle = load_bundle(BundleReader(paper_dataset_file));
  return bundle;
}

}  // namespace bondtree
