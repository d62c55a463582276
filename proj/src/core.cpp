#include "bondtree/core.hpp"

#include <algorithm>
#include <cctype>

#include "bondtree/errors.hpp"
#include "bondtree/similarity.hpp"

namespace bondtree {

bool ProteinId::is_valid_token(std::string_view text) noexcept {
  if (text.empty()) return false;
  return std::none_of(text.begin(), text.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) || std::iscntrl(static_cast<unsigned char>(c));
  });
}

ProteinId::ProteinId(std::string value) : value_(std::move(value)) {
  if (!is_valid_token(value_)) {
    throw InvalidArgument("invalid protein id '" + value_ + "': must be non-empty, without whitespace or comma");
  }
}

std::vector<ProteinId> make_ids(std::initializer_list<std::string_view> names) {
  std::vector<ProteinId> ids;
  ids.reserve(names.size());
  for (auto name : names) ids.emplace_back(std::string(name));
  return ids;
}

std::string_view to_string(PropertyKind kind) noexcept {
  switch (kind) {
    case PropertyKind::Structure: return "structure";
    case PropertyKind::Sequence: return "sequence";
    case PropertyKind::Connectivity: return "connectivity";
    case PropertyKind::ClusterIndex: return "cluster_index";
    case PropertyKind::Interactivity: return "interactivity";
    case PropertyKind::TaxonomicAgeDiversity: return "taxonomic";
  }
  return "unknown";
}

LabeledMatrix::LabeledMatrix(std::vector<ProteinId> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  if (values_.size() != ids_.size() * ids_.size()) {
    throw InvalidArgument("matrix with " + std::to_string(ids_.size()) + " ids needs " +
                          std::to_string(ids_.size() * ids_.size()) + " values, got " +
                          std::to_string(values_.size()));
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) throw DuplicateProtein(ids_[i].str());
  }
}

LabeledMatrix LabeledMatrix::filled(std::vector<ProteinId> ids, double off_diagonal, double diagonal) {
  const std::size_t n = ids.size();
  std::vector<double> values(n * n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) values[i * n + i] = diagonal;
  return LabeledMatrix(std::move(ids), std::move(values));
}

std::optional<std::size_t> LabeledMatrix::find(const ProteinId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledMatrix::index_of(const ProteinId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownProtein(id.str());
  return it->second;
}

SimilarityMatrix SimilarityMatrix::from_rows(PropertyKind kind, std::vector<ProteinId> ids,
                                             const std::vector<std::vector<double>>& rows) {
  const std::size_t n = ids.size();
  ValidationReport report;
  report.subject = std::string(to_string(kind));
  if (rows.size() != n) {
    report.errors.push_back({.row = rows.size(),
                             .column = 0,
                             .row_id = "",
                             .column_id = "",
                             .rule = "shape",
                             .value = static_cast<double>(rows.size()),
                             .detail = "expected " + std::to_string(n) + " rows"});
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      report.errors.push_back({.row = i,
                               .column = rows[i].size(),
                               .row_id = i < n ? ids[i].str() : "",
                               .column_id = "",
                               .rule = "shape",
                               .value = static_cast<double>(rows[i].size()),
                               .detail = "expected " + std::to_string(n) + " cells"});
    }
  }
  if (!report.errors.empty()) throw ValidationFailed(std::move(report));

  std::vector<double> values;
  values.reserve(n * n);
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  return SimilarityMatrix(kind, LabeledMatrix(std::move(ids), std::move(values)));
}

PropertySet::PropertySet(std::array<SimilarityMatrix, kPropertyCount> matrices) : matrices_(std::move(matrices)) {
  for (std::size_t k = 0; k < kPropertyCount; ++k) {
    if (matrices_[k].kind() != kAllPropertyKinds[k]) {
      throw IdMismatch("property slot " + std::string(to_string(kAllPropertyKinds[k])) + " holds a " +
                       std::string(to_string(matrices_[k].kind())) + " matrix");
    }
    if (!matrices_[k].grid().same_ids(matrices_[0].grid())) {
      throw IdMismatch(std::string(to_string(matrices_[k].kind())) +
                       " matrix id list differs from the structure matrix id list");
    }
  }
}

bool PropertySet::validated() const noexcept {
  return std::all_of(matrices_.begin(), matrices_.end(), [](const SimilarityMatrix& m) { return m.validated(); });
}

}  // namespace bondtree
