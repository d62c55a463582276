#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bondtree {

// Absolute tolerance for comparing decimal values (bond factors, percentages).
inline constexpr double kDecimalEpsilon = 1e-9;

// Self-bond: all six self-similarities are 100%.
inline constexpr double kMaxBond = 6.0;
inline constexpr double kFullSimilarity = 100.0;

// Opaque protein label. Non-empty, no whitespace, no comma; compared
// case-sensitively.
class ProteinId {
 public:
  explicit ProteinId(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const ProteinId&, const ProteinId&) = default;
  friend auto operator<=>(const ProteinId&, const ProteinId&) = default;

  static bool is_valid_token(std::string_view text) noexcept;

 private:
  std::string value_;
};

std::vector<ProteinId> make_ids(std::initializer_list<std::string_view> names);

}  // namespace bondtree

template <>
struct std::hash<bondtree::ProteinId> {
  std::size_t operator()(const bondtree::ProteinId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

namespace bondtree {

enum class PropertyKind {
  Structure,
  Sequence,
  Connectivity,
  ClusterIndex,
  Interactivity,
  TaxonomicAgeDiversity,
};

inline constexpr std::size_t kPropertyCount = 6;

// Canonical serialization order.
inline constexpr std::array<PropertyKind, kPropertyCount> kAllPropertyKinds = {
    PropertyKind::Structure,     PropertyKind::Sequence,      PropertyKind::Connectivity,
    PropertyKind::ClusterIndex,  PropertyKind::Interactivity, PropertyKind::TaxonomicAgeDiversity,
};

constexpr std::size_t index_of(PropertyKind kind) noexcept { return static_cast<std::size_t>(kind); }

std::string_view to_string(PropertyKind kind) noexcept;

// Dense row-major n×n grid labelled by an ordered id list.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  // Throws InvalidArgument if values.size() != ids.size()^2, DuplicateProtein
  // on a repeated id.
  LabeledMatrix(std::vector<ProteinId> ids, std::vector<double> values);

  static LabeledMatrix filled(std::vector<ProteinId> ids, double off_diagonal, double diagonal);

  std::size_t size() const noexcept { return ids_.size(); }
  std::span<const ProteinId> ids() const noexcept { return ids_; }
  std::span<const double> values() const noexcept { return values_; }

  std::optional<std::size_t> find(const ProteinId& id) const;
  std::size_t index_of(const ProteinId& id) const;  // throws UnknownProtein
  bool contains(const ProteinId& id) const { return index_.contains(id); }

  double at(std::size_t row, std::size_t col) const { return values_[row * ids_.size() + col]; }
  double& at(std::size_t row, std::size_t col) { return values_[row * ids_.size() + col]; }
  double at(const ProteinId& row, const ProteinId& col) const { return at(index_of(row), index_of(col)); }

  bool same_ids(const LabeledMatrix& other) const noexcept { return ids_ == other.ids_; }

  // Exact (bitwise-value) equality of ids and cells.
  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.ids_ == b.ids_ && a.values_ == b.values_;
  }

 private:
  std::vector<ProteinId> ids_;
  std::unordered_map<ProteinId, std::size_t> index_;
  std::vector<double> values_;
};

struct ValidationReport;
struct ValidationOptions;
class SimilarityMatrix;
class BondMatrix;

template <typename Matrix>
struct Validated;

Validated<SimilarityMatrix> validate(const SimilarityMatrix& matrix, const ValidationOptions& options);

// Percentage similarities for one property. Values are unchecked until the
// matrix passes validate().
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(PropertyKind kind, LabeledMatrix grid) : kind_(kind), grid_(std::move(grid)) {}

  // Builds from possibly ragged rows; throws ValidationFailed with "shape"
  // errors if the grid is not n×n.
  static SimilarityMatrix from_rows(PropertyKind kind, std::vector<ProteinId> ids,
                                    const std::vector<std::vector<double>>& rows);

  PropertyKind kind() const noexcept { return kind_; }
  const LabeledMatrix& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.size(); }
  std::span<const ProteinId> ids() const noexcept { return grid_.ids(); }
  bool validated() const noexcept { return validated_; }

  // throws UnknownProtein
  double similarity_of(const ProteinId& p, const ProteinId& q) const { return grid_.at(p, q); }

  friend bool operator==(const SimilarityMatrix& a, const SimilarityMatrix& b) {
    return a.kind_ == b.kind_ && a.grid_ == b.grid_;
  }

 private:
  friend Validated<SimilarityMatrix> validate(const SimilarityMatrix&, const ValidationOptions&);

  PropertyKind kind_ = PropertyKind::Structure;
  LabeledMatrix grid_;
  bool validated_ = false;
};

// The six matrices, one per kind, over one shared id list.
class PropertySet {
 public:
  // Throws IdMismatch if a matrix sits in the wrong slot or the id lists
  // differ in content or order.
  explicit PropertySet(std::array<SimilarityMatrix, kPropertyCount> matrices);

  const SimilarityMatrix& operator[](PropertyKind kind) const { return matrices_[index_of(kind)]; }
  const std::array<SimilarityMatrix, kPropertyCount>& matrices() const noexcept { return matrices_; }
  std::span<const ProteinId> ids() const noexcept { return matrices_[0].ids(); }
  std::size_t size() const noexcept { return matrices_[0].size(); }
  bool contains(const ProteinId& id) const { return matrices_[0].grid().contains(id); }
  bool validated() const noexcept;

  friend bool operator==(const PropertySet&, const PropertySet&) = default;

 private:
  std::array<SimilarityMatrix, kPropertyCount> matrices_;
};

// Aggregate pairwise bond factors, range [0, 6], diagonal 6.
class BondMatrix {
 public:
  BondMatrix() = default;
  explicit BondMatrix(LabeledMatrix grid) : grid_(std::move(grid)) {}

  const LabeledMatrix& grid() const noexcept { return grid_; }
  LabeledMatrix& grid() noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.size(); }
  std::span<const ProteinId> ids() const noexcept { return grid_.ids(); }

  double bond(const ProteinId& p, const ProteinId& q) const { return grid_.at(p, q); }

  friend bool operator==(const BondMatrix&, const BondMatrix&) = default;

 private:
  LabeledMatrix grid_;
};

}  // namespace bondtree
