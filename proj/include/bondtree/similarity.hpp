#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bondtree/core.hpp"
#include "bondtree/errors.hpp"

namespace bondtree {

// One hard-rule violation. row/column are 0-based indices into the grid;
// the ids are filled whenever the index is in range.
struct CellIssue {
  std::size_t row = 0;
  std::size_t column = 0;
  std::string row_id;
  std::string column_id;
  std::string rule;  // "range", "diagonal", "asymmetry", "shape"
  double value = 0;  // offending value; |v_ij - v_ji| for asymmetry; cell count for shape
  std::string detail;

  friend bool operator==(const CellIssue&, const CellIssue&) = default;
};

struct AsymmetryWarning {
  std::size_t row = 0;
  std::size_t column = 0;
  std::string row_id;
  std::string column_id;
  double delta = 0;

  friend bool operator==(const AsymmetryWarning&, const AsymmetryWarning&) = default;
};

struct ValidationReport {
  std::string subject;
  std::vector<CellIssue> errors;
  std::vector<AsymmetryWarning> warnings;  // repaired asymmetries

  bool ok() const noexcept { return errors.empty(); }
};

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct ValidationOptions {
  bool symmetrize = false;
  // Largest |v_ij - v_ji| repaired to the mean when symmetrize is set.
  double tolerance = 1.0;
};

template <typename Matrix>
struct Validated {
  Matrix matrix;
  ValidationReport report;
};

// Checks range [0, 100], diagonal 100 and symmetry. Throws ValidationFailed
// carrying the report on any hard error.
Validated<SimilarityMatrix> validate(const SimilarityMatrix& matrix, const ValidationOptions& options = {});

// Same rules with range [0, 6] and diagonal 6.
Validated<BondMatrix> validate(const BondMatrix& matrix, const ValidationOptions& options = {});

// Collects the report without throwing (used for diagnostics over whole
// bundles).
ValidationReport check(const SimilarityMatrix& matrix, const ValidationOptions& options = {});
ValidationReport check(const BondMatrix& matrix, const ValidationOptions& options = {});

// similarity / 100. Throws UnvalidatedMatrix if the matrix skipped
// validation and the value is outside [0, 100].
double property_probability(const SimilarityMatrix& matrix, const ProteinId& p, const ProteinId& q);

// Sum of the six property probabilities, in [0, 6]. Computed as the sum of
// the percentages divided once by 100, so integer percentages give the
// correctly rounded decimal (265 / 100 == 2.65).
double bond_factor(const PropertySet& properties, const ProteinId& p, const ProteinId& q);

BondMatrix bond_matrix(const PropertySet& properties);

// Unordered protein pair.
struct CellPair {
  ProteinId first;
  ProteinId second;

  bool matches(const ProteinId& a, const ProteinId& b) const {
    return (first == a && second == b) || (first == b && second == a);
  }
  friend bool operator==(const CellPair&, const CellPair&) = default;
};

struct ReconcileCell {
  ProteinId p;
  ProteinId q;
  double recomputed = 0;
  double reference = 0;
  double delta = 0;  // reference - recomputed
};

struct ReconcileReport {
  std::vector<ReconcileCell> cells;  // cells with |delta| > kDecimalEpsilon
  double max_delta = 0;
  std::size_t compared = 0;
  std::size_t excluded = 0;
  double tolerance = 0;

  bool within_tolerance() const noexcept { return max_delta <= tolerance; }
};

struct ReconcileOptions {
  double tolerance = 0.005;
  std::vector<CellPair> excluded;
};

// Diffs the lower triangle (diagonal included) of two bond matrices over the
// same id set; ids may be ordered differently. Throws IdMismatch.
ReconcileReport reconcile(const BondMatrix& recomputed, const BondMatrix& reference,
                          const ReconcileOptions& options = {});

ReconcileReport reconcile(const PropertySet& properties, const BondMatrix& reference,
                          const ReconcileOptions& options = {});

}  // namespace bondtree
