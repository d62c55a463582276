#include "bondtree/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace bondtree {
namespace {

std::string id_at(const LabeledMatrix& grid, std::size_t i) { return i < grid.size() ? grid.ids()[i].str() : ""; }

// Shared rule set for percentage and bond grids. Repairs asymmetries in
// `grid` when allowed.
ValidationReport check_grid(LabeledMatrix& grid, std::string subject, double max_value, double diagonal,
                            const ValidationOptions& options) {
  ValidationReport report;
  report.subject = std::move(subject);
  const std::size_t n = grid.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = grid.at(i, j);
      if (std::isnan(v) || v < 0.0 || v > max_value) {
        report.errors.push_back({i, j, id_at(grid, i), id_at(grid, j), "range", v,
                                 "value outside [0, " + std::to_string(static_cast<int>(max_value)) + "]"});
      } else if (i == j && std::abs(v - diagonal) > kDecimalEpsilon) {
        report.errors.push_back({i, j, id_at(grid, i), id_at(grid, j), "diagonal", v,
                                 "diagonal must be " + std::to_string(static_cast<int>(diagonal))});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = grid.at(i, j);
      const double b = grid.at(j, i);
      if (std::isnan(a) || std::isnan(b)) continue;
      const double delta = std::abs(a - b);
      if (delta <= kDecimalEpsilon) continue;
      if (options.symmetrize && delta <= options.tolerance + kDecimalEpsilon) {
        const double mean = (a + b) / 2.0;
        grid.at(i, j) = mean;
        grid.at(j, i) = mean;
        report.warnings.push_back({i, j, id_at(grid, i), id_at(grid, j), delta});
      } else {
        report.errors.push_back({i, j, id_at(grid, i), id_at(grid, j), "asymmetry", delta,
                                 options.symmetrize ? "asymmetry beyond tolerance" : "matrix is not symmetric"});
      }
    }
  }
  return report;
}

}  // namespace

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error([&] {
        std::string msg = report.subject + ": " + std::to_string(report.errors.size()) + " validation error(s)";
        if (!report.errors.empty()) {
          const auto& e = report.errors.front();
          msg += "; first: " + e.rule + " at (" + (e.row_id.empty() ? std::to_string(e.row) : e.row_id) + ", " +
                 (e.column_id.empty() ? std::to_string(e.column) : e.column_id) + ")";
        }
        return msg;
      }()),
      report_(std::move(report)) {}

ValidationReport check(const SimilarityMatrix& matrix, const ValidationOptions& options) {
  LabeledMatrix grid = matrix.grid();
  return check_grid(grid, std::string(to_string(matrix.kind())), kFullSimilarity, kFullSimilarity, options);
}

ValidationReport check(const BondMatrix& matrix, const ValidationOptions& options) {
  LabeledMatrix grid = matrix.grid();
  return check_grid(grid, "bond", kMaxBond, kMaxBond, options);
}

Validated<SimilarityMatrix> validate(const SimilarityMatrix& matrix, const ValidationOptions& options) {
  LabeledMatrix grid = matrix.grid();
  ValidationReport report =
      check_grid(grid, std::string(to_string(matrix.kind())), kFullSimilarity, kFullSimilarity, options);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  SimilarityMatrix repaired(matrix.kind(), std::move(grid));
  repaired.validated_ = true;
  return {std::move(repaired), std::move(report)};
}

Validated<BondMatrix> validate(const BondMatrix& matrix, const ValidationOptions& options) {
  LabeledMatrix grid = matrix.grid();
  ValidationReport report = check_grid(grid, "bond", kMaxBond, kMaxBond, options);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  return {BondMatrix(std::move(grid)), std::move(report)};
}

double property_probability(const SimilarityMatrix& matrix, const ProteinId& p, const ProteinId& q) {
  const double v = matrix.similarity_of(p, q);
  if (!matrix.validated() && !(v >= 0.0 && v <= kFullSimilarity)) {
    throw UnvalidatedMatrix(std::string(to_string(matrix.kind())) + " similarity (" + p.str() + ", " + q.str() +
                            ") = " + std::to_string(v) + " read from an unvalidated matrix");
  }
  return v / kFullSimilarity;
}

double bond_factor(const PropertySet& properties, const ProteinId& p, const ProteinId& q) {
  const std::size_t i = properties[PropertyKind::Structure].grid().index_of(p);
  const std::size_t j = properties[PropertyKind::Structure].grid().index_of(q);
  double percent_sum = 0.0;
  for (const auto& m : properties.matrices()) {
    const double v = m.grid().at(i, j);
    if (!m.validated() && !(v >= 0.0 && v <= kFullSimilarity)) {
      // Delegate for the diagnostic.
      property_probability(m, p, q);
    }
    percent_sum += v;
  }
  return percent_sum / kFullSimilarity;
}

BondMatrix bond_matrix(const PropertySet& properties) {
  const auto ids = properties.ids();
  const std::size_t n = ids.size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = bond_factor(properties, ids[i], ids[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const double b = bond_factor(properties, ids[i], ids[j]);
      values[i * n + j] = b;
      values[j * n + i] = b;
    }
  }
  return BondMatrix(LabeledMatrix(std::vector<ProteinId>(ids.begin(), ids.end()), std::move(values)));
}

ReconcileReport reconcile(const BondMatrix& recomputed, const BondMatrix& reference, const ReconcileOptions& options) {
  if (recomputed.size() != reference.size()) {
    throw IdMismatch("reconcile: " + std::to_string(recomputed.size()) + " proteins vs reference " +
                     std::to_string(reference.size()));
  }
  for (const auto& id : recomputed.ids()) {
    if (!reference.grid().contains(id)) throw IdMismatch("reconcile: '" + id.str() + "' missing from reference");
  }

  ReconcileReport report;
  report.tolerance = options.tolerance;
  const auto ids = recomputed.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const bool skip = std::any_of(options.excluded.begin(), options.excluded.end(),
                                    [&](const CellPair& c) { return c.matches(ids[i], ids[j]); });
      if (skip) {
        ++report.excluded;
        continue;
      }
      ++report.compared;
      const double mine = recomputed.grid().at(i, j);
      const double theirs = reference.bond(ids[i], ids[j]);
      const double delta = theirs - mine;
      report.max_delta = std::max(report.max_delta, std::abs(delta));
      if (std::abs(delta) > kDecimalEpsilon) report.cells.push_back({ids[i], ids[j], mine, theirs, delta});
    }
  }
  return report;
}

ReconcileReport reconcile(const PropertySet& properties, const BondMatrix& reference, const ReconcileOptions& options) {
  return reconcile(bond_matrix(properties), reference, options);
}

}  // namespace bondtree
