#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bondtree/bond_source.hpp"
#include "bondtree/core.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/tree.hpp"

namespace bondtree {

// ---------------------------------------------------------------------------
// Matrix CSV
//
//   # comment lines and blank lines are ignored
//   id,p1,p2
//   p1,100,40
//   p2,40,100
//
// Row labels must repeat the column header in the same order. Values are
// plain decimals. Parsed matrices are not validated.
// ---------------------------------------------------------------------------

LabeledMatrix parse_labeled_matrix(std::string_view text, const std::string& source = "");
SimilarityMatrix parse_matrix(std::string_view text, PropertyKind kind, const std::string& source = "");
BondMatrix parse_bond_matrix(std::string_view text, const std::string& source = "");

// Shortest decimal that parses back to the same double.
std::string format_decimal(double value);

std::string write_matrix(const LabeledMatrix& matrix);
inline std::string write_matrix(const SimilarityMatrix& matrix) { return write_matrix(matrix.grid()); }
inline std::string write_matrix(const BondMatrix& matrix) { return write_matrix(matrix.grid()); }

// ---------------------------------------------------------------------------
// Dataset bundles
//
// A directory holding manifest.json plus bond.csv, the six property files
// (structure.csv, sequence.csv, connectivity.csv, cluster_index.csv,
// interactivity.csv, taxonomic.csv), or both.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kBondFile = "bond.csv";

// "structure.csv", …
std::string property_file_name(PropertyKind kind);

struct Manifest {
  std::string dataset_id;
  std::vector<ProteinId> proteins;
  bool has_bond = false;
  bool has_properties = false;
  std::vector<std::string> provenance;
  std::vector<CellPair> excluded_cells;
};

struct DatasetBundle {
  Manifest manifest;
  std::optional<BondMatrix> bond;
  std::optional<PropertySet> properties;

  // Prefers the bond matrix when both are present.
  BondSource source() const;
};

// Parses manifest.json text. Throws ManifestError.
Manifest parse_manifest(std::string_view text);
std::string write_manifest(const Manifest& manifest);

// Reads and validates every matrix the manifest lists. Throws ManifestError
// (missing/ill-formed manifest or file, id lists that disagree with the
// manifest), ParseError, HeaderMismatch, ValidationFailed.
DatasetBundle load_bundle(const std::filesystem::path& dir, const ValidationOptions& options = {});

// Text-level variant: `read` returns a file's contents or nullopt if absent.
using BundleReader = std::function<std::optional<std::string>(std::string_view name)>;
DatasetBundle load_bundle(const BundleReader& read, const ValidationOptions& options = {});

struct BundleValidation {
  std::vector<ValidationReport> reports;  // one per matrix, canonical order, bond last
  bool ok() const;
};

// Like load_bundle but collects every matrix's report instead of stopping at
// the first invalid one. Parse and manifest errors still throw.
BundleValidation validate_bundle(const std::filesystem::path& dir, const ValidationOptions& options = {});
BundleValidation validate_bundle(const BundleReader& read, const ValidationOptions& options = {});

// Reads files from a bundle directory.
BundleReader directory_reader(const std::filesystem::path& dir);

// Creates `dir` if needed. Throws IoError.
void save_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir);

// Writes `text` to `path`; throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::optional<std::string> read_text_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Tree export
// ---------------------------------------------------------------------------

enum class TreeFormat { Json, Dot, Newick };

// Json: {"root": id, "nodes": [{"id", "parent", "children": [...]}], "traces": [...]}
//   nodes in insertion order, "parent" omitted for the root, "traces" only
//   when traces are given.
// Dot: one node statement per protein then one edge per parent/child pair,
//   both in insertion order.
// Newick: children in insertion order, internal nodes labelled, no branch
//   lengths. Throws EmptyTree on an empty tree and InvalidArgument on ids
//   that are not Newick-safe.
std::string export_tree(const ClassificationTree& tree, TreeFormat format,
                        std::span<const InsertionTrace> traces = {});

// Inverse of the Json export (traces ignored). Throws FormatError.
ClassificationTree parse_tree_json(std::string_view text);

}  // namespace bondtree
