#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bondtree/dataio.hpp"
#include "bondtree/errors.hpp"

namespace bondtree {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

void check_ids(const Manifest& manifest, std::span<const ProteinId> ids, const std::string& file) {
  if (!std::equal(ids.begin(), ids.end(), manifest.proteins.begin(), manifest.proteins.end())) {
    throw ManifestError(file + ": header ids do not match the manifest protein list");
  }
}

std::string require_file(const BundleReader& read, const std::string& name, const std::string& what) {
  auto text = read(name);
  if (!text) throw ManifestError("bundle is missing " + name + " (" + what + ")");
  return *std::move(text);
}

struct ParsedBundle {
  Manifest manifest;
  std::optional<BondMatrix> bond;
  std::optional<std::array<SimilarityMatrix, kPropertyCount>> properties;
};

ParsedBundle parse_bundle(const BundleReader& read) {
  auto manifest_text = read(kManifestFile);
  if (!manifest_text) throw ManifestError("bundle has no " + std::string(kManifestFile));

  ParsedBundle parsed{parse_manifest(*manifest_text), std::nullopt, std::nullopt};
  const auto& manifest = parsed.manifest;

  if (manifest.has_properties) {
    std::array<SimilarityMatrix, kPropertyCount> matrices;
    for (auto kind : kAllPropertyKinds) {
      const auto name = property_file_name(kind);
      matrices[index_of(kind)] =
          parse_matrix(require_file(read, name, "property " + std::string(to_string(kind))), kind, name);
      check_ids(manifest, matrices[index_of(kind)].ids(), name);
    }
    parsed.properties = std::move(matrices);
  }
  if (manifest.has_bond) {
    const std::string name(kBondFile);
    parsed.bond = parse_bond_matrix(require_file(read, name, "bond matrix"), name);
    check_ids(manifest, parsed.bond->ids(), name);
  }
  return parsed;
}

}  // namespace

BundleReader directory_reader(const std::filesystem::path& dir) {
  return [dir](std::string_view name) { return read_text_file(dir / std::string(name)); };
}

std::string property_file_name(PropertyKind kind) { return std::string(to_string(kind)) + ".csv"; }

BondSource DatasetBundle::source() const {
  if (bond) return BondSource::from_matrix(*bond);
  if (properties) return BondSource::from_properties(*properties);
  throw ManifestError("bundle '" + manifest.dataset_id + "' holds neither a bond matrix nor property matrices");
}

Manifest parse_manifest(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }

  Manifest m;
  try {
    if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
    if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion) {
      throw ManifestError("unsupported manifest format_version " + j.at("format_version").dump());
    }
    if (!j.contains("dataset_id")) throw ManifestError("manifest lacks dataset_id");
    m.dataset_id = j.at("dataset_id").get<std::string>();
    if (!j.contains("proteins")) throw ManifestError("manifest lacks proteins");
    for (const auto& p : j.at("proteins")) {
      const auto name = p.get<std::string>();
      if (!ProteinId::is_valid_token(name)) throw ManifestError("manifest protein id '" + name + "' is invalid");
      for (const auto& existing : m.proteins) {
        if (existing.str() == name) throw ManifestError("manifest lists protein '" + name + "' twice");
      }
      m.proteins.emplace_back(name);
    }
    if (!j.contains("contents")) throw ManifestError("manifest lacks contents");
    for (const auto& c : j.at("contents")) {
      const auto kind = c.get<std::string>();
      if (kind == "bond") {
        m.has_bond = true;
      } else if (kind == "properties") {
        m.has_properties = true;
      } else {
        throw ManifestError("unknown manifest content '" + kind + "' (expected bond or properties)");
      }
    }
    if (!m.has_bond && !m.has_properties) throw ManifestError("manifest contents is empty");
    if (j.contains("provenance")) m.provenance = j.at("provenance").get<std::vector<std::string>>();
    if (j.contains("excluded_cells")) {
      for (const auto& cell : j.at("excluded_cells")) {
        const auto pair = cell.get<std::vector<std::string>>();
        if (pair.size() != 2) throw ManifestError("excluded cell must be a pair of ids, got " + cell.dump());
        for (const auto& id : pair) {
          if (std::none_of(m.proteins.begin(), m.proteins.end(), [&](const ProteinId& p) { return p.str() == id; })) {
            throw ManifestError("excluded cell names unknown protein '" + id + "'");
          }
        }
        m.excluded_cells.push_back({ProteinId(pair[0]), ProteinId(pair[1])});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string write_manifest(const Manifest& manifest) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["dataset_id"] = manifest.dataset_id;
  j["proteins"] = ordered_json::array();
  for (const auto& p : manifest.proteins) j["proteins"].push_back(p.str());
  j["contents"] = ordered_json::array();
  if (manifest.has_bond) j["contents"].push_back("bond");
  if (manifest.has_properties) j["contents"].push_back("properties");
  j["provenance"] = manifest.provenance;
  j["excluded_cells"] = ordered_json::array();
  for (const auto& c : manifest.excluded_cells) j["excluded_cells"].push_back({c.first.str(), c.second.str()});
  return j.dump(2) + "\n";
}

DatasetBundle load_bundle(const BundleReader& read, const ValidationOptions& options) {
  auto parsed = parse_bundle(read);
  DatasetBundle bundle{std::move(parsed.manifest), std::nullopt, std::nullopt};
  if (parsed.properties) {
    std::array<SimilarityMatrix, kPropertyCount> checked;
    for (std::size_t k = 0; k < kPropertyCount; ++k) checked[k] = validate((*parsed.properties)[k], options).matrix;
    bundle.properties.emplace(std::move(checked));
  }
  if (parsed.bond) bundle.bond = validate(*parsed.bond, options).matrix;
  return bundle;
}

DatasetBundle load_bundle(const std::filesystem::path& dir, const ValidationOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw ManifestError("bundle directory '" + dir.string() + "' not found");
  return load_bundle(directory_reader(dir), options);
}

bool BundleValidation::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const ValidationReport& r) { return r.ok(); });
}

BundleValidation validate_bundle(const std::filesystem::path& dir, const ValidationOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw ManifestError("bundle directory '" + dir.string() + "' not found");
  return validate_bundle(directory_reader(dir), options);
}

BundleValidation validate_bundle(const BundleReader& read, const ValidationOptions& options) {
  const auto parsed = parse_bundle(read);
  BundleValidation result;
  if (parsed.properties) {
    for (const auto& m : *parsed.properties) result.reports.push_back(check(m, options));
  }
  if (parsed.bond) result.reports.push_back(check(*parsed.bond, options));
  return result;
}

void save_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

  Manifest manifest = bundle.manifest;
  manifest.has_bond = bundle.bond.has_value();
  manifest.has_properties = bundle.properties.has_value();
  write_text_file(dir / kManifestFile, write_manifest(manifest));
  if (bundle.properties) {
    for (auto kind : kAllPropertyKinds) {
      write_text_file(dir / property_file_name(kind), write_matrix((*bundle.properties)[kind]));
    }
  }
  if (bundle.bond) write_text_file(dir / kBondFile, write_matrix(*bundle.bond));
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::optional<std::string> read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bondtree
