#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bondtree/dataio.hpp"
#include "bondtree/oracle.hpp"
#include "bondtree/paper_dataset.hpp"
#include "bondtree/reports.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"
#include "bondtree/tree_builder.hpp"

namespace bondtree::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ResolvedBundle {
  BundleReader reader;
  std::string label;
};

ResolvedBundle resolve(const std::string& arg) {
  if (arg == kPaperBundle) return {BundleReader(paper_dataset_file), arg};
  if (!fs::exists(arg)) throw UsageError("bundle path '" + arg + "' does not exist");
  if (!fs::is_directory(arg)) throw UsageError("bundle path '" + arg + "' is not a directory");
  return {directory_reader(arg), arg};
}

DatasetBundle load(const std::string& arg, const ValidationOptions& options = {}) {
  return load_bundle(resolve(arg).reader, options);
}

void print_validation_diagnostics(const ValidationReport& report, std::ostream& err) {
  for (const auto& e : report.errors) {
    err << report.subject << ": " << e.rule << " violation at cell (" << (e.row_id.empty() ? "#" + std::to_string(e.row) : e.row_id)
        << ", " << (e.column_id.empty() ? "#" + std::to_string(e.column) : e.column_id)
        << "): value " << format_decimal(e.value);
    if (!e.detail.empty()) err << " (" << e.detail << ")";
    err << "\n";
  }
}

// "given" → manifest order; an existing file → ids separated by commas or
// whitespace; otherwise a comma-separated id list.
std::vector<ProteinId> resolve_order(const std::string& spec, const Manifest& manifest, const BondSource& source) {
  if (spec.empty() || spec == "given") return manifest.proteins;

  std::string text = spec;
  if (fs::is_regular_file(spec)) {
    auto contents = read_text_file(spec);
    if (!contents) throw UsageError("cannot read order file '" + spec + "'");
    text = *contents;
  }
  std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }, ' ');
  std::istringstream in(text);
  std::vector<ProteinId> order;
  std::unordered_set<std::string> seen;
  for (std::string token; in >> token;) {
    if (!ProteinId::is_valid_token(token)) throw UsageError("invalid protein id '" + token + "' in --order");
    if (!source.contains(ProteinId(token))) throw UsageError("--order names unknown protein '" + token + "'");
    if (!seen.insert(token).second) throw UsageError("--order lists protein '" + token + "' twice");
    order.emplace_back(token);
  }
  if (order.empty()) throw UsageError("--order is empty");
  return order;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// --- subcommands -----------------------------------------------------------

int cmd_validate(const std::string& bundle, const ValidationOptions& options, std::ostream& out, std::ostream& err) {
  const auto resolved = resolve(bundle);
  const auto result = validate_bundle(resolved.reader, options);
  nlohmann::ordered_json j;
  j["bundle"] = resolved.label;
  j["ok"] = result.ok();
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    j["reports"].push_back(to_json(r));
    print_validation_diagnostics(r, err);
  }
  out << dump(j);
  return result.ok() ? kSuccess : kDataFailure;
}

int cmd_bond(const std::string& bundle_arg, const std::string& out_path, std::ostream& out) {
  const auto resolved = resolve(bundle_arg);
  const auto bundle = load_bundle(resolved.reader);
  std::string text;
  if (bundle.properties) {
    text = write_matrix(bond_matrix(*bundle.properties));
  } else {
    text = *resolved.reader(kBondFile);
  }
  if (out_path.empty()) {
    out << text;
  } else {
    try {
      write_text_file(out_path, text);
    } catch (const IoError& e) {
      throw UsageError(e.what());
    }
  }
  return kSuccess;
}

int cmd_build(const std::string& bundle_arg, const std::string& order_spec, const std::string& format_name, bool trace,
              std::ostream& out, std::ostream& err) {
  const auto bundle = load(bundle_arg);
  const auto source = bundle.source();
  const auto order = resolve_order(order_spec, bundle.manifest, source);

  TreeFormat format = TreeFormat::Json;
  if (format_name == "dot") format = TreeFormat::Dot;
  if (format_name == "newick") format = TreeFormat::Newick;
  if (trace && format != TreeFormat::Json) err << "note: --trace is only rendered in json output\n";

  const auto result = build(order, source);
  const auto coverage = coverage_check(result.tree, order);
  if (!coverage.passed) {
    err << "invariant breach: " << coverage.missing.size() << " protein(s) missing from the tree\n";
    return kInvariantBreach;
  }
  const auto s = stats(result.tree, result.traces);
  if (!s.worst_case_bound_holds || !s.level_bound_holds) {
    err << "invariant breach: insertion visit bounds violated\n";
    return kInvariantBreach;
  }

  std::string text = export_tree(result.tree, format, trace ? std::span(result.traces) : std::span<const InsertionTrace>{});
  if (format == TreeFormat::Newick) text += "\n";
  out << text;
  return kSuccess;
}

int cmd_perturb(const std::string& bundle_arg, std::size_t permutations, std::uint64_t seed, std::ostream& out) {
  if (permutations == 0) throw UsageError("--permutations must be >= 1");
  const auto bundle = load(bundle_arg);
  const auto report = order_sensitivity(bundle.source(), permutations, seed, bundle.manifest.dataset_id);
  out << dump(to_json(report));
  return kSuccess;
}

int cmd_probe(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (sizes.empty()) throw UsageError("--sizes needs at least one size");
  if (std::find(sizes.begin(), sizes.end(), 0u) != sizes.end()) throw UsageError("--sizes must all be >= 1");
  const auto report = complexity_probe(sizes, seed);
  out << dump(to_json(report));
  if (!report.worst_case_bound_holds || !report.level_bound_holds) {
    err << "invariant breach: visit bounds violated\n";
    return kInvariantBreach;
  }
  return kSuccess;
}

int cmd_synth(const SynthSpec& spec, const std::string& mode_name, const std::string& out_dir, std::ostream& err) {
  DatasetBundle bundle;
  bundle.properties = generate(spec);
  bundle.manifest.dataset_id =
      "synth-" + mode_name + "-n" + std::to_string(spec.n) + "-seed" + std::to_string(spec.seed);
  bundle.manifest.proteins = synthetic_ids(spec.n);
  std::string description = "synthetic " + mode_name + " dataset: n=" + std::to_string(spec.n) +
                            ", seed=" + std::to_string(spec.seed) + ", granularity=" + format_decimal(spec.granularity);
  if (const auto* sf = std::get_if<ScaleFreeMode>(&spec.mode)) {
    description += ", attach_edges=" + std::to_string(sf->attach_edges);
  }
  bundle.manifest.provenance.push_back(description);
  try {
    save_bundle(bundle, out_dir);
  } catch (const IoError& e) {
    throw UsageError(e.what());
  }
  err << "wrote " << spec.n << "-protein bundle to " << out_dir << "\n";
  return kSuccess;
}

int cmd_reconcile(const std::string& bundle_arg, const std::string& reference_arg, double tolerance, std::ostream& out,
                  std::ostream& err) {
  const auto bundle = load(bundle_arg);
  ReconcileOptions options;
  options.tolerance = tolerance;
  options.excluded = bundle.manifest.excluded_cells;

  const BondMatrix recomputed = bundle.properties ? bond_matrix(*bundle.properties) : *bundle.bond;
  BondMatrix reference;
  if (reference_arg.empty()) {
    if (!bundle.bond || !bundle.properties) {
      throw UsageError("reconcile without a reference needs a bundle holding both properties and bond.csv");
    }
    reference = *bundle.bond;
  } else if (reference_arg != kPaperBundle && fs::is_regular_file(reference_arg)) {
    const auto text = read_text_file(reference_arg);
    if (!text) throw UsageError("cannot read reference '" + reference_arg + "'");
    reference = validate(parse_bond_matrix(*text, reference_arg)).matrix;
  } else {
    const auto ref_bundle = load(reference_arg);
    if (!ref_bundle.bond) throw UsageError("reference bundle '" + reference_arg + "' has no bond.csv");
    reference = *ref_bundle.bond;
    for (const auto& c : ref_bundle.manifest.excluded_cells) {
      if (std::find(options.excluded.begin(), options.excluded.end(), c) == options.excluded.end()) {
        options.excluded.push_back(c);
      }
    }
  }

  const auto report = reconcile(recomputed, reference, options);
  out << dump(to_json(report));
  if (!report.within_tolerance()) {
    for (const auto& c : report.cells) {
      if (std::abs(c.delta) > tolerance) {
        err << "cell (" << c.p.str() << ", " << c.q.str() << "): recomputed " << format_decimal(c.recomputed)
            << ", reference " << format_decimal(c.reference) << ", delta " << format_decimal(c.delta) << "\n";
      }
    }
    return kDataFailure;
  }
  return kSuccess;
}

int cmd_export_paper(const std::string& out_dir, std::ostream& err) {
  try {
    save_bundle(paper_dataset(), out_dir);
  } catch (const IoError& e) {
    throw UsageError(e.what());
  }
  err << "wrote reference bundle to " << out_dir << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bond-factor protein classification trees"};
  app.name("bondtree");
  app.require_subcommand(1);

  std::string bundle;
  std::string reference;
  std::string out_path;
  std::string order;
  std::string format = "json";
  std::string mode = "random";
  bool symmetrize = false;
  bool trace = false;
  double tolerance = 1.0;
  double reconcile_tolerance = 0.005;
  std::size_t permutations = 100;
  std::uint64_t seed = 42;
  std::vector<std::size_t> sizes;
  SynthSpec spec;
  std::size_t attach_edges = 2;

  auto* validate_cmd = app.add_subcommand("validate", "Validate every matrix in a bundle");
  validate_cmd->add_option("bundle", bundle, "Bundle directory or @paper")->required();
  validate_cmd->add_flag("--symmetrize", symmetrize, "Repair small asymmetries to the mean");
  validate_cmd->add_option("--tolerance", tolerance, "Largest asymmetry repaired by --symmetrize")
      ->check(CLI::NonNegativeNumber);

  auto* bond_cmd = app.add_subcommand("bond", "Write the aggregate bond matrix as CSV");
  bond_cmd->add_option("bundle", bundle, "Bundle directory or @paper")->required();
  bond_cmd->add_option("--out", out_path, "Output file (default: standard output)");

  auto* build_cmd = app.add_subcommand("build", "Build the classification tree");
  build_cmd->add_option("bundle", bundle, "Bundle directory or @paper")->required();
  build_cmd->add_option("--order", order, "Insertion order: 'given', a file of ids, or comma-separated ids");
  build_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "newick"}));
  build_cmd->add_flag("--trace", trace, "Include insertion traces (json)");

  auto* perturb_cmd = app.add_subcommand("perturb", "Measure insertion-order sensitivity");
  perturb_cmd->add_option("bundle", bundle, "Bundle directory or @paper")->required();
  perturb_cmd->add_option("--permutations", permutations, "Number of shuffled orders");
  perturb_cmd->add_option("--seed", seed, "Shuffle seed");

  auto* probe_cmd = app.add_subcommand("probe", "Record visits per insertion on synthetic data");
  probe_cmd->add_option("--sizes", sizes, "Dataset sizes, comma-separated")->delimiter(',')->required();
  probe_cmd->add_option("--seed", seed, "Generator seed");

  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic property bundle");
  synth_cmd->add_option("--n", spec.n, "Protein count")->required()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", spec.seed, "Generator seed");
  synth_cmd->add_option("--mode", mode, "Generator mode")->check(CLI::IsMember({"random", "scale-free"}));
  synth_cmd->add_option("--attach-edges", attach_edges, "Edges per new node (scale-free)")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--granularity", spec.granularity, "Percentage step")->check(CLI::Range(0.0, 100.0));
  synth_cmd->add_option("--out", out_path, "Bundle directory to write")->required();

  auto* reconcile_cmd = app.add_subcommand("reconcile", "Compare recomputed bond factors with a reference");
  reconcile_cmd->add_option("bundle", bundle, "Bundle directory or @paper")->required();
  reconcile_cmd->add_option("reference", reference, "Reference bundle, @paper, or bond CSV file");
  reconcile_cmd->add_option("--tolerance", reconcile_tolerance, "Largest accepted |delta|")
      ->check(CLI::NonNegativeNumber);

  auto* export_cmd = app.add_subcommand("export-paper", "Write the built-in reference bundle to a directory");
  export_cmd->add_option("--out", out_path, "Bundle directory to write")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(bundle, {symmetrize, tolerance}, out, err);
    if (*bond_cmd) return cmd_bond(bundle, out_path, out);
    if (*build_cmd) return cmd_build(bundle, order, format, trace, out, err);
    if (*perturb_cmd) return cmd_perturb(bundle, permutations, seed, out);
    if (*probe_cmd) return cmd_probe(sizes, seed, out, err);
    if (*synth_cmd) {
      if (mode == "scale-free") {
        spec.mode = ScaleFreeMode{attach_edges};
      } else {
        spec.mode = RandomMode{};
      }
      return cmd_synth(spec, mode, out_path, err);
    }
    if (*reconcile_cmd) return cmd_reconcile(bundle, reference, reconcile_tolerance, out, err);
    if (*export_cmd) return cmd_export_paper(out_path, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ValidationFailed& e) {
    err << "validation failed: " << e.what() << "\n";
    print_validation_diagnostics(e.report(), err);
    return kDataFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kDataFailure;
  } catch (const HeaderMismatch& e) {
    err << "header mismatch: " << e.what() << "\n";
    return kDataFailure;
  } catch (const ManifestError& e) {
    err << "manifest error: " << e.what() << "\n";
    return kDataFailure;
  } catch (const IdMismatch& e) {
    err << "id mismatch: " << e.what() << "\n";
    return kDataFailure;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantBreach;
  }
  return kUsageError;
}

}  // namespace bondtree::cli
