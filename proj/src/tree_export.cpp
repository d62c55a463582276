#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "bondtree/dataio.hpp"
#include "bondtree/errors.hpp"
#include "bondtree/reports.hpp"

namespace bondtree {
namespace {

using ordered_json = nlohmann::ordered_json;

bool plain_dot_id(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string dot_id(const ProteinId& id) {
  const auto& s = id.str();
  if (plain_dot_id(s)) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

bool newick_safe(const std::string& s) {
  return s.find_first_of("()[]:;,'") == std::string::npos;
}

void append_newick(const ClassificationTree& tree, const ProteinId& id, std::string& out) {
  if (!newick_safe(id.str())) throw InvalidArgument("protein id '" + id.str() + "' is not Newick-safe");
  const auto children = tree.children_of(id);
  if (!children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i > 0) out += ',';
      append_newick(tree, children[i], out);
    }
    out += ')';
  }
  out += id.str();
}

std::string export_json(const ClassificationTree& tree, std::span<const InsertionTrace> traces) {
  ordered_json j;
  j["root"] = tree.root() ? ordered_json(tree.root()->str()) : ordered_json(nullptr);
  j["nodes"] = ordered_json::array();
  for (const auto& id : tree.insertion_order()) {
    ordered_json node;
    node["id"] = id.str();
    if (auto parent = tree.parent_of(id)) node["parent"] = parent->str();
    node["children"] = ordered_json::array();
    for (const auto& c : tree.children_of(id)) node["children"].push_back(c.str());
    j["nodes"].push_back(std::move(node));
  }
  if (!traces.empty()) {
    j["traces"] = ordered_json::array();
    for (const auto& t : traces) j["traces"].push_back(to_json(t));
  }
  return j.dump(2) + "\n";
}

std::string export_dot(const ClassificationTree& tree) {
  std::string out = "digraph bondtree {\n";
  for (const auto& id : tree.insertion_order()) out += "  " + dot_id(id) + ";\n";
  for (const auto& id : tree.insertion_order()) {
    if (auto parent = tree.parent_of(id)) out += "  " + dot_id(*parent) + " -> " + dot_id(id) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string export_tree(const ClassificationTree& tree, TreeFormat format, std::span<const InsertionTrace> traces) {
  switch (format) {
    case TreeFormat::Json: return export_json(tree, traces);
    case TreeFormat::Dot: return export_dot(tree);
    case TreeFormat::Newick: {
      if (tree.empty()) throw EmptyTree();
      std::string out;
      append_newick(tree, *tree.root(), out);
      return out + ";";
    }
  }
  throw InvalidArgument("unknown tree format");
}

ClassificationTree parse_tree_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("tree JSON: ") + e.what());
  }

  ClassificationTree tree;
  try {
    const auto& nodes = j.at("nodes");
    if (j.at("root").is_null()) {
      if (!nodes.empty()) throw FormatError("tree JSON: null root with non-empty node list");
      return tree;
    }
    const ProteinId root(j.at("root").get<std::string>());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto& node = nodes[k];
      ProteinId id(node.at("id").get<std::string>());
      if (k == 0) {
        if (id != root || node.contains("parent")) throw FormatError("tree JSON: first node must be the root");
        tree.set_root(std::move(id));
        continue;
      }
      if (!node.contains("parent")) throw FormatError("tree JSON: node '" + id.str() + "' has no parent");
      const ProteinId parent(node.at("parent").get<std::string>());
      if (!tree.contains(parent)) {
        throw FormatError("tree JSON: node '" + id.str() + "' listed before its parent '" + parent.str() + "'");
      }
      tree.attach(std::move(id), parent);
    }
    for (const auto& node : nodes) {
      const ProteinId id(node.at("id").get<std::string>());
      const auto listed = node.at("children").get<std::vector<std::string>>();
      const auto actual = tree.children_of(id);
      const bool same = std::equal(listed.begin(), listed.end(), actual.begin(), actual.end(),
                                   [](const std::string& a, const ProteinId& b) { return a == b.str(); });
      if (!same) throw FormatError("tree JSON: children of '" + id.str() + "' disagree with parent links");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("tree JSON: ") + e.what());
  } catch (const DuplicateProtein& e) {
    throw FormatError(std::string("tree JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("tree JSON: ") + e.what());
  }
  return tree;
}

}  // namespace bondtree
