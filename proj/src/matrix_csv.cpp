#include <charconv>
#include <cmath>
#include <unordered_set>

#include "bondtree/dataio.hpp"
#include "bondtree/errors.hpp"

namespace bondtree {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank, non-comment lines with their 1-based physical numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t.front() != '#') lines.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

}  // namespace

LabeledMatrix parse_labeled_matrix(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "no header line", source);

  const auto header = split_fields(lines[0].text);
  if (header[0] != "id") throw ParseError(lines[0].number, 1, "header must start with 'id'", source);
  std::vector<ProteinId> ids;
  std::unordered_set<std::string_view> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (!ProteinId::is_valid_token(header[c])) {
      throw ParseError(lines[0].number, c + 1, "invalid protein id '" + std::string(header[c]) + "'", source);
    }
    if (!seen.insert(header[c]).second) {
      throw ParseError(lines[0].number, c + 1, "duplicate protein id '" + std::string(header[c]) + "'", source);
    }
    ids.emplace_back(std::string(header[c]));
  }

  const std::size_t n = ids.size();
  if (lines.size() - 1 < n) {
    const std::size_t next = lines.back().number + 1;
    throw ParseError(next, 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1),
                     source);
  }
  if (lines.size() - 1 > n) {
    throw ParseError(lines[n + 1].number, 1, "unexpected row beyond the " + std::to_string(n) + " declared proteins",
                     source);
  }

  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = lines[r + 1];
    const auto fields = split_fields(line.text);
    if (fields[0] != ids[r].str()) throw HeaderMismatch(line.number, ids[r].str(), std::string(fields[0]), source);
    if (fields.size() < n + 1) {
      throw ParseError(line.number, fields.size() + 1,
                       "missing cell for column '" + ids[fields.size() - 1].str() + "'", source);
    }
    if (fields.size() > n + 1) throw ParseError(line.number, n + 2, "more cells than columns", source);
    for (std::size_t c = 1; c <= n; ++c) {
      const auto field = fields[c];
      if (field.empty()) {
        throw ParseError(line.number, c + 1, "missing cell for column '" + ids[c - 1].str() + "'", source);
      }
      double v = 0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || end != field.data() + field.size() || !std::isfinite(v)) {
        throw ParseError(line.number, c + 1, "not a decimal: '" + std::string(field) + "'", source);
      }
      values.push_back(v);
    }
  }
  return LabeledMatrix(std::move(ids), std::move(values));
}

SimilarityMatrix parse_matrix(std::string_view text, PropertyKind kind, const std::string& source) {
  return SimilarityMatrix(kind, parse_labeled_matrix(text, source));
}

BondMatrix parse_bond_matrix(std::string_view text, const std::string& source) {
  return BondMatrix(parse_labeled_matrix(text, source));
}

std::string format_decimal(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string write_matrix(const LabeledMatrix& matrix) {
  std::string out = "id";
  for (const auto& id : matrix.ids()) out += "," + id.str();
  out += "\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += matrix.ids()[i].str();
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out += ",";
      out += format_decimal(matrix.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace bondtree
