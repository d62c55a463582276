#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bondtree/core.hpp"
#include "bondtree/bond_source.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"

namespace bondtree::testing {

inline LabeledMatrix dense(std::vector<ProteinId> ids, const std::vector<std::vector<double>>& rows) {
  std::vector<double> values;
  for (const auto& r : rows) values.insert(values.end(), r.begin(), r.end());
  return LabeledMatrix(std::move(ids), std::move(values));
}

inline BondSource bond_source(std::vector<ProteinId> ids, const std::vector<std::vector<double>>& rows) {
  return BondSource::from_matrix(BondMatrix(dense(std::move(ids), rows)));
}

// Hub p1 bonded 6.0 to everyone, all other off-diagonal bonds 0.
inline BondSource star_source(std::size_t n) {
  auto ids = synthetic_ids(n);
  auto grid = LabeledMatrix::filled(ids, 0.0, kMaxBond);
  for (std::size_t i = 1; i < n; ++i) grid.at(0, i) = grid.at(i, 0) = kMaxBond;
  return BondSource::from_matrix(BondMatrix(std::move(grid)));
}

// Every off-diagonal bond equal to `value`.
inline BondSource flat_source(std::size_t n, double value) {
  return BondSource::from_matrix(BondMatrix(LabeledMatrix::filled(synthetic_ids(n), value, kMaxBond)));
}

// Six copies of one percentage grid.
inline PropertySet uniform_properties(const std::vector<ProteinId>& ids, const std::vector<std::vector<double>>& rows) {
  std::array<SimilarityMatrix, kPropertyCount> m;
  for (auto kind : kAllPropertyKinds) m[index_of(kind)] = SimilarityMatrix(kind, dense(ids, rows));
  return PropertySet(std::move(m));
}

inline std::map<std::string, std::string> golden_parents() {
  std::ifstream in(std::filesystem::path(BONDTREE_GOLDEN_DIR) / "paper_parents.txt");
  std::map<std::string, std::string> parents;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string child, parent;
    fields >> child >> parent;
    parents[child] = parent;
  }
  return parents;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("bondtree-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace bondtree::testing
