#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bondtree/dataio.hpp"

namespace bondtree {

// The built-in 15-protein reference dataset (p1 … p15): the full reference
// bond table plus the six curated percentage tables. Cells whose property
// sums disagree with the bond table are listed in manifest.excluded_cells.
DatasetBundle paper_dataset();

// Raw embedded file text by bundle file name ("manifest.json", "bond.csv",
// "structure.csv", …); nullopt for unknown names.
std::optional<std::string> paper_dataset_file(std::string_view name);

}  // namespace bondtree
