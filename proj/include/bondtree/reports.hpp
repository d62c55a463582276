#pragma once

#include <nlohmann/json.hpp>

#include "bondtree/oracle.hpp"
#include "bondtree/similarity.hpp"
#include "bondtree/synth.hpp"
#include "bondtree/tree.hpp"
#include "bondtree/tree_builder.hpp"

namespace bondtree {

// JSON renderings of reports and traces. Key order is fixed, so equal
// reports dump to identical text.

nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const ReconcileReport& report);
nlohmann::ordered_json to_json(const InsertionTrace& trace);
nlohmann::ordered_json to_json(const BuildStats& stats);
nlohmann::ordered_json to_json(const OrderSensitivityReport& report);
nlohmann::ordered_json to_json(const ComplexityProbeReport& report);
nlohmann::ordered_json to_json(const CoverageResult& result);
nlohmann::ordered_json to_json(const EquivalenceResult& result);

}  // namespace bondtree
