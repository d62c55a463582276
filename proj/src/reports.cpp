#include "bondtree/reports.hpp"

namespace bondtree {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const ValidationReport& report) {
  ordered_json j;
  j["subject"] = report.subject;
  j["ok"] = report.ok();
  j["errors"] = ordered_json::array();
  for (const auto& e : report.errors) {
    j["errors"].push_back({{"row", e.row},
                           {"column", e.column},
                           {"row_id", e.row_id},
                           {"column_id", e.column_id},
                           {"rule", e.rule},
                           {"value", e.value},
                           {"detail", e.detail}});
  }
  j["warnings"] = ordered_json::array();
  for (const auto& w : report.warnings) {
    j["warnings"].push_back(
        {{"row", w.row}, {"column", w.column}, {"row_id", w.row_id}, {"column_id", w.column_id}, {"delta", w.delta}});
  }
  return j;
}

ordered_json to_json(const ReconcileReport& report) {
  ordered_json j;
  j["compared"] = report.compared;
  j["excluded"] = report.excluded;
  j["tolerance"] = report.tolerance;
  j["max_delta"] = report.max_delta;
  j["within_tolerance"] = report.within_tolerance();
  j["cells"] = ordered_json::array();
  for (const auto& c : report.cells) {
    j["cells"].push_back({{"p", c.p.str()},
                          {"q", c.q.str()},
                          {"recomputed", c.recomputed},
                          {"reference", c.reference},
                          {"delta", c.delta}});
  }
  return j;
}

ordered_json to_json(const InsertionTrace& trace) {
  ordered_json j;
  j["inserted"] = trace.inserted.str();
  j["attached_to"] = trace.attached_to.str();
  j["nodes_visited"] = trace.nodes_visited;
  j["levels"] = ordered_json::array();
  for (const auto& level : trace.levels) {
    ordered_json l;
    l["current"] = level.current.str();
    l["current_bond"] = level.current_bond;
    l["child_scores"] = ordered_json::array();
    for (const auto& s : level.child_scores) l["child_scores"].push_back({{"id", s.child.str()}, {"score", s.score}});
    l["decision"] = level.attaches_here() ? "attach" : "descend";
    if (level.descend_to) l["descend_to"] = level.descend_to->str();
    j["levels"].push_back(std::move(l));
  }
  return j;
}

ordered_json to_json(const BuildStats& stats) {
  ordered_json j;
  j["node_count"] = stats.node_count;
  j["max_depth"] = stats.max_depth;
  j["mean_branching"] = stats.mean_branching;
  j["total_visits"] = stats.total_visits;
  j["visits"] = stats.visits;
  j["worst_case_bound_holds"] = stats.worst_case_bound_holds;
  j["level_bound_holds"] = stats.level_bound_holds;
  return j;
}

ordered_json to_json(const OrderSensitivityReport& report) {
  ordered_json j;
  j["dataset_id"] = report.dataset_id;
  j["proteins"] = report.proteins;
  j["permutations_tried"] = report.permutations_tried;
  j["distinct_tree_count"] = report.distinct_tree_count;
  j["mean_parent_disagreement"] = report.mean_parent_disagreement;
  j["seed"] = report.seed;
  return j;
}

ordered_json to_json(const ComplexityProbeReport& report) {
  ordered_json j;
  j["sizes"] = report.sizes;
  j["seed"] = report.seed;
  j["worst_observed"] = report.worst_observed;
  j["best_observed"] = report.best_observed;
  j["worst_case_bound_holds"] = report.worst_case_bound_holds;
  j["level_bound_holds"] = report.level_bound_holds;
  j["points"] = ordered_json::array();
  for (const auto& p : report.points) {
    j["points"].push_back({{"n", p.tree_size}, {"visits", p.visits}, {"attach_depth", p.attach_depth}});
  }
  return j;
}

ordered_json to_json(const CoverageResult& result) {
  ordered_json j;
  j["passed"] = result.passed;
  j["missing"] = ordered_json::array();
  for (const auto& id : result.missing) j["missing"].push_back(id.str());
  return j;
}

ordered_json to_json(const EquivalenceResult& result) {
  ordered_json j;
  j["passed"] = result.passed;
  j["builds_compared"] = result.builds_compared;
  if (result.first_divergence) {
    const auto& d = *result.first_divergence;
    ordered_json div;
    div["dataset"] = d.dataset;
    div["order"] = d.order;
    div["insertion"] = d.insertion;
    div["level"] = d.level ? ordered_json(*d.level) : ordered_json(nullptr);
    div["field"] = d.field;
    div["engine"] = d.engine_value;
    div["oracle"] = d.oracle_value;
    j["first_divergence"] = std::move(div);
  }
  return j;
}

}  // namespace bondtree
