#include "sna/report.hpp"

#include <nlohmann/json.hpp>

namespace sna {

using ordered_json = nlohmann::ordered_json;

std::string cleaning_stats_json(const CleaningStats& stats) {
  ordered_json j;
  j["duplicate_nodes_removed"] = stats.duplicate_nodes_removed;
  j["parallel_edges_removed"] = stats.parallel_edges_removed;
  j["self_loops_removed"] = stats.self_loops_removed;
  return j.dump(2) + "\n";
}

std::string metrics_report_json(const AnalysisResult& result) {
  const OverallMetrics& o = result.overall;
  ordered_json overall;
  overall["graph_type"] = o.graph_type;
  overall["vertices"] = o.vertices;
  overall["unique_edges"] = o.unique_edges;
  overall["edges_with_duplicates"] = o.edges_with_duplicates;
  overall["total_edges"] = o.total_edges;
  overall["self_loops"] = o.self_loops;
  overall["connected_components"] = o.connected_components;
  overall["single_vertex_components"] = o.single_vertex_components;
  overall["max_vertices_in_component"] = o.max_vertices_in_component;
  overall["max_edges_in_component"] = o.max_edges_in_component;
  overall["diameter"] = o.diameter;
  overall["diameter_is_lower_bound"] = o.diameter_is_lower_bound;
  overall["average_geodesic"] = o.average_geodesic;
  overall["density"] = o.density;

  ordered_json summaries;
  for (Metric m : kAllMetrics) {
    const SummaryStats& s = result.summary(m);
    ordered_json row;
    row["minimum"] = s.minimum;
    row["maximum"] = s.maximum;
    row["average"] = s.average;
    row["median"] = s.median;
    summaries[std::string(metric_name(m))] = row;
  }

  ordered_json report;
  report["overall"] = overall;
  report["summaries"] = summaries;
  return report.dump(2) + "\n";
}

}  // namespace sna
