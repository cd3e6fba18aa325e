#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

// ---------------------------------------------------------------------------
// Summary statistics (the min/max/average/median row shape of the report).

struct SummaryStats {
  double minimum = 0;
  double maximum = 0;
  double average = 0;
  double median = 0;
};

// Median convention: middle element for odd counts, mean of the two middle
// elements for even counts. Empty input raises InputError.
SummaryStats summarize(std::span<const double> values);

// ---------------------------------------------------------------------------
// Connected components.

struct ComponentInfo {
  std::vector<uint32_t> labels;       // per node; ids dense from 0, assigned in
                                      // order of smallest dense node index
  std::vector<uint32_t> sizes;        // per component
  std::vector<uint64_t> edge_counts;  // per component

  uint32_t count() const { return static_cast<uint32_t>(sizes.size()); }
  uint32_t giant() const;  // largest component, ties to the smallest id
};

ComponentInfo connected_components(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Geodesic distances.

struct GeodesicMode {
  enum class Kind { exact, sampled };
  Kind kind = Kind::exact;
  uint32_t sample_size = 0;  // sampled mode only, >= 1
  uint64_t rng_seed = 0;

  static GeodesicMode Exact() { return {}; }
  static GeodesicMode Sampled(uint32_t sample_size, uint64_t rng_seed) {
    return {Kind::sampled, sample_size, rng_seed};
  }
};

struct GeodesicStats {
  uint32_t diameter = 0;
  double average = 0;
  bool diameter_is_lower_bound = false;  // true whenever sampled
  bool no_connected_pairs = false;       // nothing to measure (n <= 1 or m = 0)
};

// Statistics over connected unordered node pairs; disconnected pairs are
// excluded. Exact mode runs a BFS from every node; sampled mode draws
// sample_size distinct sources and reports the diameter as a lower bound.
GeodesicStats geodesic_stats(const SimpleGraph& g, const GeodesicMode& mode,
                             unsigned threads = 1);

// ---------------------------------------------------------------------------
// Per-node metrics.

struct DegreeResult {
  std::vector<uint32_t> values;
  SummaryStats summary;
};
DegreeResult degree_all(const SimpleGraph& g);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-9;  // L1 change between iterations
  uint32_t max_iter = 200;
};
struct PageRankResult {
  std::vector<double> scores;  // scaled by n: mean is 1
  SummaryStats summary;
  bool converged = false;
  double residual = 0;
  uint32_t iterations = 0;
};
// Power iteration on the undirected graph (each edge is two directed links);
// mass of degree-0 nodes is redistributed uniformly.
PageRankResult pagerank(const SimpleGraph& g, const PageRankOptions& opts = {},
                        unsigned threads = 1);

struct ClusteringResult {
  std::vector<double> values;  // 0 for degree < 2
  SummaryStats summary;
};
ClusteringResult clustering_all(const SimpleGraph& g, unsigned threads = 1);

struct EigenvectorOptions {
  double tol = 1e-10;
  uint32_t max_iter = 1000;
};
struct EigenvectorResult {
  std::vector<double> scores;  // non-negative, sum 1
  SummaryStats summary;
  bool converged = false;
  // Set when more than one component carries edges: the dominant eigenvector
  // is not unique and the scores depend on the iteration scheme.
  bool degenerate = false;
  double residual = 0;
  uint32_t iterations = 0;
};
// Throws DegenerateGraphError when the graph has no edges.
EigenvectorResult eigenvector_centrality(const SimpleGraph& g,
                                         const EigenvectorOptions& opts = {},
                                         unsigned threads = 1);

struct BetweennessResult {
  std::vector<double> node_scores;  // unnormalized, unordered pairs counted once
  std::vector<double> edge_scores;  // indexed by canonical edge id
  SummaryStats node_summary;
  SummaryStats edge_summary;
};
// Brandes' accumulation over single-source shortest-path DAGs; node and edge
// betweenness in one pass. Deterministic for any thread count.
BetweennessResult betweenness(const SimpleGraph& g, unsigned threads = 1);

struct ClosenessResult {
  std::vector<double> values;  // 1 / sum of intra-component distances; 0 if isolated
  SummaryStats summary;
};
ClosenessResult closeness(const SimpleGraph& g, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Overall metrics (the headline table).

struct OverallMetrics {
  std::string graph_type = "Undirected";
  uint64_t vertices = 0;
  uint64_t unique_edges = 0;
  uint64_t edges_with_duplicates = 0;  // always 0 post-clean
  uint64_t total_edges = 0;
  uint64_t self_loops = 0;  // always 0 post-clean
  uint64_t connected_components = 0;
  uint64_t single_vertex_components = 0;
  uint64_t max_vertices_in_component = 0;
  uint64_t max_edges_in_component = 0;
  uint32_t diameter = 0;
  bool diameter_is_lower_bound = false;
  double average_geodesic = 0;
  double density = 0;  // 2m / (n(n-1)), 0 for n < 2
};

OverallMetrics overall_metrics(const SimpleGraph& g, const GeodesicMode& mode,
                               unsigned threads = 1);

// ---------------------------------------------------------------------------
// Metric naming and the combined per-node table.

enum class Metric { degree, pagerank, clustering, eigenvector, betweenness, closeness };
inline constexpr Metric kAllMetrics[] = {Metric::degree,      Metric::pagerank,
                                         Metric::clustering,  Metric::eigenvector,
                                         Metric::betweenness, Metric::closeness};

std::string_view metric_name(Metric m);
Metric metric_from_name(std::string_view name);  // InputError on unknown names

struct NodeMetricsTable {
  std::vector<double> degree;
  std::vector<double> pagerank;
  std::vector<double> clustering;
  std::vector<double> eigenvector;
  std::vector<double> betweenness;
  std::vector<double> closeness;

  std::span<const double> column(Metric m) const;
  std::vector<double>& column(Metric m);
  size_t row_count() const { return degree.size(); }
};

struct AnalysisOptions {
  GeodesicMode geodesic = GeodesicMode::Exact();
  PageRankOptions pagerank;
  EigenvectorOptions eigenvector;
  unsigned threads = 0;  // 0 = all available cores
};

struct AnalysisResult {
  OverallMetrics overall;
  NodeMetricsTable nodes;
  std::vector<double> edge_betweenness;
  SummaryStats summaries[6];  // indexed by Metric
  bool pagerank_converged = true;
  bool eigenvector_converged = true;
  bool eigenvector_degenerate = false;

  const SummaryStats& summary(Metric m) const { return summaries[static_cast<int>(m)]; }
};

// The full suite over one graph. Requires n >= 1 and m >= 1 (eigenvector
// centrality is undefined on an edgeless graph).
AnalysisResult analyze_graph(const SimpleGraph& g, const AnalysisOptions& opts = {});

}  // namespace sna
