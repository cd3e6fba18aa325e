#include <algorithm>
#include <numeric>

#include "metrics_internal.hpp"
#include "sna/error.hpp"
#include "sna/metrics.hpp"
#include "sna/parallel.hpp"

namespace sna {

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw InputError("summarize: empty value sequence");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  SummaryStats s;
  s.minimum = sorted.front();
  s.maximum = sorted.back();
  double sum = 0;
  for (double v : sorted) sum += v;
  s.average = sum / static_cast<double>(sorted.size());
  const size_t n = sorted.size();
  s.median = (n % 2 == 1) ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  return s;
}

namespace detail {

// Summary of a possibly-empty column; all-zero stats when there is nothing
// to summarize (summarize() itself keeps its non-empty contract).
SummaryStats summarize_or_zero(std::span<const double> values) {
  return values.empty() ? SummaryStats{} : summarize(values);
}

std::vector<double> to_doubles(const std::vector<uint32_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace detail

uint32_t ComponentInfo::giant() const {
  uint32_t best = 0;
  for (uint32_t c = 1; c < sizes.size(); ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }
  return best;
}

ComponentInfo connected_components(const SimpleGraph& g) {
  const uint32_t n = g.node_count();
  ComponentInfo info;
  info.labels.assign(n, UINT32_MAX);
  std::vector<uint32_t> queue;
  queue.reserve(n);
  for (uint32_t start = 0; start < n; ++start) {
    if (info.labels[start] != UINT32_MAX) continue;
    const uint32_t label = info.count();
    info.sizes.push_back(0);
    info.labels[start] = label;
    queue.clear();
    queue.push_back(start);
    uint32_t size = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const uint32_t v = queue[head];
      ++size;
      for (uint32_t w : g.neighbors(v)) {
        if (info.labels[w] == UINT32_MAX) {
          info.labels[w] = label;
          queue.push_back(w);
        }
      }
    }
    info.sizes[label] = size;
  }
  info.edge_counts.assign(info.count(), 0);
  for (const auto& e : g.edges()) ++info.edge_counts[info.labels[e.u]];
  return info;
}

DegreeResult degree_all(const SimpleGraph& g) {
  DegreeResult r;
  r.values.resize(g.node_count());
  for (uint32_t v = 0; v < g.node_count(); ++v) r.values[v] = g.degree(v);
  r.summary = detail::summarize_or_zero(detail::to_doubles(r.values));
  return r;
}

ClusteringResult clustering_all(const SimpleGraph& g, unsigned threads) {
  const uint32_t n = g.node_count();
  ClusteringResult r;
  r.values.assign(n, 0.0);
  parallel_for(0, n, threads, 256, [&](uint32_t v, unsigned) {
    const auto nv = g.neighbors(v);
    const uint64_t deg = nv.size();
    if (deg < 2) return;
    // Sum over neighbors u of |N(v) ∩ N(u)|; every edge among v's neighbors
    // is counted twice, once from each endpoint.
    uint64_t twice_triangles = 0;
    for (uint32_t u : nv) {
      const auto nu = g.neighbors(u);
      size_t i = 0, j = 0;
      while (i < nv.size() && j < nu.size()) {
        if (nv[i] < nu[j]) ++i;
        else if (nv[i] > nu[j]) ++j;
        else { ++twice_triangles; ++i; ++j; }
      }
    }
    r.values[v] = static_cast<double>(twice_triangles) /
                  (static_cast<double>(deg) * static_cast<double>(deg - 1));
  });
  r.summary = detail::summarize_or_zero(r.values);
  return r;
}

OverallMetrics overall_metrics(const SimpleGraph& g, const GeodesicMode& mode,
                               unsigned threads) {
  OverallMetrics m;
  const uint64_t n = g.node_count();
  m.vertices = n;
  m.unique_edges = g.edge_count();
  m.edges_with_duplicates = 0;
  m.total_edges = g.edge_count();
  m.self_loops = 0;

  const ComponentInfo comps = connected_components(g);
  m.connected_components = comps.count();
  for (uint32_t size : comps.sizes) {
    if (size == 1) ++m.single_vertex_components;
    m.max_vertices_in_component = std::max<uint64_t>(m.max_vertices_in_component, size);
  }
  for (uint64_t ec : comps.edge_counts) {
    m.max_edges_in_component = std::max(m.max_edges_in_component, ec);
  }

  const GeodesicStats geo = geodesic_stats(g, mode, threads);
  m.diameter = geo.diameter;
  m.diameter_is_lower_bound = geo.diameter_is_lower_bound;
  m.average_geodesic = geo.average;

  m.density = n >= 2 ? 2.0 * static_cast<double>(m.unique_edges) /
                           (static_cast<double>(n) * static_cast<double>(n - 1))
                     : 0.0;
  return m;
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::degree: return "degree";
    case Metric::pagerank: return "pagerank";
    case Metric::clustering: return "clustering";
    case Metric::eigenvector: return "eigenvector";
    case Metric::betweenness: return "betweenness";
    case Metric::closeness: return "closeness";
  }
  return "?";
}

Metric metric_from_name(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  throw InputError("unknown metric \"" + std::string(name) +
                   "\" (expected degree, pagerank, clustering, eigenvector, "
                   "betweenness or closeness)");
}

std::span<const double> NodeMetricsTable::column(Metric m) const {
  return const_cast<NodeMetricsTable*>(this)->column(m);
}

std::vector<double>& NodeMetricsTable::column(Metric m) {
  switch (m) {
    case Metric::degree: return degree;
    case Metric::pagerank: return pagerank;
    case Metric::clustering: return clustering;
    case Metric::eigenvector: return eigenvector;
    case Metric::betweenness: return betweenness;
    case Metric::closeness: return closeness;
  }
  return degree;
}

AnalysisResult analyze_graph(const SimpleGraph& g, const AnalysisOptions& opts) {
  if (g.node_count() == 0) throw InputError("analyze: graph has no nodes");
  const unsigned threads = opts.threads == 0 ? default_thread_count() : opts.threads;

  AnalysisResult r;
  r.overall = overall_metrics(g, opts.geodesic, threads);

  DegreeResult deg = degree_all(g);
  r.nodes.degree = detail::to_doubles(deg.values);
  r.summaries[static_cast<int>(Metric::degree)] = deg.summary;

  PageRankResult pr = pagerank(g, opts.pagerank, threads);
  r.nodes.pagerank = std::move(pr.scores);
  r.summaries[static_cast<int>(Metric::pagerank)] = pr.summary;
  r.pagerank_converged = pr.converged;

  ClusteringResult cl = clustering_all(g, threads);
  r.nodes.clustering = std::move(cl.values);
  r.summaries[static_cast<int>(Metric::clustering)] = cl.summary;

  EigenvectorResult ev = eigenvector_centrality(g, opts.eigenvector, threads);
  r.nodes.eigenvector = std::move(ev.scores);
  r.summaries[static_cast<int>(Metric::eigenvector)] = ev.summary;
  r.eigenvector_converged = ev.converged;
  r.eigenvector_degenerate = ev.degenerate;

  BetweennessResult bc = betweenness(g, threads);
  r.nodes.betweenness = std::move(bc.node_scores);
  r.edge_betweenness = std::move(bc.edge_scores);
  r.summaries[static_cast<int>(Metric::betweenness)] = bc.node_summary;

  ClosenessResult cc = closeness(g, threads);
  r.nodes.closeness = std::move(cc.values);
  r.summaries[static_cast<int>(Metric::closeness)] = cc.summary;

  return r;
}

}  // namespace sna
