#include <cmath>

#include "metrics_internal.hpp"
#include "sna/error.hpp"
#include "sna/metrics.hpp"
#include "sna/parallel.hpp"

namespace sna {

PageRankResult pagerank(const SimpleGraph& g, const PageRankOptions& opts,
                        unsigned threads) {
  const uint32_t n = g.node_count();
  PageRankResult r;
  if (n == 0) {
    r.converged = true;
    return r;
  }
  if (threads == 0) threads = 1;

  std::vector<uint32_t> dangling;
  for (uint32_t v = 0; v < n; ++v) {
    if (g.degree(v) == 0) dangling.push_back(v);
  }

  const double d = opts.damping;
  std::vector<double> x(n, 1.0 / n), next(n), share(n);
  uint32_t iter = 0;
  double residual = 0;
  bool converged = false;
  while (iter < opts.max_iter) {
    ++iter;
    double dangling_mass = 0;
    for (uint32_t v : dangling) dangling_mass += x[v];
    const double base = (1.0 - d) / n + d * dangling_mass / n;

    parallel_for(0, n, threads, 1024, [&](uint32_t v, unsigned) {
      const uint32_t deg = g.degree(v);
      share[v] = deg == 0 ? 0.0 : x[v] / deg;
    });
    parallel_for(0, n, threads, 1024, [&](uint32_t v, unsigned) {
      double sum = 0;
      for (uint32_t u : g.neighbors(v)) sum += share[u];
      next[v] = base + d * sum;
    });

    residual = 0;
    for (uint32_t v = 0; v < n; ++v) residual += std::abs(next[v] - x[v]);
    x.swap(next);
    if (residual < opts.tol) {
      converged = true;
      break;
    }
  }

  // Scale so the mean score is 1 (sum n), the convention of the report.
  double total = 0;
  for (double v : x) total += v;
  const double scale = static_cast<double>(n) / total;
  for (double& v : x) v *= scale;

  r.scores = std::move(x);
  r.summary = detail::summarize_or_zero(r.scores);
  r.converged = converged;
  r.residual = residual;
  r.iterations = iter;
  return r;
}

EigenvectorResult eigenvector_centrality(const SimpleGraph& g,
                                         const EigenvectorOptions& opts,
                                         unsigned threads) {
  const uint32_t n = g.node_count();
  if (g.edge_count() == 0) {
    throw DegenerateGraphError("eigenvector centrality is undefined on a graph with no edges");
  }
  if (threads == 0) threads = 1;

  EigenvectorResult r;
  // The dominant eigenvector is unique only when a single component carries
  // all the edges; otherwise flag the result as degenerate.
  {
    const ComponentInfo comps = connected_components(g);
    uint32_t with_edges = 0;
    for (uint64_t ec : comps.edge_counts) {
      if (ec > 0) ++with_edges;
    }
    r.degenerate = with_edges > 1;
  }

  // Power iteration on I + A: shifting keeps the iteration convergent on
  // bipartite components, where A alone oscillates between two vectors.
  std::vector<double> x(n, 1.0 / n), next(n);
  uint32_t iter = 0;
  double residual = 0;
  bool converged = false;
  while (iter < opts.max_iter) {
    ++iter;
    parallel_for(0, n, threads, 1024, [&](uint32_t v, unsigned) {
      double sum = x[v];
      for (uint32_t u : g.neighbors(v)) sum += x[u];
      next[v] = sum;
    });
    double total = 0;
    for (uint32_t v = 0; v < n; ++v) total += next[v];
    const double inv = 1.0 / total;
    for (uint32_t v = 0; v < n; ++v) next[v] *= inv;

    residual = 0;
    for (uint32_t v = 0; v < n; ++v) residual += std::abs(next[v] - x[v]);
    x.swap(next);
    if (residual < opts.tol) {
      converged = true;
      break;
    }
  }

  double total = 0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;

  r.scores = std::move(x);
  r.summary = detail::summarize_or_zero(r.scores);
  r.converged = converged;
  r.residual = residual;
  r.iterations = iter;
  return r;
}

}  // namespace sna
