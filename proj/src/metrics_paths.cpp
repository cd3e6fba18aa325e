#include <algorithm>
#include <cstring>
#include <numeric>

#include "metrics_internal.hpp"
#include "sna/error.hpp"
#include "sna/metrics.hpp"
#include "sna/parallel.hpp"
#include "sna/rng.hpp"

namespace sna {

namespace {

constexpr int32_t kUnvisited = -1;

// BFS scratch reused across sources by one worker.
struct BfsScratch {
  std::vector<int32_t> dist;
  std::vector<uint32_t> order;  // nodes in visit order

  explicit BfsScratch(uint32_t n) : dist(n, kUnvisited) { order.reserve(n); }

  // Runs a BFS from s; afterwards dist[] holds hop counts for visited nodes
  // and order[] the visit sequence (s first).
  void run(const SimpleGraph& g, uint32_t s) {
    for (uint32_t v : order) dist[v] = kUnvisited;
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      const uint32_t v = order[head];
      for (uint32_t w : g.neighbors(v)) {
        if (dist[w] == kUnvisited) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
      }
    }
  }
};

struct GeodesicAccumulator {
  uint64_t distance_sum = 0;
  uint64_t pair_count = 0;
  uint32_t max_distance = 0;

  void absorb(const BfsScratch& bfs) {
    for (uint32_t v : bfs.order) {
      const int32_t d = bfs.dist[v];
      if (d <= 0) continue;
      distance_sum += static_cast<uint64_t>(d);
      ++pair_count;
      max_distance = std::max(max_distance, static_cast<uint32_t>(d));
    }
  }
};

}  // namespace

GeodesicStats geodesic_stats(const SimpleGraph& g, const GeodesicMode& mode,
                             unsigned threads) {
  const uint32_t n = g.node_count();
  GeodesicStats stats;
  stats.diameter_is_lower_bound = mode.kind == GeodesicMode::Kind::sampled;
  if (n <= 1 || g.edge_count() == 0) {
    stats.no_connected_pairs = true;
    return stats;
  }

  std::vector<uint32_t> sources;
  if (mode.kind == GeodesicMode::Kind::exact) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0u);
  } else {
    if (mode.sample_size == 0) throw InputError("geodesic sample size must be >= 1");
    const uint32_t k = std::min(mode.sample_size, n);
    std::vector<uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    Rng rng(mode.rng_seed);
    for (uint32_t i = 0; i < k; ++i) {
      const uint32_t j = i + static_cast<uint32_t>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    sources.assign(pool.begin(), pool.begin() + k);
  }

  if (threads == 0) threads = 1;
  std::vector<BfsScratch> scratch(threads, BfsScratch(n));
  std::vector<GeodesicAccumulator> acc(threads);
  parallel_for(0, static_cast<uint32_t>(sources.size()), threads, 16,
               [&](uint32_t i, unsigned worker) {
                 scratch[worker].run(g, sources[i]);
                 acc[worker].absorb(scratch[worker]);
               });

  // Integer partials: any merge order yields the same result.
  GeodesicAccumulator total;
  for (const auto& a : acc) {
    total.distance_sum += a.distance_sum;
    total.pair_count += a.pair_count;
    total.max_distance = std::max(total.max_distance, a.max_distance);
  }
  if (total.pair_count == 0) {
    stats.no_connected_pairs = true;
    return stats;
  }
  // In exact mode every unordered pair is seen twice (once per endpoint);
  // the ratio is unaffected.
  stats.diameter = total.max_distance;
  stats.average = static_cast<double>(total.distance_sum) / static_cast<double>(total.pair_count);
  return stats;
}

ClosenessResult closeness(const SimpleGraph& g, unsigned threads) {
  const uint32_t n = g.node_count();
  ClosenessResult r;
  r.values.assign(n, 0.0);
  if (n > 0) {
    if (threads == 0) threads = 1;
    std::vector<BfsScratch> scratch(threads, BfsScratch(n));
    parallel_for(0, n, threads, 16, [&](uint32_t s, unsigned worker) {
      BfsScratch& bfs = scratch[worker];
      bfs.run(g, s);
      uint64_t sum = 0;
      for (uint32_t v : bfs.order) {
        if (bfs.dist[v] > 0) sum += static_cast<uint64_t>(bfs.dist[v]);
      }
      r.values[s] = sum == 0 ? 0.0 : 1.0 / static_cast<double>(sum);
    });
  }
  r.summary = detail::summarize_or_zero(r.values);
  return r;
}

namespace {

// Per-source Brandes state. sigma is a double: path counts overflow 64-bit
// integers on wide layered graphs, and the ratios we accumulate stay accurate.
struct BrandesSlot {
  std::vector<int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<uint32_t> order;
  std::vector<double> edge_contrib;

  BrandesSlot(uint32_t n, size_t m)
      : dist(n, kUnvisited), sigma(n, 0.0), delta(n, 0.0), edge_contrib(m, 0.0) {
    order.reserve(n);
  }

  void run(const SimpleGraph& g, uint32_t s) {
    for (uint32_t v : order) {
      dist[v] = kUnvisited;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      const uint32_t v = order[head];
      for (uint32_t w : g.neighbors(v)) {
        if (dist[w] == kUnvisited) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Dependency accumulation in reverse BFS order; predecessors are read off
    // the distance array instead of stored lists.
    for (size_t i = order.size(); i-- > 1;) {
      const uint32_t w = order[i];
      const auto nbrs = g.neighbors(w);
      const auto eids = g.incident_edge_ids(w);
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (size_t k = 0; k < nbrs.size(); ++k) {
        const uint32_t v = nbrs[k];
        if (dist[v] == dist[w] - 1) {
          const double c = sigma[v] * coeff;
          delta[v] += c;
          edge_contrib[eids[k]] += c;
        }
      }
    }
    delta[s] = 0.0;  // the source is never an intermediate of its own pairs
  }
};

}  // namespace

BetweennessResult betweenness(const SimpleGraph& g, unsigned threads) {
  const uint32_t n = g.node_count();
  const size_t m = g.edge_count();
  BetweennessResult r;
  r.node_scores.assign(n, 0.0);
  r.edge_scores.assign(m, 0.0);
  if (n > 0 && m > 0) {
    if (threads == 0) threads = 1;
    // Sources are processed in fixed waves and merged in source order, so the
    // floating-point accumulation order never depends on the thread count.
    constexpr uint32_t kWave = 8;
    std::vector<BrandesSlot> slots(std::min<uint32_t>(kWave, n), BrandesSlot(n, m));
    for (uint32_t wave_start = 0; wave_start < n; wave_start += kWave) {
      const uint32_t wave_end = std::min(wave_start + kWave, n);
      parallel_for(wave_start, wave_end, threads, 1, [&](uint32_t s, unsigned) {
        BrandesSlot& slot = slots[s - wave_start];
        std::fill(slot.edge_contrib.begin(), slot.edge_contrib.end(), 0.0);
        slot.run(g, s);
      });
      for (uint32_t s = wave_start; s < wave_end; ++s) {
        const BrandesSlot& slot = slots[s - wave_start];
        for (uint32_t v : slot.order) r.node_scores[v] += slot.delta[v];
        for (size_t e = 0; e < m; ++e) r.edge_scores[e] += slot.edge_contrib[e];
      }
    }
    // Undirected convention: each unordered pair was counted from both ends.
    for (double& v : r.node_scores) v *= 0.5;
    for (double& v : r.edge_scores) v *= 0.5;
  }
  r.node_summary = detail::summarize_or_zero(r.node_scores);
  r.edge_summary = detail::summarize_or_zero(r.edge_scores);
  return r;
}

}  // namespace sna
