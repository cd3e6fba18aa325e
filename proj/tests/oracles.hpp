// Brute-force reference implementations used to check the library. Everything
// here is deliberately independent of the library's algorithms: adjacency is
// rebuilt from the edge list and traversals are written from scratch.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sna/graph.hpp"

namespace oracle {

// Plain adjacency rebuilt from g.edges(); the only library surface used.
std::vector<std::vector<uint32_t>> adjacency_of(const sna::SimpleGraph& g);

struct GeodesicResult {
  uint32_t diameter = 0;
  double average = 0;
  bool has_pairs = false;
};
// Floyd-Warshall over the full matrix; statistics over connected pairs.
GeodesicResult floyd_warshall_geodesics(const sna::SimpleGraph& g);

// Component labels via repeated flood fill.
std::vector<uint32_t> flood_fill_components(const sna::SimpleGraph& g);

struct BetweennessOracle {
  std::vector<double> node;                          // per dense index
  std::map<std::pair<uint32_t, uint32_t>, double> edge;  // keyed by (u < v)
};
// Explicit enumeration of every shortest path between every unordered pair.
BetweennessOracle enumerate_betweenness(const sna::SimpleGraph& g);

// Triangle count per node by triple loop over the adjacency matrix.
std::vector<double> triple_loop_clustering(const sna::SimpleGraph& g);

// Per-node BFS with its own queue; 1 / (sum of distances), 0 when isolated.
std::vector<double> bfs_closeness(const sna::SimpleGraph& g);

// Dense power iteration with uniform dangling redistribution, scaled to mean 1.
std::vector<double> dense_pagerank(const sna::SimpleGraph& g, double damping, double tol,
                                   uint32_t max_iter);

// Dominant eigenvector of the dense adjacency matrix via Eigen's
// self-adjoint solver, sign-fixed non-negative, normalized to sum 1.
std::vector<double> dense_eigenvector(const sna::SimpleGraph& g);

// ---------------------------------------------------------------------------
// Seeded test-graph builders (std::mt19937_64, independent of the library RNG).

sna::SimpleGraph make_gnp(uint32_t n, double p, uint64_t seed, const std::string& prefix = "n");
// Random spanning tree plus `extra` random edges: connected by construction.
sna::SimpleGraph make_connected(uint32_t n, uint32_t extra, uint64_t seed,
                                const std::string& prefix = "n");
sna::SimpleGraph make_path(uint32_t n);
sna::SimpleGraph make_complete(uint32_t n);
sna::SimpleGraph make_cycle(uint32_t n);
sna::SimpleGraph make_star(uint32_t leaves);

}  // namespace oracle
