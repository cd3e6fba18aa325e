#pragma once

#include <cstdint>

#include "sna/graph.hpp"

namespace sna {

struct CleaningStats {
  uint64_t duplicate_nodes_removed = 0;
  uint64_t parallel_edges_removed = 0;
  uint64_t self_loops_removed = 0;
};

struct CleanResult {
  MultiGraph graph;  // simple form: unique nodes, no loops, no parallel edges
  CleaningStats stats;
};

// Data-cleaning pass over raw crawl output: deduplicates node records,
// re-points every edge at the surviving node instances, drops self-loops and
// parallel edges. Edges are deduplicated on their canonical (min id, max id)
// orientation; the output is canonically sorted, so any permutation of the
// input records cleans to an identical graph. O(N log N) in total records.
CleanResult clean(const MultiGraph& g);

}  // namespace sna
