#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sna/graph.hpp"
#include "sna/metrics.hpp"

namespace sna {

// Metric-driven node selection: top-k by a metric, threshold cut, or the
// giant component.
struct FilterSpec {
  struct TopK {
    uint32_t k = 1;
  };
  struct Threshold {
    double cutoff = 0;
    bool at_least = true;  // false selects values <= cutoff
  };
  struct GiantComponent {};

  Metric metric = Metric::degree;  // ignored by GiantComponent
  std::variant<TopK, Threshold, GiantComponent> mode = TopK{};
};

// Returns selected dense indices in ascending order. Top-k ranks by metric
// descending with ties broken by ascending NodeId (equivalently, ascending
// dense index), so selections are deterministic and nested in k.
std::vector<uint32_t> select_nodes(const SimpleGraph& g, const NodeMetricsTable& table,
                                   const FilterSpec& spec);

// Subgraph on the given nodes with every edge whose endpoints both survive;
// dense indices are reassigned canonically. Out-of-range indices raise
// InputError; duplicates are tolerated (the argument is a set).
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const uint32_t> nodes);

}  // namespace sna
