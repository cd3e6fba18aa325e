#include "sna/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sna/error.hpp"

namespace sna {

std::vector<uint32_t> select_nodes(const SimpleGraph& g, const NodeMetricsTable& table,
                                   const FilterSpec& spec) {
  const uint32_t n = g.node_count();
  std::vector<uint32_t> selected;

  if (std::holds_alternative<FilterSpec::GiantComponent>(spec.mode)) {
    if (n == 0) return selected;
    const ComponentInfo comps = connected_components(g);
    const uint32_t giant = comps.giant();
    for (uint32_t v = 0; v < n; ++v) {
      if (comps.labels[v] == giant) selected.push_back(v);
    }
    return selected;
  }

  const auto values = table.column(spec.metric);
  if (values.size() != n) {
    throw InputError("metric table does not match the graph (" +
                     std::to_string(values.size()) + " rows for " + std::to_string(n) +
                     " nodes)");
  }

  if (const auto* top = std::get_if<FilterSpec::TopK>(&spec.mode)) {
    if (top->k == 0) throw InputError("top-k filter requires k >= 1");
    std::vector<uint32_t> ranked(n);
    std::iota(ranked.begin(), ranked.end(), 0u);
    std::sort(ranked.begin(), ranked.end(), [&](uint32_t a, uint32_t b) {
      if (values[a] != values[b]) return values[a] > values[b];
      return a < b;  // dense index order is NodeId order
    });
    ranked.resize(std::min<size_t>(top->k, n));
    selected = std::move(ranked);
    std::sort(selected.begin(), selected.end());
    return selected;
  }

  const auto& th = std::get<FilterSpec::Threshold>(spec.mode);
  if (!std::isfinite(th.cutoff)) throw InputError("threshold cutoff must be finite");
  for (uint32_t v = 0; v < n; ++v) {
    if (th.at_least ? values[v] >= th.cutoff : values[v] <= th.cutoff) selected.push_back(v);
  }
  return selected;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const uint32_t> nodes) {
  const uint32_t n = g.node_count();
  std::vector<uint32_t> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= n) {
    throw InputError("unknown node index " + std::to_string(sorted.back()) +
                     " in subgraph selection");
  }

  std::vector<bool> keep(n, false);
  for (uint32_t v : sorted) keep[v] = true;

  MultiGraph sub;
  sub.nodes.reserve(sorted.size());
  for (uint32_t v : sorted) sub.nodes.push_back(g.id_of(v));
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) sub.edges.emplace_back(g.id_of(e.u), g.id_of(e.v));
  }
  return freeze(sub);
}

}  // namespace sna
