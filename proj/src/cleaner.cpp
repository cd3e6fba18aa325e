#include "sna/cleaner.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sna {

CleanResult clean(const MultiGraph& g) {
  CleanResult out;

  // Intern ids so edge deduplication works on packed integers. Views point
  // into `g`, which outlives this function.
  std::unordered_map<std::string_view, uint32_t> index;
  index.reserve(g.nodes.size());
  std::vector<const std::string*> unique_ids;
  auto intern = [&](const std::string& id) -> uint32_t {
    auto [it, inserted] = index.emplace(id, static_cast<uint32_t>(unique_ids.size()));
    if (inserted) unique_ids.push_back(&id);
    return it->second;
  };
  for (const auto& id : g.nodes) {
    const size_t before = unique_ids.size();
    intern(id);
    if (unique_ids.size() == before) ++out.stats.duplicate_nodes_removed;
  }

  std::unordered_set<uint64_t> seen;
  seen.reserve(g.edges.size());
  std::vector<std::pair<uint32_t, uint32_t>> kept;
  for (const auto& [a, b] : g.edges) {
    // Endpoints missing from the node list are registered rather than
    // rejected; cleaning is total.
    uint32_t u = intern(a);
    uint32_t v = intern(b);
    if (u == v) {
      ++out.stats.self_loops_removed;
      continue;
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert((static_cast<uint64_t>(u) << 32) | v).second) {
      ++out.stats.parallel_edges_removed;
      continue;
    }
    kept.emplace_back(u, v);
  }

  out.graph.nodes.reserve(unique_ids.size());
  for (const auto* id : unique_ids) out.graph.nodes.push_back(*id);
  std::sort(out.graph.nodes.begin(), out.graph.nodes.end());

  out.graph.edges.reserve(kept.size());
  for (const auto& [u, v] : kept) {
    const std::string &a = *unique_ids[u], &b = *unique_ids[v];
    out.graph.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  return out;
}

}  // namespace sna
