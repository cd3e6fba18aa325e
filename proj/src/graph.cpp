#include "sna/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "sna/error.hpp"

namespace sna {

MultiGraph build_multigraph(std::vector<NodeId> node_records,
                            std::vector<std::pair<NodeId, NodeId>> edge_records) {
  for (const auto& id : node_records) {
    if (id.empty()) throw InputError("node record with empty id");
  }
  std::unordered_set<std::string> known;
  known.reserve(node_records.size());
  for (const auto& id : node_records) known.insert(id);

  for (const auto& [a, b] : edge_records) {
    if (a.empty() || b.empty()) throw InputError("edge record with empty endpoint id");
    for (const NodeId& end : {a, b}) {
      if (known.insert(end).second) node_records.push_back(end);
    }
  }

  return MultiGraph{std::move(node_records), std::move(edge_records)};
}

bool SimpleGraph::adjacent(uint32_t u, uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<uint32_t> SimpleGraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const NodeId& a, std::string_view b) { return a < b; });
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<uint32_t>(it - ids_.begin());
}

SimpleGraph freeze(const MultiGraph& g) {
  SimpleGraph out;
  out.ids_ = g.nodes;
  std::sort(out.ids_.begin(), out.ids_.end());
  for (size_t i = 0; i + 1 < out.ids_.size(); ++i) {
    if (out.ids_[i] == out.ids_[i + 1]) {
      throw IntegrityError("duplicate node record: \"" + out.ids_[i] + "\"");
    }
  }
  const uint32_t n = static_cast<uint32_t>(out.ids_.size());

  auto index_of = [&out](const NodeId& id) -> uint32_t {
    auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
    if (it == out.ids_.end() || *it != id) {
      throw IntegrityError("edge endpoint not in node list: \"" + id + "\"");
    }
    return static_cast<uint32_t>(it - out.ids_.begin());
  };

  out.edges_.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    uint32_t u = index_of(a);
    uint32_t v = index_of(b);
    if (u == v) throw IntegrityError("self-loop at node \"" + a + "\"");
    if (u > v) std::swap(u, v);
    out.edges_.push_back({u, v});
  }
  std::sort(out.edges_.begin(), out.edges_.end(),
            [](const SimpleGraph::Edge& a, const SimpleGraph::Edge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  for (size_t i = 0; i + 1 < out.edges_.size(); ++i) {
    if (out.edges_[i] == out.edges_[i + 1]) {
      throw IntegrityError("parallel edge between \"" + out.ids_[out.edges_[i].u] +
                           "\" and \"" + out.ids_[out.edges_[i].v] + "\"");
    }
  }

  out.offsets_.assign(n + 1, 0);
  for (const auto& e : out.edges_) {
    ++out.offsets_[e.u + 1];
    ++out.offsets_[e.v + 1];
  }
  for (uint32_t v = 0; v < n; ++v) out.offsets_[v + 1] += out.offsets_[v];

  out.neighbors_.resize(out.edges_.size() * 2);
  out.edge_ids_.resize(out.edges_.size() * 2);
  std::vector<uint64_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
  for (uint32_t e = 0; e < static_cast<uint32_t>(out.edges_.size()); ++e) {
    const auto [u, v] = out.edges_[e];
    out.neighbors_[cursor[u]] = v;
    out.edge_ids_[cursor[u]++] = e;
    out.neighbors_[cursor[v]] = u;
    out.edge_ids_[cursor[v]++] = e;
  }
  // Edges were emitted in canonical order, so each list built this way is
  // already sorted except for the interleaving of the two directions; fix up
  // per node (lists are short on average, insertion cost is negligible).
  for (uint32_t v = 0; v < n; ++v) {
    const auto lo = out.offsets_[v], hi = out.offsets_[v + 1];
    std::vector<std::pair<uint32_t, uint32_t>> tmp;
    tmp.reserve(hi - lo);
    for (uint64_t i = lo; i < hi; ++i) tmp.emplace_back(out.neighbors_[i], out.edge_ids_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (uint64_t i = lo; i < hi; ++i) {
      out.neighbors_[i] = tmp[i - lo].first;
      out.edge_ids_[i] = tmp[i - lo].second;
    }
  }
  return out;
}

}  // namespace sna
