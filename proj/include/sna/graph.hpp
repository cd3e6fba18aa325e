#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sna {

// Opaque node identifier. Ids are platform-assigned strings and are never
// interpreted numerically.
using NodeId = std::string;

// Raw graph as crawled or parsed: duplicate node records, parallel edges and
// self-loops are all preserved in insertion order until the cleaner runs.
struct MultiGraph {
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Assembles a MultiGraph from raw records. Endpoints that never appear as a
// node record are auto-registered (friend-list pages routinely reference
// profiles that were not themselves visited). Empty ids are rejected.
MultiGraph build_multigraph(std::vector<NodeId> node_records,
                            std::vector<std::pair<NodeId, NodeId>> edge_records);

// Immutable simple undirected graph with compact adjacency. Dense indices
// are assigned by lexicographic NodeId order, so every downstream output is
// independent of input record order. Safe for concurrent readers.
class SimpleGraph {
 public:
  struct Edge {
    uint32_t u, v;  // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SimpleGraph() = default;

  uint32_t node_count() const { return static_cast<uint32_t>(ids_.size()); }
  uint64_t edge_count() const { return edges_.size(); }

  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  // Canonical edge ids of v's incident edges, parallel to neighbors(v).
  std::span<const uint32_t> incident_edge_ids(uint32_t v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  uint32_t degree(uint32_t v) const {
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(uint32_t u, uint32_t v) const;

  const NodeId& id_of(uint32_t v) const { return ids_[v]; }
  const std::vector<NodeId>& ids() const { return ids_; }
  std::optional<uint32_t> index_of(std::string_view id) const;

  // Edges ordered by (min endpoint, max endpoint); the order is lexicographic
  // in NodeId because dense indices are.
  std::span<const Edge> edges() const { return edges_; }

 private:
  friend SimpleGraph freeze(const MultiGraph&);

  std::vector<NodeId> ids_;         // sorted; position = dense index
  std::vector<uint64_t> offsets_;   // n + 1
  std::vector<uint32_t> neighbors_; // 2m, each list strictly increasing
  std::vector<uint32_t> edge_ids_;  // 2m, parallel to neighbors_
  std::vector<Edge> edges_;         // m, canonical order
};

// Freezes a cleaned MultiGraph into a SimpleGraph. The input must already be
// in simple form: duplicate nodes, self-loops or parallel edges raise an
// IntegrityError naming the offending record.
SimpleGraph freeze(const MultiGraph& g);

}  // namespace sna
