#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

enum class EntityKind : uint8_t { user, page };

// Synthetic ground truth for the crawl simulator: a friendship graph plus,
// per node, a visibility flag (friend list readable by non-friends) and an
// entity kind (pages are discarded at acquisition time).
struct TruthNetwork {
  SimpleGraph graph;
  std::vector<uint8_t> visibility;  // 1 = publicly accessible profile
  std::vector<EntityKind> kind;
};

struct GeneratorSpec {
  enum class Model { preferential_attachment, random_uniform, small_world };

  Model model = Model::preferential_attachment;
  uint32_t n = 0;
  // preferential_attachment: links added per arriving node, 1 <= m_links < n.
  // Fractional values add the extra link with probability frac(m_links).
  double m_links = 1;
  double edge_prob = 0;       // random_uniform
  uint32_t k_neighbors = 0;   // small_world: even ring degree
  double rewire_prob = 0;     // small_world
  double public_fraction = 1;
  double page_fraction = 0;
  uint64_t rng_seed = 0;
};

// Deterministic for a fixed spec. Node ids are zero-padded decimals, so
// lexicographic NodeId order equals generation order.
TruthNetwork generate(const GeneratorSpec& spec);

struct CrawlConfig {
  NodeId seed_node;
  uint32_t max_depth = 3;
  // The raw output records a friendship once per readable endpoint, so the
  // cleaner has real duplicates to remove. Off = record each once.
  bool emit_duplicates = true;
};

// Depth-limited BFS acquisition: the friend list of v is expanded iff
// depth(v) < max_depth and v is the seed, a direct friend of the seed, or
// publicly visible. Expanding v appends a node record per friend and an edge
// record (v, friend); page-kind nodes are never recorded or expanded.
MultiGraph crawl(const TruthNetwork& truth, const CrawlConfig& cfg);

struct CoverageReport {
  double node_recall = 0;  // observed user nodes / truth user nodes
  double edge_recall = 0;  // observed edges / truth user-user edges
  struct DegreeBucket {
    uint32_t degree;
    uint64_t truth_count;
    uint64_t observed_count;
  };
  std::vector<DegreeBucket> degree_histogram;
};

// Quantifies sampling bias of a crawl against its ground truth. Observed ids
// must all exist in the truth network.
CoverageReport crawl_coverage(const TruthNetwork& truth, const SimpleGraph& observed_clean);

// Sidecar JSON with per-node {"public": bool, "kind": "user"|"page"}.
std::string truth_meta_json(const TruthNetwork& truth);
// Rebuilds a TruthNetwork from a cleaned graph plus its sidecar. Every node
// must have a meta entry.
TruthNetwork truth_from_parts(SimpleGraph graph, const std::string& meta_json);

}  // namespace sna
