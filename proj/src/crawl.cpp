#include "sna/crawl.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sna/error.hpp"
#include "sna/rng.hpp"

namespace sna {

namespace {

std::vector<NodeId> make_node_ids(uint32_t n) {
  size_t width = 1;
  for (uint32_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++width;
  std::vector<NodeId> ids(n);
  for (uint32_t v = 0; v < n; ++v) {
    std::string s = std::to_string(v);
    ids[v] = std::string(width - s.size(), '0') + s;
  }
  return ids;
}

using EdgeList = std::vector<std::pair<uint32_t, uint32_t>>;

EdgeList generate_preferential_attachment(const GeneratorSpec& spec, Rng& rng) {
  const uint32_t n = spec.n;
  if (spec.m_links < 1 || spec.m_links >= n) {
    throw InputError("preferential attachment requires 1 <= m_links < n");
  }
  const auto whole = static_cast<uint32_t>(spec.m_links);
  const double frac = spec.m_links - whole;

  EdgeList edges;
  // Seed clique on min(n, 3) nodes, then m preferential links per arrival.
  const uint32_t seed = std::min<uint32_t>(n, 3);
  std::vector<uint32_t> targets;  // each node listed once per incident edge
  for (uint32_t u = 0; u < seed; ++u) {
    for (uint32_t v = u + 1; v < seed; ++v) {
      edges.emplace_back(u, v);
      targets.push_back(u);
      targets.push_back(v);
    }
  }
  std::vector<uint32_t> chosen;
  for (uint32_t v = seed; v < n; ++v) {
    uint32_t links = whole;
    if (frac > 0 && rng.uniform() < frac) ++links;
    links = std::min(links, v);
    chosen.clear();
    while (chosen.size() < links) {
      const uint32_t t = targets[rng.below(targets.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (uint32_t t : chosen) {
      edges.emplace_back(t, v);
      targets.push_back(t);
      targets.push_back(v);
    }
  }
  return edges;
}

EdgeList generate_random_uniform(const GeneratorSpec& spec, Rng& rng) {
  const double p = spec.edge_prob;
  if (p < 0 || p > 1) throw InputError("edge probability must be in [0, 1]");
  const uint32_t n = spec.n;
  EdgeList edges;
  if (p <= 0 || n < 2) return edges;
  if (p >= 1) {
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return edges;
  }
  // Geometric skipping over the pair sequence.
  const double log_q = std::log(1.0 - p);
  int64_t v = 1, w = -1;
  while (v < n) {
    const double r = rng.uniform();
    w += 1 + static_cast<int64_t>(std::floor(std::log(1.0 - r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<uint32_t>(w), static_cast<uint32_t>(v));
  }
  return edges;
}

EdgeList generate_small_world(const GeneratorSpec& spec, Rng& rng) {
  const uint32_t n = spec.n;
  const uint32_t k = spec.k_neighbors;
  if (k % 2 != 0) throw InputError("small world ring degree k must be even");
  if (n > 0 && k > n - 1) throw InputError("small world requires k <= n - 1");
  if (spec.rewire_prob < 0 || spec.rewire_prob > 1) {
    throw InputError("rewire probability must be in [0, 1]");
  }
  EdgeList edges;
  if (n == 0 || k == 0) return edges;

  std::vector<std::unordered_set<uint32_t>> adj(n);
  auto connect = [&](uint32_t a, uint32_t b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 1; j <= k / 2; ++j) {
      const uint32_t t = (i + j) % n;
      if (i != t && !adj[i].count(t)) connect(i, t);
    }
  }
  // Watts-Strogatz rewiring of each original lattice edge.
  for (uint32_t j = 1; j <= k / 2; ++j) {
    for (uint32_t i = 0; i < n; ++i) {
      const uint32_t t = (i + j) % n;
      if (i == t || !adj[i].count(t)) continue;
      if (rng.uniform() >= spec.rewire_prob) continue;
      if (adj[i].size() >= n - 1) continue;  // i is saturated, nothing to rewire to
      uint32_t w;
      do {
        w = static_cast<uint32_t>(rng.below(n));
      } while (w == i || adj[i].count(w));
      adj[i].erase(t);
      adj[t].erase(i);
      connect(i, w);
    }
  }
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TruthNetwork generate(const GeneratorSpec& spec) {
  if (spec.public_fraction < 0 || spec.public_fraction > 1 || spec.page_fraction < 0 ||
      spec.page_fraction > 1) {
    throw InputError("public and page fractions must be in [0, 1]");
  }
  Rng rng(spec.rng_seed);
  EdgeList index_edges;
  switch (spec.model) {
    case GeneratorSpec::Model::preferential_attachment:
      index_edges = generate_preferential_attachment(spec, rng);
      break;
    case GeneratorSpec::Model::random_uniform:
      index_edges = generate_random_uniform(spec, rng);
      break;
    case GeneratorSpec::Model::small_world:
      index_edges = generate_small_world(spec, rng);
      break;
  }

  const std::vector<NodeId> ids = make_node_ids(spec.n);
  MultiGraph mg;
  mg.nodes = ids;
  mg.edges.reserve(index_edges.size());
  for (const auto& [u, v] : index_edges) mg.edges.emplace_back(ids[u], ids[v]);

  TruthNetwork truth;
  truth.graph = freeze(mg);
  truth.visibility.resize(spec.n);
  truth.kind.resize(spec.n);
  for (uint32_t v = 0; v < spec.n; ++v) {
    truth.visibility[v] = rng.uniform() < spec.public_fraction ? 1 : 0;
    truth.kind[v] = rng.uniform() < spec.page_fraction ? EntityKind::page : EntityKind::user;
  }
  return truth;
}

MultiGraph crawl(const TruthNetwork& truth, const CrawlConfig& cfg) {
  const SimpleGraph& g = truth.graph;
  const auto seed = g.index_of(cfg.seed_node);
  if (!seed) throw InputError("crawl seed \"" + cfg.seed_node + "\" is not in the network");
  if (truth.kind[*seed] == EntityKind::page) {
    throw InputError("crawl seed \"" + cfg.seed_node + "\" is a page, not a user");
  }

  const uint32_t n = g.node_count();
  constexpr uint32_t kUnseen = UINT32_MAX;
  std::vector<uint32_t> depth(n, kUnseen);
  std::vector<uint32_t> queue;
  depth[*seed] = 0;
  queue.push_back(*seed);

  auto friend_of_seed = [&](uint32_t v) { return g.adjacent(*seed, v); };
  auto expandable = [&](uint32_t v) {
    return depth[v] < cfg.max_depth &&
           (v == *seed || friend_of_seed(v) || truth.visibility[v] != 0);
  };

  std::vector<NodeId> node_records;
  std::vector<std::pair<NodeId, NodeId>> edge_records;
  std::unordered_set<uint32_t> node_seen;
  std::unordered_set<uint64_t> edge_seen;

  for (size_t head = 0; head < queue.size(); ++head) {
    const uint32_t v = queue[head];
    if (!expandable(v)) continue;
    for (uint32_t f : g.neighbors(v)) {
      if (truth.kind[f] == EntityKind::page) continue;  // discarded at the source
      if (depth[f] == kUnseen) {
        depth[f] = depth[v] + 1;
        queue.push_back(f);
      }
      if (!cfg.emit_duplicates) {
        const uint64_t key = (static_cast<uint64_t>(std::min(v, f)) << 32) | std::max(v, f);
        if (node_seen.insert(f).second) node_records.push_back(g.id_of(f));
        if (edge_seen.insert(key).second) edge_records.emplace_back(g.id_of(v), g.id_of(f));
      } else {
        node_records.push_back(g.id_of(f));
        edge_records.emplace_back(g.id_of(v), g.id_of(f));
      }
    }
  }
  return build_multigraph(std::move(node_records), std::move(edge_records));
}

CoverageReport crawl_coverage(const TruthNetwork& truth, const SimpleGraph& observed) {
  const SimpleGraph& tg = truth.graph;
  CoverageReport report;

  std::vector<uint32_t> truth_index(observed.node_count());
  for (uint32_t v = 0; v < observed.node_count(); ++v) {
    const auto t = tg.index_of(observed.id_of(v));
    if (!t) {
      throw InputError("observed node \"" + observed.id_of(v) + "\" is not in the truth network");
    }
    truth_index[v] = *t;
  }

  // Denominators: the user-restricted truth network, the only part a crawl
  // can ever see.
  uint64_t truth_users = 0;
  for (uint32_t v = 0; v < tg.node_count(); ++v) {
    if (truth.kind[v] == EntityKind::user) ++truth_users;
  }
  uint64_t truth_user_edges = 0;
  for (const auto& e : tg.edges()) {
    if (truth.kind[e.u] == EntityKind::user && truth.kind[e.v] == EntityKind::user) {
      ++truth_user_edges;
    }
  }

  uint64_t observed_users = 0;
  for (uint32_t v = 0; v < observed.node_count(); ++v) {
    if (truth.kind[truth_index[v]] == EntityKind::user) ++observed_users;
  }
  uint64_t observed_true_edges = 0;
  for (const auto& e : observed.edges()) {
    const uint32_t tu = truth_index[e.u], tv = truth_index[e.v];
    if (truth.kind[tu] == EntityKind::user && truth.kind[tv] == EntityKind::user &&
        tg.adjacent(tu, tv)) {
      ++observed_true_edges;
    }
  }
  report.node_recall =
      truth_users == 0 ? 1.0 : static_cast<double>(observed_users) / static_cast<double>(truth_users);
  report.edge_recall = truth_user_edges == 0
                           ? 1.0
                           : static_cast<double>(observed_true_edges) /
                                 static_cast<double>(truth_user_edges);

  // Degree histogram over the user-restricted truth vs the observed graph.
  std::vector<uint64_t> truth_hist, obs_hist;
  auto bump = [](std::vector<uint64_t>& hist, uint32_t degree) {
    if (hist.size() <= degree) hist.resize(degree + 1, 0);
    ++hist[degree];
  };
  for (uint32_t v = 0; v < tg.node_count(); ++v) {
    if (truth.kind[v] != EntityKind::user) continue;
    uint32_t deg = 0;
    for (uint32_t w : tg.neighbors(v)) {
      if (truth.kind[w] == EntityKind::user) ++deg;
    }
    bump(truth_hist, deg);
  }
  for (uint32_t v = 0; v < observed.node_count(); ++v) bump(obs_hist, observed.degree(v));

  const size_t buckets = std::max(truth_hist.size(), obs_hist.size());
  for (uint32_t d = 0; d < buckets; ++d) {
    report.degree_histogram.push_back({d, d < truth_hist.size() ? truth_hist[d] : 0,
                                       d < obs_hist.size() ? obs_hist[d] : 0});
  }
  return report;
}

std::string truth_meta_json(const TruthNetwork& truth) {
  nlohmann::json meta = nlohmann::json::object();
  for (uint32_t v = 0; v < truth.graph.node_count(); ++v) {
    meta[truth.graph.id_of(v)] = {
        {"public", truth.visibility[v] != 0},
        {"kind", truth.kind[v] == EntityKind::page ? "page" : "user"},
    };
  }
  return meta.dump(2) + "\n";
}

TruthNetwork truth_from_parts(SimpleGraph graph, const std::string& meta_json) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(meta_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("truth meta: ") + e.what());
  }
  if (!meta.is_object()) throw InputError("truth meta: expected a JSON object");

  TruthNetwork truth;
  truth.visibility.assign(graph.node_count(), 0);
  truth.kind.assign(graph.node_count(), EntityKind::user);
  for (uint32_t v = 0; v < graph.node_count(); ++v) {
    const auto it = meta.find(graph.id_of(v));
    if (it == meta.end()) {
      throw InputError("truth meta: no entry for node \"" + graph.id_of(v) + "\"");
    }
    const auto& entry = *it;
    if (!entry.is_object() || !entry.contains("public") || !entry.contains("kind")) {
      throw InputError("truth meta: node \"" + graph.id_of(v) +
                       "\" needs {\"public\": bool, \"kind\": \"user\"|\"page\"}");
    }
    if (!entry["public"].is_boolean()) {
      throw InputError("truth meta: \"public\" must be a boolean for node \"" + graph.id_of(v) + "\"");
    }
    truth.visibility[v] = entry["public"].get<bool>() ? 1 : 0;
    const std::string kind = entry["kind"].get<std::string>();
    if (kind == "page") {
      truth.kind[v] = EntityKind::page;
    } else if (kind == "user") {
      truth.kind[v] = EntityKind::user;
    } else {
      throw InputError("truth meta: unknown kind \"" + kind + "\"");
    }
  }
  truth.graph = std::move(graph);
  return truth;
}

}  // namespace sna
