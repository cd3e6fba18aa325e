#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sna/error.hpp"
#include "sna/graph.hpp"

using namespace sna;

TEST_SUITE_BEGIN("graph");

TEST_CASE("build_multigraph keeps records and insertion order") {
  const MultiGraph g = build_multigraph({"a", "b"}, {{"a", "b"}});
  CHECK(g.nodes == std::vector<NodeId>{"a", "b"});
  CHECK(g.edges.size() == 1);
}

TEST_CASE("build_multigraph preserves duplicates") {
  const MultiGraph g = build_multigraph({"a", "a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(g.nodes.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.edges[0] == std::pair<NodeId, NodeId>{"a", "b"});
  CHECK(g.edges[1] == std::pair<NodeId, NodeId>{"b", "a"});
}

TEST_CASE("build_multigraph auto-registers edge endpoints") {
  const MultiGraph g = build_multigraph({}, {{"a", "b"}});
  CHECK(g.nodes == std::vector<NodeId>{"a", "b"});
}

TEST_CASE("build_multigraph rejects empty ids") {
  CHECK_THROWS_AS(build_multigraph({""}, {}), InputError);
  CHECK_THROWS_AS(build_multigraph({"a"}, {{"a", ""}}), InputError);
}

TEST_CASE("freeze on a clean triangle") {
  const SimpleGraph g =
      freeze(build_multigraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  for (uint32_t v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.id_of(0) == "a");
  CHECK(g.index_of("c") == 2);
  CHECK_FALSE(g.index_of("zz").has_value());
}

TEST_CASE("freeze rejects self-loops naming the record") {
  const MultiGraph g = build_multigraph({"a", "b"}, {{"a", "a"}});
  CHECK_THROWS_WITH_AS(freeze(g), doctest::Contains("self-loop at node \"a\""), IntegrityError);
}

TEST_CASE("freeze rejects duplicate nodes and parallel edges") {
  CHECK_THROWS_AS(freeze(MultiGraph{{"a", "a"}, {}}), IntegrityError);
  CHECK_THROWS_AS(freeze(build_multigraph({"a", "b"}, {{"a", "b"}, {"b", "a"}})), IntegrityError);
  // An endpoint missing from the node list is impossible via build_multigraph
  // but must still be rejected on a hand-rolled MultiGraph.
  CHECK_THROWS_AS(freeze(MultiGraph{{"a"}, {{"a", "b"}}}), IntegrityError);
}

TEST_CASE("freeze assigns dense indices lexicographically") {
  const SimpleGraph g = freeze(build_multigraph({"m", "z", "a"}, {{"z", "a"}}));
  CHECK(g.id_of(0) == "a");
  CHECK(g.id_of(1) == "m");
  CHECK(g.id_of(2) == "z");
  CHECK(g.adjacent(0, 2));
  CHECK(g.degree(1) == 0);  // isolated nodes are allowed
}

TEST_CASE("freeze is deterministic under record permutation") {
  std::vector<NodeId> nodes{"a", "b", "c", "d", "e"};
  std::vector<std::pair<NodeId, NodeId>> edges{
      {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"b", "d"}};
  const SimpleGraph ref = freeze(build_multigraph(nodes, edges));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges) {
      if (rng() % 2) std::swap(e.first, e.second);  // orientation is irrelevant
    }
    const SimpleGraph got = freeze(build_multigraph(nodes, edges));
    REQUIRE(got.node_count() == ref.node_count());
    for (uint32_t v = 0; v < ref.node_count(); ++v) {
      CHECK(got.id_of(v) == ref.id_of(v));
      CHECK(std::ranges::equal(got.neighbors(v), ref.neighbors(v)));
    }
  }
}

TEST_CASE("degree sum is twice the edge count on a random graph") {
  const SimpleGraph g = oracle::make_gnp(1000, 0.004, 99);
  // Recount edges by brute-force pair scan over the adjacency.
  uint64_t degree_sum = 0;
  uint64_t pair_edges = 0;
  for (uint32_t u = 0; u < g.node_count(); ++u) {
    degree_sum += g.degree(u);
    for (uint32_t v = u + 1; v < g.node_count(); ++v) {
      if (g.adjacent(u, v)) ++pair_edges;
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
  CHECK(pair_edges == g.edge_count());
}

TEST_CASE("simple graph invariants: sorted symmetric adjacency") {
  const SimpleGraph g = oracle::make_gnp(80, 0.1, 123);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (uint32_t w : nb) {
      CHECK(w != v);
      CHECK(g.adjacent(w, v));
    }
  }
}

TEST_CASE("canonical edge list matches incident edge ids") {
  const SimpleGraph g = oracle::make_gnp(40, 0.15, 5);
  const auto edges = g.edges();
  CHECK(std::is_sorted(edges.begin(), edges.end(),
                       [](const SimpleGraph::Edge& a, const SimpleGraph::Edge& b) {
                         return a.u != b.u ? a.u < b.u : a.v < b.v;
                       }));
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    const auto ids = g.incident_edge_ids(v);
    REQUIRE(nb.size() == ids.size());
    for (size_t i = 0; i < nb.size(); ++i) {
      const auto& e = edges[ids[i]];
      CHECK(std::min(e.u, e.v) == std::min(v, nb[i]));
      CHECK(std::max(e.u, e.v) == std::max(v, nb[i]));
    }
  }
}

TEST_CASE("empty graph") {
  const SimpleGraph g = freeze(MultiGraph{});
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_SUITE_END();
