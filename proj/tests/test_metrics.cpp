#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "sna/error.hpp"
#include "sna/metrics.hpp"

using namespace sna;

TEST_SUITE_BEGIN("metrics");

// ---------------------------------------------------------------------------
// summarize

TEST_CASE("summarize basics") {
  const SummaryStats s = summarize(std::vector<double>{1, 2, 3});
  CHECK(s.minimum == 1);
  CHECK(s.maximum == 3);
  CHECK(s.average == 2);
  CHECK(s.median == 2);
}

TEST_CASE("summarize even-count median") {
  const SummaryStats s = summarize(std::vector<double>{4, 1, 3, 2});
  CHECK(s.median == 2.5);
}

TEST_CASE("summarize rejects empty input") {
  CHECK_THROWS_AS(summarize(std::vector<double>{}), InputError);
}

TEST_CASE("summarize matches a sort-based oracle on random data") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-100, 100);
  std::vector<double> values(10000);
  for (auto& v : values) v = dist(rng);

  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const SummaryStats s = summarize(values);
  CHECK(s.minimum == sorted.front());
  CHECK(s.maximum == sorted.back());
  CHECK(s.median == doctest::Approx((sorted[4999] + sorted[5000]) / 2).epsilon(1e-12));
  double sum = 0;
  for (double v : sorted) sum += v;
  CHECK(s.average == doctest::Approx(sum / 10000).epsilon(1e-12));
}

// ---------------------------------------------------------------------------
// connected components

TEST_CASE("components of two disjoint edges") {
  const SimpleGraph g = freeze(build_multigraph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  const ComponentInfo info = connected_components(g);
  CHECK(info.count() == 2);
  CHECK(info.sizes == std::vector<uint32_t>{2, 2});
  CHECK(info.edge_counts == std::vector<uint64_t>{1, 1});
}

TEST_CASE("components of the empty graph") {
  const ComponentInfo info = connected_components(SimpleGraph{});
  CHECK(info.count() == 0);
}

TEST_CASE("component ids are dense and ordered by smallest member index") {
  // "b"<"c"<"x": component of "b" must get id 0 even though "x"-"b" links later ids.
  const SimpleGraph g = freeze(build_multigraph({"c", "b", "x"}, {{"x", "b"}}));
  const ComponentInfo info = connected_components(g);
  CHECK(info.labels[0] == 0);  // b
  CHECK(info.labels[1] == 1);  // c, isolated
  CHECK(info.labels[2] == 0);  // x
}

TEST_CASE("components match the flood-fill oracle on a random graph") {
  const SimpleGraph g = oracle::make_gnp(200, 0.008, 17);
  const ComponentInfo info = connected_components(g);
  const std::vector<uint32_t> expect = oracle::flood_fill_components(g);
  REQUIRE(info.labels.size() == expect.size());
  CHECK(info.labels == expect);  // both assign ids in first-seen order
  uint64_t total = 0;
  for (uint32_t s : info.sizes) total += s;
  CHECK(total == g.node_count());
}

// ---------------------------------------------------------------------------
// geodesics

TEST_CASE("geodesics of a path") {
  const GeodesicStats s = geodesic_stats(oracle::make_path(4), GeodesicMode::Exact());
  CHECK(s.diameter == 3);
  CHECK(s.average == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(s.diameter_is_lower_bound);
  CHECK_FALSE(s.no_connected_pairs);
}

TEST_CASE("geodesics of K5") {
  const GeodesicStats s = geodesic_stats(oracle::make_complete(5), GeodesicMode::Exact());
  CHECK(s.diameter == 1);
  CHECK(s.average == 1.0);
}

TEST_CASE("geodesics with no connected pair") {
  const GeodesicStats lonely =
      geodesic_stats(freeze(build_multigraph({"a"}, {})), GeodesicMode::Exact());
  CHECK(lonely.no_connected_pairs);
  CHECK(lonely.diameter == 0);
  CHECK(lonely.average == 0);
  const GeodesicStats empty = geodesic_stats(SimpleGraph{}, GeodesicMode::Exact());
  CHECK(empty.no_connected_pairs);
}

TEST_CASE("exact geodesics match Floyd-Warshall on random graphs") {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const SimpleGraph g = oracle::make_gnp(150, 0.02 + 0.01 * static_cast<double>(seed), seed);
    const auto expect = oracle::floyd_warshall_geodesics(g);
    const GeodesicStats got = geodesic_stats(g, GeodesicMode::Exact(), 2);
    if (!expect.has_pairs) {
      CHECK(got.no_connected_pairs);
      continue;
    }
    CHECK(got.diameter == expect.diameter);
    CHECK(got.average == doctest::Approx(expect.average).epsilon(1e-12));
  }
}

TEST_CASE("sampled geodesics: deterministic, flagged, exact when sample covers all") {
  const SimpleGraph g = oracle::make_connected(120, 80, 5);
  const GeodesicStats a = geodesic_stats(g, GeodesicMode::Sampled(20, 99));
  const GeodesicStats b = geodesic_stats(g, GeodesicMode::Sampled(20, 99));
  CHECK(a.diameter == b.diameter);
  CHECK(a.average == b.average);
  CHECK(a.diameter_is_lower_bound);

  const GeodesicStats exact = geodesic_stats(g, GeodesicMode::Exact());
  CHECK(a.diameter <= exact.diameter);
  // A sample of every source sees every pair (twice in exact mode, once per
  // sampled source here, which leaves the mean unchanged on both sides).
  const GeodesicStats full = geodesic_stats(g, GeodesicMode::Sampled(g.node_count(), 1));
  CHECK(full.diameter == exact.diameter);
  CHECK(full.average == doctest::Approx(exact.average).epsilon(1e-12));

  CHECK_THROWS_AS(geodesic_stats(g, GeodesicMode::Sampled(0, 1)), InputError);
}

// ---------------------------------------------------------------------------
// degree

TEST_CASE("degree of a path") {
  const DegreeResult r = degree_all(oracle::make_path(3));
  CHECK(r.values == std::vector<uint32_t>{1, 2, 1});
  CHECK(r.summary.minimum == 1);
  CHECK(r.summary.maximum == 2);
  CHECK(r.summary.average == doctest::Approx(4.0 / 3.0));
  CHECK(r.summary.median == 1);
}

TEST_CASE("degree of K4") {
  const DegreeResult r = degree_all(oracle::make_complete(4));
  for (uint32_t d : r.values) CHECK(d == 3);
}

// ---------------------------------------------------------------------------
// pagerank

TEST_CASE("pagerank of a cycle is exactly one per node") {
  for (uint32_t n : {4u, 5u, 100u}) {
    const PageRankResult r = pagerank(oracle::make_cycle(n));
    REQUIRE(r.converged);
    for (double score : r.scores) CHECK(score == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("pagerank scores sum to n on assorted graphs") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const SimpleGraph g = oracle::make_gnp(60, 0.05, seed);  // contains isolated nodes
    const PageRankResult r = pagerank(g);
    double sum = 0;
    for (double s : r.scores) {
      CHECK(s > 0);
      sum += s;
    }
    CHECK(sum == doctest::Approx(g.node_count()).epsilon(1e-6));
    CHECK(r.summary.average == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("pagerank matches the dense oracle on a star") {
  const SimpleGraph g = oracle::make_star(4);
  PageRankOptions opts;
  opts.tol = 1e-13;
  opts.max_iter = 10000;
  const PageRankResult r = pagerank(g, opts);
  const std::vector<double> expect = oracle::dense_pagerank(g, opts.damping, opts.tol, opts.max_iter);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    CHECK(r.scores[v] == doctest::Approx(expect[v]).epsilon(1e-8));
  }
}

TEST_CASE("pagerank flags non-convergence") {
  PageRankOptions opts;
  opts.max_iter = 2;
  opts.tol = 1e-15;
  const PageRankResult r = pagerank(oracle::make_connected(50, 30, 3), opts);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
  CHECK(r.residual > 0);
}

// ---------------------------------------------------------------------------
// clustering

TEST_CASE("clustering of a triangle") {
  const ClusteringResult r = clustering_all(oracle::make_complete(3));
  for (double c : r.values) CHECK(c == 1.0);
  CHECK(r.summary.average == 1.0);
}

TEST_CASE("clustering of a star is zero") {
  const ClusteringResult r = clustering_all(oracle::make_star(5));
  for (double c : r.values) CHECK(c == 0.0);
}

TEST_CASE("clustering matches the triple-loop oracle") {
  const SimpleGraph g = oracle::make_gnp(50, 0.2, 11);
  const ClusteringResult r = clustering_all(g, 2);
  const std::vector<double> expect = oracle::triple_loop_clustering(g);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    CHECK(r.values[v] == doctest::Approx(expect[v]).epsilon(1e-12));
  }
}

// ---------------------------------------------------------------------------
// eigenvector centrality

TEST_CASE("eigenvector of K3 is uniform") {
  const EigenvectorResult r = eigenvector_centrality(oracle::make_complete(3));
  REQUIRE(r.converged);
  CHECK_FALSE(r.degenerate);
  for (double s : r.scores) CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("eigenvector of a 3-path matches the analytic ratio") {
  // Scores proportional to (1, sqrt 2, 1); the center is 1/(1+sqrt 2) of the sum.
  const EigenvectorResult r = eigenvector_centrality(oracle::make_path(3));
  REQUIRE(r.converged);
  CHECK(r.scores[1] == doctest::Approx(1.0 / (1.0 + std::sqrt(2.0))).epsilon(1e-8));
  const std::vector<double> expect = oracle::dense_eigenvector(oracle::make_path(3));
  for (uint32_t v = 0; v < 3; ++v) CHECK(r.scores[v] == doctest::Approx(expect[v]).epsilon(1e-8));
}

TEST_CASE("eigenvector on an edgeless graph is an error") {
  CHECK_THROWS_AS(eigenvector_centrality(freeze(build_multigraph({"a", "b"}, {}))),
                  DegenerateGraphError);
}

TEST_CASE("two disjoint triangles are flagged degenerate") {
  const SimpleGraph g = freeze(build_multigraph(
      {}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}}));
  const EigenvectorResult r = eigenvector_centrality(g);
  CHECK(r.degenerate);
  // One component with edges plus isolated nodes is fine.
  const SimpleGraph ok = freeze(build_multigraph({"lonely"}, {{"a", "b"}, {"b", "c"}}));
  CHECK_FALSE(eigenvector_centrality(ok).degenerate);
}

TEST_CASE("eigenvector sums to one and matches the dense solver") {
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const SimpleGraph g = oracle::make_connected(30, 40, seed);
    EigenvectorOptions opts;
    opts.tol = 1e-12;
    opts.max_iter = 50000;
    const EigenvectorResult r = eigenvector_centrality(g, opts);
    REQUIRE(r.converged);
    double sum = 0;
    for (double s : r.scores) {
      CHECK(s >= 0);
      sum += s;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    const std::vector<double> expect = oracle::dense_eigenvector(g);
    for (uint32_t v = 0; v < g.node_count(); ++v) {
      CHECK(r.scores[v] == doctest::Approx(expect[v]).epsilon(1e-6));
    }
  }
}

// ---------------------------------------------------------------------------
// betweenness

TEST_CASE("betweenness of a path") {
  const BetweennessResult r = betweenness(oracle::make_path(3));
  CHECK(r.node_scores[0] == 0.0);
  CHECK(r.node_scores[1] == 1.0);
  CHECK(r.node_scores[2] == 0.0);
  // Edge (0,1) carries pairs (0,1) and (0,2); same for (1,2) by symmetry.
  CHECK(r.edge_scores[0] == 2.0);
  CHECK(r.edge_scores[1] == 2.0);
}

TEST_CASE("betweenness of a star") {
  const BetweennessResult r = betweenness(oracle::make_star(4));
  CHECK(r.node_scores[0] == 6.0);  // C(4,2) leaf pairs route through the center
  for (uint32_t leaf = 1; leaf <= 4; ++leaf) CHECK(r.node_scores[leaf] == 0.0);
}

TEST_CASE("betweenness matches path enumeration on random graphs") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const SimpleGraph g = oracle::make_gnp(25, 0.25, seed * 13 + 1);
    const BetweennessResult got = betweenness(g, 2);
    const oracle::BetweennessOracle expect = oracle::enumerate_betweenness(g);
    for (uint32_t v = 0; v < g.node_count(); ++v) {
      CHECK(std::abs(got.node_scores[v] - expect.node[v]) < 1e-9);  // absolute
    }
    const auto edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
      const double want = expect.edge.at({edges[e].u, edges[e].v});
      CHECK(std::abs(got.edge_scores[e] - want) < 1e-9);
    }
  }
}

TEST_CASE("degree-one nodes have exactly zero betweenness") {
  const SimpleGraph g = oracle::make_gnp(40, 0.08, 77);
  const BetweennessResult r = betweenness(g);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) <= 1) CHECK(r.node_scores[v] == 0.0);
  }
}

// ---------------------------------------------------------------------------
// closeness

TEST_CASE("closeness of K3 and a path") {
  const ClosenessResult k3 = closeness(oracle::make_complete(3));
  for (double c : k3.values) CHECK(c == 0.5);
  const ClosenessResult path = closeness(oracle::make_path(3));
  CHECK(path.values[0] == doctest::Approx(1.0 / 3.0));
  CHECK(path.values[1] == 0.5);
}

TEST_CASE("closeness is component-local and zero for isolated nodes") {
  const SimpleGraph g = freeze(build_multigraph({"solo"}, {{"a", "b"}}));
  const ClosenessResult r = closeness(g);
  CHECK(r.values[*g.index_of("solo")] == 0.0);
  CHECK(r.values[*g.index_of("a")] == 1.0);
}

TEST_CASE("closeness matches the BFS oracle") {
  const SimpleGraph g = oracle::make_connected(100, 120, 21);
  const ClosenessResult r = closeness(g, 2);
  const std::vector<double> expect = oracle::bfs_closeness(g);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    CHECK(r.values[v] == doctest::Approx(expect[v]).epsilon(1e-12));
  }
}

// ---------------------------------------------------------------------------
// overall metrics

TEST_CASE("overall metrics of a triangle") {
  const OverallMetrics m = overall_metrics(oracle::make_complete(3), GeodesicMode::Exact());
  CHECK(m.graph_type == "Undirected");
  CHECK(m.vertices == 3);
  CHECK(m.unique_edges == 3);
  CHECK(m.edges_with_duplicates == 0);
  CHECK(m.total_edges == 3);
  CHECK(m.self_loops == 0);
  CHECK(m.connected_components == 1);
  CHECK(m.single_vertex_components == 0);
  CHECK(m.max_vertices_in_component == 3);
  CHECK(m.max_edges_in_component == 3);
  CHECK(m.diameter == 1);
  CHECK(m.average_geodesic == 1.0);
  CHECK(m.density == 1.0);
}

TEST_CASE("overall metrics of two disjoint edges") {
  const SimpleGraph g = freeze(build_multigraph({}, {{"a", "b"}, {"c", "d"}}));
  const OverallMetrics m = overall_metrics(g, GeodesicMode::Exact());
  CHECK(m.connected_components == 2);
  CHECK(m.max_vertices_in_component == 2);
  CHECK(m.max_edges_in_component == 1);
  CHECK(m.diameter == 1);
}

// ---------------------------------------------------------------------------
// cross-cutting properties

TEST_CASE("relabeling nodes permutes every metric identically") {
  const SimpleGraph g = oracle::make_gnp(40, 0.12, 3);
  // Relabel by reversing the id strings' order: new id = "z" + old.
  MultiGraph renamed;
  for (uint32_t v = 0; v < g.node_count(); ++v) renamed.nodes.push_back("z" + g.id_of(v));
  for (const auto& e : g.edges()) {
    renamed.edges.emplace_back("z" + g.id_of(e.u), "z" + g.id_of(e.v));
  }
  const SimpleGraph h = freeze(renamed);
  REQUIRE(h.node_count() == g.node_count());
  // Same dense order here (prefixing preserves relative order), so columns
  // must match element-wise.
  const AnalysisOptions opts;
  const AnalysisResult a = analyze_graph(g, opts);
  const AnalysisResult b = analyze_graph(h, opts);
  for (Metric m : kAllMetrics) {
    const auto ca = a.nodes.column(m);
    const auto cb = b.nodes.column(m);
    for (uint32_t v = 0; v < g.node_count(); ++v) CHECK(ca[v] == cb[v]);
  }
}

TEST_CASE("metric results are bit-identical across thread counts") {
  const SimpleGraph g = oracle::make_gnp(120, 0.05, 9);
  const BetweennessResult b1 = betweenness(g, 1);
  const BetweennessResult b4 = betweenness(g, 4);
  CHECK(b1.node_scores == b4.node_scores);
  CHECK(b1.edge_scores == b4.edge_scores);

  const ClosenessResult c1 = closeness(g, 1);
  const ClosenessResult c4 = closeness(g, 4);
  CHECK(c1.values == c4.values);

  const GeodesicStats g1 = geodesic_stats(g, GeodesicMode::Exact(), 1);
  const GeodesicStats g4 = geodesic_stats(g, GeodesicMode::Exact(), 4);
  CHECK(g1.diameter == g4.diameter);
  CHECK(g1.average == g4.average);

  const PageRankResult p1 = pagerank(g, {}, 1);
  const PageRankResult p4 = pagerank(g, {}, 4);
  CHECK(p1.scores == p4.scores);

  const EigenvectorResult e1 = eigenvector_centrality(g, {}, 1);
  const EigenvectorResult e4 = eigenvector_centrality(g, {}, 4);
  CHECK(e1.scores == e4.scores);

  const ClusteringResult l1 = clustering_all(g, 1);
  const ClusteringResult l4 = clustering_all(g, 4);
  CHECK(l1.values == l4.values);
}

TEST_CASE("analyze_graph composes the suite") {
  const SimpleGraph g = oracle::make_connected(30, 20, 4);
  const AnalysisResult r = analyze_graph(g);
  CHECK(r.overall.vertices == 30);
  CHECK(r.nodes.row_count() == 30);
  CHECK(r.edge_betweenness.size() == g.edge_count());
  CHECK(r.summary(Metric::pagerank).average == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(analyze_graph(SimpleGraph{}), InputError);
}

TEST_SUITE_END();
