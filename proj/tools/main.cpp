// Command-line pipeline: generate -> crawl -> clean -> analyze -> filter ->
// layout -> render. Every stage reads and writes plain files, so intermediate
// artifacts stay inspectable; all outputs are written atomically.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sna/cleaner.hpp"
#include "sna/crawl.hpp"
#include "sna/csv.hpp"
#include "sna/error.hpp"
#include "sna/filter.hpp"
#include "sna/fsutil.hpp"
#include "sna/graphml.hpp"
#include "sna/layout.hpp"
#include "sna/metrics.hpp"
#include "sna/parallel.hpp"
#include "sna/report.hpp"
#include "sna/svg.hpp"

namespace {

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

sna::SimpleGraph load_simple_graph(const std::string& path) {
  std::vector<std::string> warnings;
  sna::MultiGraph mg = sna::load_graphml(path, &warnings);
  print_warnings(warnings);
  return sna::freeze(mg);
}

sna::GeodesicMode parse_geodesic_flag(const std::string& value, uint64_t seed) {
  if (value == "exact") return sna::GeodesicMode::Exact();
  if (value.rfind("sampled:", 0) == 0) {
    const std::string count = value.substr(8);
    try {
      const unsigned long k = std::stoul(count);
      if (k == 0) throw sna::InputError("--geodesic sample size must be >= 1");
      return sna::GeodesicMode::Sampled(static_cast<uint32_t>(k), seed);
    } catch (const std::logic_error&) {
      throw sna::InputError("bad --geodesic sample size \"" + count + "\"");
    }
  }
  throw sna::InputError("--geodesic expects \"exact\" or \"sampled:K\"");
}

struct GenerateArgs {
  std::string model;
  uint32_t nodes = 0;
  std::optional<double> m_links;
  std::optional<double> edge_prob;
  std::optional<uint32_t> k_neighbors;
  std::optional<double> rewire;
  double public_fraction = 1.0;
  double page_fraction = 0.0;
  uint64_t seed = 0;
  std::string output;
  std::string meta;
};

int run_generate(const GenerateArgs& args) {
  sna::GeneratorSpec spec;
  spec.n = args.nodes;
  spec.public_fraction = args.public_fraction;
  spec.page_fraction = args.page_fraction;
  spec.rng_seed = args.seed;
  if (args.model == "ba") {
    spec.model = sna::GeneratorSpec::Model::preferential_attachment;
    if (!args.m_links) throw sna::InputError("model ba requires --m");
    spec.m_links = *args.m_links;
  } else if (args.model == "er") {
    spec.model = sna::GeneratorSpec::Model::random_uniform;
    if (!args.edge_prob) throw sna::InputError("model er requires --p");
    spec.edge_prob = *args.edge_prob;
  } else if (args.model == "ws") {
    spec.model = sna::GeneratorSpec::Model::small_world;
    if (!args.k_neighbors || !args.rewire) throw sna::InputError("model ws requires --k and --rewire");
    spec.k_neighbors = *args.k_neighbors;
    spec.rewire_prob = *args.rewire;
  } else {
    throw sna::InputError("unknown model \"" + args.model + "\" (expected ba, er or ws)");
  }

  const sna::TruthNetwork truth = sna::generate(spec);
  sna::save_graphml(truth.graph, args.output);
  if (!args.meta.empty()) {
    sna::atomic_write_file(args.meta, sna::truth_meta_json(truth));
  }
  std::cerr << "generated " << truth.graph.node_count() << " nodes, "
            << truth.graph.edge_count() << " edges\n";
  return 0;
}

int run_crawl(const std::string& input, const std::string& meta_path, const std::string& from,
              uint32_t depth, const std::string& output) {
  sna::TruthNetwork truth =
      sna::truth_from_parts(load_simple_graph(input), sna::read_file(meta_path));
  sna::CrawlConfig cfg;
  cfg.seed_node = from;
  cfg.max_depth = depth;
  const sna::MultiGraph raw = sna::crawl(truth, cfg);
  // Raw output keeps duplicates; write records verbatim as GraphML.
  sna::atomic_write_file(output, [&](std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"uid\" for=\"node\" attr.name=\"uid\" attr.type=\"string\"/>\n"
        << "  <graph edgedefault=\"undirected\">\n";
    auto escape = [](const std::string& s) {
      std::string r;
      for (char c : s) {
        if (c == '&') r += "&amp;";
        else if (c == '<') r += "&lt;";
        else if (c == '>') r += "&gt;";
        else if (c == '"') r += "&quot;";
        else r.push_back(c);
      }
      return r;
    };
    for (const auto& id : raw.nodes) {
      out << "    <node id=\"" << escape(id) << "\"><data key=\"uid\">" << escape(id)
          << "</data></node>\n";
    }
    for (const auto& [a, b] : raw.edges) {
      out << "    <edge source=\"" << escape(a) << "\" target=\"" << escape(b) << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
  });
  std::cerr << "crawl recorded " << raw.nodes.size() << " node records, " << raw.edges.size()
            << " edge records\n";
  return 0;
}

int run_clean(const std::string& input, const std::string& output, const std::string& stats_path) {
  std::vector<std::string> warnings;
  const sna::MultiGraph raw = sna::load_graphml(input, &warnings);
  print_warnings(warnings);
  const sna::CleanResult result = sna::clean(raw);
  sna::save_graphml(sna::freeze(result.graph), output);
  if (!stats_path.empty()) {
    sna::atomic_write_file(stats_path, sna::cleaning_stats_json(result.stats));
  }
  std::cerr << "removed " << result.stats.duplicate_nodes_removed << " duplicate nodes, "
            << result.stats.parallel_edges_removed << " parallel edges, "
            << result.stats.self_loops_removed << " self-loops\n";
  return 0;
}

int run_analyze(const std::string& input, const std::string& geodesic, unsigned threads,
                uint64_t sample_seed, const std::string& report_path,
                const std::string& nodes_path, const std::string& edges_path) {
  const sna::SimpleGraph g = load_simple_graph(input);
  sna::AnalysisOptions opts;
  opts.geodesic = parse_geodesic_flag(geodesic, sample_seed);
  opts.threads = threads;
  const sna::AnalysisResult result = sna::analyze_graph(g, opts);
  if (!result.pagerank_converged) std::cerr << "warning: pagerank did not converge\n";
  if (!result.eigenvector_converged) {
    std::cerr << "warning: eigenvector centrality did not converge\n";
  }
  if (result.eigenvector_degenerate) {
    std::cerr << "warning: several components carry edges; the dominant eigenvector "
                 "is not unique\n";
  }

  sna::atomic_write_file(report_path, sna::metrics_report_json(result));
  sna::atomic_write_file(nodes_path, [&](std::ostream& out) {
    sna::write_node_metrics_csv(g, result.nodes, out);
  });
  if (!edges_path.empty()) {
    sna::atomic_write_file(edges_path, [&](std::ostream& out) {
      sna::write_edge_metrics_csv(g, result.edge_betweenness, out);
    });
  }
  return 0;
}

int run_filter(const std::string& input, const std::string& metrics_path,
               std::optional<uint32_t> top_k, const std::string& by,
               const std::string& min_expr, bool giant, const std::string& output) {
  const sna::SimpleGraph g = load_simple_graph(input);

  const int modes = (top_k ? 1 : 0) + (min_expr.empty() ? 0 : 1) + (giant ? 1 : 0);
  if (modes != 1) {
    throw sna::InputError("choose exactly one of --top-k/--by, --min or --giant");
  }

  sna::FilterSpec spec;
  if (giant) {
    spec.mode = sna::FilterSpec::GiantComponent{};
  } else if (top_k) {
    if (by.empty()) throw sna::InputError("--top-k requires --by METRIC");
    spec.metric = sna::metric_from_name(by);
    spec.mode = sna::FilterSpec::TopK{*top_k};
  } else {
    const auto eq = min_expr.find('=');
    if (eq == std::string::npos) throw sna::InputError("--min expects METRIC=VALUE");
    spec.metric = sna::metric_from_name(min_expr.substr(0, eq));
    double cutoff = 0;
    try {
      cutoff = std::stod(min_expr.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw sna::InputError("bad --min value \"" + min_expr.substr(eq + 1) + "\"");
    }
    spec.mode = sna::FilterSpec::Threshold{cutoff, true};
  }

  sna::NodeMetricsTable table;
  if (!giant) {
    if (metrics_path.empty()) throw sna::InputError("metric filters require --metrics TABLE.csv");
    std::istringstream in(sna::read_file(metrics_path));
    table = sna::read_node_metrics_csv(in, g);
  } else {
    for (sna::Metric m : sna::kAllMetrics) table.column(m).assign(g.node_count(), 0.0);
  }

  const std::vector<uint32_t> selected = sna::select_nodes(g, table, spec);
  const sna::SimpleGraph sub = sna::induced_subgraph(g, selected);
  sna::save_graphml(sub, output);
  std::cerr << "kept " << sub.node_count() << " of " << g.node_count() << " nodes, "
            << sub.edge_count() << " edges\n";
  return 0;
}

int run_layout(const std::string& input, uint32_t iterations, double width, double height,
               uint64_t seed, unsigned threads, const std::string& output) {
  const sna::SimpleGraph g = load_simple_graph(input);
  sna::LayoutParams params;
  params.width = width;
  params.height = height;
  params.iterations = iterations;
  params.rng_seed = seed;
  const std::vector<sna::Vec2> positions = sna::fruchterman_reingold(g, params, threads);
  sna::atomic_write_file(output, [&](std::ostream& out) {
    sna::write_positions_csv(g, positions, out);
  });
  return 0;
}

int run_render(const std::string& input, const std::string& positions_path,
               const std::string& size_by, const std::string& metrics_path,
               const std::string& output) {
  const sna::SimpleGraph g = load_simple_graph(input);
  std::istringstream pin(sna::read_file(positions_path));
  const std::vector<sna::Vec2> positions = sna::read_positions_csv(pin, g);

  sna::SvgOptions options;
  if (!size_by.empty()) {
    if (metrics_path.empty()) throw sna::InputError("--size-by requires --metrics TABLE.csv");
    const sna::Metric metric = sna::metric_from_name(size_by);
    std::istringstream min(sna::read_file(metrics_path));
    const sna::NodeMetricsTable table = sna::read_node_metrics_csv(min, g);
    const auto column = table.column(metric);
    options.node_size_metric.emplace(column.begin(), column.end());
  }
  sna::atomic_write_file(output, sna::render_svg(g, positions, options));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friendship-graph toolkit: simulated crawling, cleaning, SNA metrics, "
               "filtering and force-directed rendering"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic ground-truth network");
  generate->add_option("--model", gen.model, "ba | er | ws")->required();
  generate->add_option("--nodes", gen.nodes, "Node count")->required();
  generate->add_option("--m", gen.m_links, "ba: links per arriving node");
  generate->add_option("--p", gen.edge_prob, "er: edge probability");
  generate->add_option("--k", gen.k_neighbors, "ws: even ring degree");
  generate->add_option("--rewire", gen.rewire, "ws: rewiring probability");
  generate->add_option("--public-fraction", gen.public_fraction, "Fraction of public profiles");
  generate->add_option("--page-fraction", gen.page_fraction, "Fraction of page entities");
  generate->add_option("--seed", gen.seed, "RNG seed")->required();
  generate->add_option("-o,--output", gen.output, "Truth GraphML path")->required();
  generate->add_option("--meta", gen.meta, "Sidecar JSON with visibility/kind");

  // crawl
  std::string crawl_input, crawl_meta, crawl_from, crawl_output;
  uint32_t crawl_depth = 3;
  auto* crawl = app.add_subcommand("crawl", "Run the depth-limited BFS agent on a truth network");
  crawl->add_option("input", crawl_input, "Truth GraphML")->required();
  crawl->add_option("--meta", crawl_meta, "Sidecar JSON from generate")->required();
  crawl->add_option("--from", crawl_from, "Seed profile id")->required();
  crawl->add_option("--depth", crawl_depth, "Expansion depth (default 3)");
  crawl->add_option("-o,--output", crawl_output, "Raw observations GraphML")->required();

  // clean
  std::string clean_input, clean_output, clean_stats;
  auto* clean_cmd = app.add_subcommand("clean", "Deduplicate nodes, drop loops and parallel edges");
  clean_cmd->add_option("input", clean_input, "Raw GraphML")->required();
  clean_cmd->add_option("-o,--output", clean_output, "Cleaned GraphML")->required();
  clean_cmd->add_option("--stats", clean_stats, "Write cleaning counters as JSON");

  // analyze
  std::string an_input, an_geodesic = "exact", an_report, an_nodes, an_edges;
  unsigned an_threads = sna::default_thread_count();
  uint64_t an_sample_seed = 0;
  auto* analyze = app.add_subcommand("analyze", "Compute the full metric suite");
  analyze->add_option("input", an_input, "Cleaned GraphML")->required();
  analyze->add_option("--geodesic", an_geodesic, "exact | sampled:K (default exact)");
  analyze->add_option("--sample-seed", an_sample_seed, "Seed for sampled geodesics");
  analyze->add_option("--threads", an_threads, "Worker count (default: all cores)");
  analyze->add_option("--report", an_report, "Overall+summary JSON")->required();
  analyze->add_option("--nodes", an_nodes, "Per-node metrics CSV")->required();
  analyze->add_option("--edges", an_edges, "Per-edge betweenness CSV");

  // filter
  std::string f_input, f_metrics, f_by, f_min, f_output;
  std::optional<uint32_t> f_top_k;
  bool f_giant = false;
  auto* filter = app.add_subcommand("filter", "Select nodes by metric and induce the subgraph");
  filter->add_option("input", f_input, "Cleaned GraphML")->required();
  filter->add_option("--metrics", f_metrics, "Per-node metrics CSV from analyze");
  filter->add_option("--top-k", f_top_k, "Keep the top K nodes by --by");
  filter->add_option("--by", f_by, "Ranking metric for --top-k");
  filter->add_option("--min", f_min, "Keep nodes with METRIC=VALUE or more");
  filter->add_flag("--giant", f_giant, "Keep the giant component");
  filter->add_option("-o,--output", f_output, "Subgraph GraphML")->required();

  // layout
  std::string l_input, l_output;
  uint32_t l_iterations = 50;
  double l_width = 1000, l_height = 1000;
  uint64_t l_seed = 0;
  unsigned l_threads = sna::default_thread_count();
  auto* layout = app.add_subcommand("layout", "Fruchterman-Reingold positions");
  layout->add_option("input", l_input, "Subgraph GraphML")->required();
  layout->add_option("--iterations", l_iterations, "Iterations (default 50)");
  layout->add_option("--width", l_width, "Frame width (default 1000)");
  layout->add_option("--height", l_height, "Frame height (default 1000)");
  layout->add_option("--seed", l_seed, "RNG seed for initial placement");
  layout->add_option("--threads", l_threads, "Worker count (default: all cores)");
  layout->add_option("-o,--output", l_output, "Positions CSV")->required();

  // render
  std::string r_input, r_positions, r_size_by, r_metrics, r_output;
  auto* render = app.add_subcommand("render", "Render positions to SVG");
  render->add_option("input", r_input, "Subgraph GraphML")->required();
  render->add_option("--positions", r_positions, "Positions CSV from layout")->required();
  render->add_option("--size-by", r_size_by, "Metric for node radii");
  render->add_option("--metrics", r_metrics, "Per-node metrics CSV (with --size-by)");
  render->add_option("-o,--output", r_output, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*crawl) return run_crawl(crawl_input, crawl_meta, crawl_from, crawl_depth, crawl_output);
    if (*clean_cmd) return run_clean(clean_input, clean_output, clean_stats);
    if (*analyze) {
      return run_analyze(an_input, an_geodesic, an_threads, an_sample_seed, an_report, an_nodes,
                         an_edges);
    }
    if (*filter) return run_filter(f_input, f_metrics, f_top_k, f_by, f_min, f_giant, f_output);
    if (*layout) return run_layout(l_input, l_iterations, l_width, l_height, l_seed, l_threads, l_output);
    if (*render) return run_render(r_input, r_positions, r_size_by, r_metrics, r_output);
  } catch (const sna::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
