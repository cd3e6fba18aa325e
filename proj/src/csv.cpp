#include "sna/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "sna/error.hpp"

namespace sna {

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// One CSV record; handles quoted fields, embedded separators and newlines.
// Returns nullopt at end of input. `line` tracks the physical line number.
std::optional<std::vector<std::string>> read_row(std::istream& in, int& line) {
  if (in.peek() == EOF) return std::nullopt;
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (;;) {
    const int c = in.get();
    if (c == EOF) {
      if (quoted) throw ParseError("unterminated quoted field", line);
      break;
    }
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          fields.back().push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        fields.back().push_back(static_cast<char>(c));
      }
      continue;
    }
    if (c == '"' && fields.back().empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\n') {
      ++line;
      break;
    } else if (c == '\r') {
      if (in.peek() == '\n') {
        in.get();
        ++line;
      }
      break;
    } else {
      fields.back().push_back(static_cast<char>(c));
    }
  }
  return fields;
}

double parse_double(const std::string& s, int line) {
  double value = 0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad numeric field \"" + s + "\"", line);
  }
  return value;
}

constexpr const char* kNodeHeader =
    "node_id,degree,pagerank,clustering,eigenvector,betweenness,closeness";

}  // namespace

std::string csv_escape(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void write_node_metrics_csv(const SimpleGraph& g, const NodeMetricsTable& table,
                            std::ostream& out) {
  out << kNodeHeader << "\n";
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    out << csv_escape(g.id_of(v));
    for (Metric m : kAllMetrics) out << ',' << fmt6(table.column(m)[v]);
    out << "\n";
  }
}

NodeMetricsTable read_node_metrics_csv(std::istream& in, const SimpleGraph& g) {
  int line = 1;
  auto header = read_row(in, line);
  if (!header) throw ParseError("empty metrics table", line);

  std::unordered_map<std::string, size_t> col;
  for (size_t i = 0; i < header->size(); ++i) col[(*header)[i]] = i;
  if (!col.count("node_id")) throw ParseError("metrics table has no node_id column", 1);
  size_t metric_col[6];
  for (Metric m : kAllMetrics) {
    const auto it = col.find(std::string(metric_name(m)));
    if (it == col.end()) {
      throw ParseError("metrics table has no " + std::string(metric_name(m)) + " column", 1);
    }
    metric_col[static_cast<int>(m)] = it->second;
  }
  const size_t id_col = col["node_id"];

  NodeMetricsTable table;
  for (Metric m : kAllMetrics) table.column(m).assign(g.node_count(), 0.0);
  std::vector<bool> filled(g.node_count(), false);
  while (auto row = read_row(in, line)) {
    if (row->size() == 1 && (*row)[0].empty()) continue;  // trailing newline
    if (row->size() < header->size()) {
      throw ParseError("row has " + std::to_string(row->size()) + " fields, header has " +
                           std::to_string(header->size()),
                       line);
    }
    const auto v = g.index_of((*row)[id_col]);
    if (!v) continue;  // rows for filtered-away nodes are fine to skip
    for (Metric m : kAllMetrics) {
      table.column(m)[*v] = parse_double((*row)[metric_col[static_cast<int>(m)]], line);
    }
    filled[*v] = true;
  }
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    if (!filled[v]) {
      throw InputError("metrics table has no row for node \"" + g.id_of(v) + "\"");
    }
  }
  return table;
}

void write_positions_csv(const SimpleGraph& g, std::span<const Vec2> positions,
                         std::ostream& out) {
  out << "node_id,x,y\n";
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    out << csv_escape(g.id_of(v)) << ',' << fmt6(positions[v].x) << ',' << fmt6(positions[v].y)
        << "\n";
  }
}

std::vector<Vec2> read_positions_csv(std::istream& in, const SimpleGraph& g) {
  int line = 1;
  auto header = read_row(in, line);
  if (!header || header->size() < 3 || (*header)[0] != "node_id" || (*header)[1] != "x" ||
      (*header)[2] != "y") {
    throw ParseError("positions file must start with node_id,x,y", 1);
  }
  std::vector<Vec2> positions(g.node_count());
  std::vector<bool> filled(g.node_count(), false);
  while (auto row = read_row(in, line)) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() < 3) throw ParseError("positions row needs 3 fields", line);
    const auto v = g.index_of((*row)[0]);
    if (!v) continue;
    positions[*v] = {parse_double((*row)[1], line), parse_double((*row)[2], line)};
    filled[*v] = true;
  }
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    if (!filled[v]) throw InputError("no position for node \"" + g.id_of(v) + "\"");
  }
  return positions;
}

void write_edge_metrics_csv(const SimpleGraph& g, std::span<const double> edge_betweenness,
                            std::ostream& out) {
  out << "source,target,betweenness\n";
  const auto edges = g.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    out << csv_escape(g.id_of(edges[e].u)) << ',' << csv_escape(g.id_of(edges[e].v)) << ','
        << fmt6(edge_betweenness[e]) << "\n";
  }
}

}  // namespace sna
