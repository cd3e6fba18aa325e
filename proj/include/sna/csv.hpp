#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sna/graph.hpp"
#include "sna/layout.hpp"
#include "sna/metrics.hpp"

namespace sna {

// Per-node metrics table, dense-index order, reals with 6 significant digits.
// Header: node_id,degree,pagerank,clustering,eigenvector,betweenness,closeness
void write_node_metrics_csv(const SimpleGraph& g, const NodeMetricsTable& table,
                            std::ostream& out);
// Reads a table back, aligned to g's dense order. Columns are located by
// name; rows for nodes outside g are ignored, missing nodes are an error.
NodeMetricsTable read_node_metrics_csv(std::istream& in, const SimpleGraph& g);

// node_id,x,y with 6 significant digits, dense-index order.
void write_positions_csv(const SimpleGraph& g, std::span<const Vec2> positions,
                         std::ostream& out);
std::vector<Vec2> read_positions_csv(std::istream& in, const SimpleGraph& g);

// source,target,betweenness in canonical edge order.
void write_edge_metrics_csv(const SimpleGraph& g, std::span<const double> edge_betweenness,
                            std::ostream& out);

// RFC-4180-style escaping; fields are quoted only when they need to be.
std::string csv_escape(const std::string& field);

}  // namespace sna
