#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sna/graph.hpp"
#include "sna/layout.hpp"

namespace sna {

struct SvgOptions {
  // Per-node values (dense-index order) sized into [min_radius, max_radius]
  // by an affine map; without a metric every node gets default_radius.
  std::optional<std::vector<double>> node_size_metric;
  double min_radius = 2;
  double max_radius = 12;
  double default_radius = 4;
};

// Static SVG 1.1 rendering: edges first as lines, nodes above as circles.
// Deterministic bytes for a given (graph, positions, options).
std::string render_svg(const SimpleGraph& g, std::span<const Vec2> positions,
                       const SvgOptions& options = {});

}  // namespace sna
