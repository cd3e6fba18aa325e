#include "sna/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sna/error.hpp"

namespace sna {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const SimpleGraph& g, std::span<const Vec2> positions,
                       const SvgOptions& options) {
  const uint32_t n = g.node_count();
  if (positions.size() != n) {
    throw InputError("render: positions cover " + std::to_string(positions.size()) +
                     " nodes, graph has " + std::to_string(n));
  }
  for (const auto& p : positions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("render: non-finite position");
    }
  }

  std::vector<double> radius(n, options.default_radius);
  if (options.node_size_metric) {
    const auto& metric = *options.node_size_metric;
    if (metric.size() != n) {
      throw InputError("render: size metric covers " + std::to_string(metric.size()) +
                       " nodes, graph has " + std::to_string(n));
    }
    if (n > 0) {
      const auto [lo_it, hi_it] = std::minmax_element(metric.begin(), metric.end());
      const double lo = *lo_it, hi = *hi_it;
      for (uint32_t v = 0; v < n; ++v) {
        radius[v] = hi > lo ? options.min_radius + (metric[v] - lo) / (hi - lo) *
                                                       (options.max_radius - options.min_radius)
                            : (options.min_radius + options.max_radius) / 2.0;
      }
    }
  }

  double max_x = 0, max_y = 0, max_r = 0;
  for (uint32_t v = 0; v < n; ++v) {
    max_x = std::max(max_x, positions[v].x);
    max_y = std::max(max_y, positions[v].y);
    max_r = std::max(max_r, radius[v]);
  }
  const long width = std::max(1L, std::lround(std::ceil(max_x + max_r + 2)));
  const long height = std::max(1L, std::lround(std::ceil(max_y + max_r + 2)));

  std::string svg;
  svg.reserve(128 + 64 * (n + g.edge_count()));
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
  for (const auto& e : g.edges()) {
    svg += "  <line x1=\"" + fmt(positions[e.u].x) + "\" y1=\"" + fmt(positions[e.u].y) +
           "\" x2=\"" + fmt(positions[e.v].x) + "\" y2=\"" + fmt(positions[e.v].y) +
           "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
  }
  for (uint32_t v = 0; v < n; ++v) {
    svg += "  <circle cx=\"" + fmt(positions[v].x) + "\" cy=\"" + fmt(positions[v].y) +
           "\" r=\"" + fmt(radius[v]) + "\" fill=\"#1f77b4\" fill-opacity=\"0.85\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace sna
