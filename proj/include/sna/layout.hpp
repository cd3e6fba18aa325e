#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct LayoutParams {
  double width = 1000;
  double height = 1000;
  uint32_t iterations = 50;
  // Defaults to width / 10. Temperature decays linearly to 0 over the run.
  std::optional<double> initial_temperature;
  uint64_t rng_seed = 0;
};

// Largest graph the exact O(n^2) force loop accepts; bigger inputs should be
// filtered down first.
inline constexpr uint32_t kMaxLayoutNodes = 50000;

// Classic Fruchterman-Reingold: k = sqrt(width*height/n), repulsion k^2/d
// between all pairs, attraction d^2/k along edges, displacement capped by a
// linearly cooling temperature, positions clamped to the frame. Initial
// placement is uniform random from rng_seed (a single node starts centered).
// Bit-identical results for a fixed seed, independent of the thread count.
std::vector<Vec2> fruchterman_reingold(const SimpleGraph& g, const LayoutParams& params,
                                       unsigned threads = 1);

}  // namespace sna
