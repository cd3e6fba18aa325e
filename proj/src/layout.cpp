#include "sna/layout.hpp"

#include <algorithm>
#include <cmath>

#include "sna/error.hpp"
#include "sna/parallel.hpp"
#include "sna/rng.hpp"

namespace sna {

namespace {

constexpr double kMinDistance = 1e-9;
constexpr double kPi = 3.14159265358979323846;

// Deterministic escape direction for coincident nodes: both endpoints derive
// the same unit vector from (seed, iteration, pair), so their pushes stay
// opposite no matter which worker computes them.
Vec2 escape_direction(uint64_t seed, uint32_t iteration, uint32_t a, uint32_t b) {
  uint64_t h = hash_combine(seed, iteration);
  h = hash_combine(h, (static_cast<uint64_t>(a) << 32) | b);
  const double angle = 2.0 * kPi * (static_cast<double>(h >> 11) * 0x1.0p-53);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::vector<Vec2> fruchterman_reingold(const SimpleGraph& g, const LayoutParams& params,
                                       unsigned threads) {
  if (!(params.width > 0) || !(params.height > 0) || !std::isfinite(params.width) ||
      !std::isfinite(params.height)) {
    throw InputError("layout frame dimensions must be positive and finite");
  }
  const uint32_t n = g.node_count();
  if (n == 0) return {};
  if (n > kMaxLayoutNodes) {
    throw InputError("layout supports up to " + std::to_string(kMaxLayoutNodes) +
                     " nodes (" + std::to_string(n) + " given); filter the graph first");
  }
  if (threads == 0) threads = 1;

  std::vector<Vec2> pos(n);
  if (n == 1) {
    pos[0] = {params.width / 2.0, params.height / 2.0};
    return pos;
  }
  Rng rng(params.rng_seed);
  for (auto& p : pos) {
    p.x = rng.uniform() * params.width;
    p.y = rng.uniform() * params.height;
  }

  const double k = std::sqrt(params.width * params.height / static_cast<double>(n));
  const double t0 = params.initial_temperature.value_or(params.width / 10.0);
  std::vector<Vec2> disp(n);

  for (uint32_t iter = 0; iter < params.iterations; ++iter) {
    const double temp =
        t0 * (1.0 - static_cast<double>(iter) / static_cast<double>(params.iterations));

    parallel_for(0, n, threads, 64, [&](uint32_t v, unsigned) {
      double dx = 0, dy = 0;
      const Vec2 pv = pos[v];
      for (uint32_t u = 0; u < n; ++u) {
        if (u == v) continue;
        double ex = pv.x - pos[u].x;
        double ey = pv.y - pos[u].y;
        double dist = std::sqrt(ex * ex + ey * ey);
        if (dist < kMinDistance) {
          const Vec2 dir = escape_direction(params.rng_seed, iter, std::min(u, v), std::max(u, v));
          const double sign = v > u ? 1.0 : -1.0;
          ex = sign * dir.x;
          ey = sign * dir.y;
          dist = kMinDistance;
        } else {
          ex /= dist;
          ey /= dist;
        }
        const double force = k * k / dist;
        dx += ex * force;
        dy += ey * force;
      }
      for (uint32_t u : g.neighbors(v)) {
        double ex = pv.x - pos[u].x;
        double ey = pv.y - pos[u].y;
        double dist = std::sqrt(ex * ex + ey * ey);
        if (dist < kMinDistance) continue;  // coincident neighbors only repel
        const double force = dist * dist / k;
        dx -= (ex / dist) * force;
        dy -= (ey / dist) * force;
      }
      disp[v] = {dx, dy};
    });

    for (uint32_t v = 0; v < n; ++v) {
      const double len = std::sqrt(disp[v].x * disp[v].x + disp[v].y * disp[v].y);
      if (len > 0) {
        const double step = std::min(len, temp);
        pos[v].x += disp[v].x / len * step;
        pos[v].y += disp[v].y / len * step;
      }
      pos[v].x = std::clamp(pos[v].x, 0.0, params.width);
      pos[v].y = std::clamp(pos[v].y, 0.0, params.height);
    }
  }
  return pos;
}

}  // namespace sna
