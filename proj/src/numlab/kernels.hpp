#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

#include "mplab/numlab.hpp"

namespace mplab::detail {

// Sample i of an orbit; the whole body of the sampling loop.
inline Sample orbit_sample(const FlagPointF& x, Subgroup s, std::uint64_t seed, std::size_t i, double lambda1,
                           double lambda2) {
  GroupElement2x2 g;
  if (i > 0) {
    CounterRng rng(seed, i);
    g = random_element(s, rng);
  }
  const FlagPointF p = x.act(g).normalized();
  return {p, moment_map(p, lambda1, lambda2)};
}

inline void check_sample_args(std::size_t n) {
  if (n < 1) throw std::invalid_argument("sample_orbit: n must be >= 1");
}

inline double squared_distance(const R3Vector& u, const R3Vector& v) {
  const double dx = u[0] - v[0], dy = u[1] - v[1], dz = u[2] - v[2];
  return dx * dx + dy * dy + dz * dz;
}

inline double nearest_squared(const R3Vector& u, std::span<const R3Vector> cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : cloud) best = std::min(best, squared_distance(u, v));
  return best;
}

}  // namespace mplab::detail
