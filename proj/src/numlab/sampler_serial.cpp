#include "kernels.hpp"

namespace mplab {

SampleSet sample_orbit_serial(const FlagPointF& x, Subgroup s, std::size_t n, std::uint64_t seed, double lambda1,
                              double lambda2) {
  detail::check_sample_args(n);
  SampleSet out{seed, s, x, lambda1, lambda2, {}};
  out.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.samples.push_back(detail::orbit_sample(x, s, seed, i, lambda1, lambda2));
  return out;
}

double hausdorff_distance_serial(std::span<const R3Vector> a, std::span<const R3Vector> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty point cloud");
  double worst = 0;
  for (const auto& u : a) worst = std::max(worst, detail::nearest_squared(u, b));
  for (const auto& v : b) worst = std::max(worst, detail::nearest_squared(v, a));
  return std::sqrt(worst);
}

}  // namespace mplab
