#include <omp.h>

#include "kernels.hpp"

namespace mplab {

SampleSet sample_orbit(const FlagPointF& x, Subgroup s, std::size_t n, std::uint64_t seed, double lambda1,
                       double lambda2) {
  detail::check_sample_args(n);
  SampleSet out{seed, s, x, lambda1, lambda2, std::vector<Sample>(n)};
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    out.samples[static_cast<std::size_t>(i)] =
        detail::orbit_sample(x, s, seed, static_cast<std::size_t>(i), lambda1, lambda2);
  return out;
}

namespace {

double directed_squared(std::span<const R3Vector> a, std::span<const R3Vector> b) {
  double worst = 0;
  const auto count = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::int64_t i = 0; i < count; ++i)
    worst = std::max(worst, detail::nearest_squared(a[static_cast<std::size_t>(i)], b));
  return worst;
}

}  // namespace

double hausdorff_distance(std::span<const R3Vector> a, std::span<const R3Vector> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty point cloud");
  return std::sqrt(std::max(directed_squared(a, b), directed_squared(b, a)));
}

}  // namespace mplab
