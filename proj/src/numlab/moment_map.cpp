#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kernels.hpp"

namespace mplab {

double norm(const R3Vector& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double angle_from_chamber_ray(const R3Vector& v) {
  if (norm(v) < 1e-12) return 0.0;  // origin lies in the closed chamber
  return std::atan2(std::hypot(v[0], v[1]), v[2]);
}

FlagPointF FlagPointF::act(const GroupElement2x2& g) const {
  const auto [a1, c1] = g.act(z[0], z[1]);
  const auto [a2, c2] = g.act(z[2], z[3]);
  return {{a1, c1, a2, c2}};
}

FlagPointF FlagPointF::normalized() const {
  const double n1 = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
  const double n2 = std::sqrt(std::norm(z[2]) + std::norm(z[3]));
  return {{z[0] / n1, z[1] / n1, z[2] / n2, z[3] / n2}};
}

bool FlagPointF::is_real(double tol) const {
  // Real up to a common phase per factor.
  auto factor_real = [tol](Complex a, Complex c) { return std::abs((a * std::conj(c)).imag()) <= tol; };
  return factor_real(z[0], z[1]) && factor_real(z[2], z[3]);
}

FlagPointF to_float(const FlagPoint& p) {
  auto f = [](const GaussianRational& q) { return Complex(q.re.convert_to<double>(), q.im.convert_to<double>()); };
  return {{f(p.a1()), f(p.c1()), f(p.a2()), f(p.c2())}};
}

R3Vector hopf(Complex a, Complex c) {
  const double n = std::norm(a) + std::norm(c);
  if (n == 0.0) throw std::invalid_argument("hopf: (0:0) is not a point of CP1");
  const Complex ac = a * std::conj(c);
  return {2.0 * ac.real() / n, 2.0 * ac.imag() / n, (std::norm(c) - std::norm(a)) / n};
}

R3Vector moment_map(const FlagPointF& p, double lambda1, double lambda2) {
  const R3Vector h1 = hopf(p.z[0], p.z[1]);
  const R3Vector h2 = hopf(p.z[2], p.z[3]);
  return {lambda1 * h1[0] + lambda2 * h2[0], lambda1 * h1[1] + lambda2 * h2[1], lambda1 * h1[2] + lambda2 * h2[2]};
}

double pair(const R3Vector& phi, const Mat2& b) {
  const Complex i(0, 1);
  const Complex p = i * b[0];
  const Complex q = i * b[1];  // q1 + i q2
  return (-p.real() * phi[2] + q.real() * phi[0] + q.imag() * phi[1]) / (2 * std::numbers::pi);
}

R3Vector coadjoint(const GroupElement2x2& g, const R3Vector& phi) {
  // P(phi) = [[-phi3, phi1 + i phi2], [phi1 - i phi2, phi3]] transforms as g P g^*.
  const GroupElement2x2 p{{Complex(-phi[2]), Complex(phi[0], phi[1]), Complex(phi[0], -phi[1]), Complex(phi[2])}};
  const GroupElement2x2 g_adj{{std::conj(g.m[0]), std::conj(g.m[2]), std::conj(g.m[1]), std::conj(g.m[3])}};
  const GroupElement2x2 q = g * p * g_adj;
  return {q.m[1].real(), q.m[1].imag(), q.m[3].real()};
}

std::optional<Interval> sampled_delta(const SampleSet& s, DeltaMode mode) {
  if (s.samples.empty()) throw std::invalid_argument("sampled_delta: empty sample set");
  std::optional<Interval> out;
  for (const auto& smp : s.samples) {
    if (mode.kind == DeltaMode::Kind::AngularFilter && angle_from_chamber_ray(smp.phi) >= mode.eps) continue;
    const double r = norm(smp.phi);
    if (!out) {
      out = Interval{r, r};
    } else {
      out->lo = std::min(out->lo, r);
      out->hi = std::max(out->hi, r);
    }
  }
  return out;
}

double coadjoint_fixed_check(double lambda, std::size_t n, std::uint64_t seed, CoadjointPlane plane) {
  if (n < 1) throw std::invalid_argument("coadjoint_fixed_check: n must be >= 1");
  if (lambda < 0) throw std::invalid_argument("coadjoint_fixed_check: lambda must be >= 0");
  std::vector<R3Vector> slice(n), orbit(n);
  const R3Vector top{0, 0, lambda};
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng(seed, 2 * i);
    if (plane == CoadjointPlane::QStar) {
      // Uniform direction in the plane phi2 = 0.
      double x = 0, z = 0, r = 0;
      while (r < 1e-12) {
        x = rng.normal();
        z = rng.normal();
        r = std::hypot(x, z);
      }
      slice[i] = {lambda * x / r, 0.0, lambda * z / r};
    } else {
      slice[i] = {0.0, rng.uniform() < 0.5 ? -lambda : lambda, 0.0};
    }

    CounterRng rng2(seed, 2 * i + 1);
    const double theta = rng2.uniform(0, 2 * std::numbers::pi);
    const GroupElement2x2 k{{Complex(std::cos(theta)), Complex(-std::sin(theta)), Complex(std::sin(theta)),
                             Complex(std::cos(theta))}};
    orbit[i] = coadjoint(k, top);
  }
  return hausdorff_distance(slice, orbit);
}

Mat2 expm(const Mat2& a) {
  const Complex half_trace = (a[0] + a[3]) / 2.0;
  const Mat2 a0{a[0] - half_trace, a[1], a[2], a[3] - half_trace};
  const Complex mu = std::sqrt(-(a0[0] * a0[3] - a0[1] * a0[2]));
  Complex c, s;  // cosh(mu), sinh(mu)/mu
  if (std::abs(mu) < 1e-6) {
    const Complex m2 = mu * mu;
    c = 1.0 + m2 / 2.0 + m2 * m2 / 24.0;
    s = 1.0 + m2 / 6.0 + m2 * m2 / 120.0;
  } else {
    c = std::cosh(mu);
    s = std::sinh(mu) / mu;
  }
  const Complex e = std::exp(half_trace);
  return {e * (c + s * a0[0]), e * s * a0[1], e * s * a0[2], e * (c + s * a0[3])};
}

}  // namespace mplab
