#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mplab/error.hpp"
#include "mplab/numlab.hpp"

using namespace mplab;

namespace {

const Complex I(0, 1);

void check_close(const R3Vector& a, const R3Vector& b, double tol = 1e-12) {
  for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(tol).scale(1.0));
}

FlagPointF fp(Complex a1, Complex c1, Complex a2, Complex c2) { return FlagPointF{{a1, c1, a2, c2}}; }

std::vector<R3Vector> phis(const SampleSet& s) {
  std::vector<R3Vector> out;
  for (const auto& x : s.samples) out.push_back(x.phi);
  return out;
}

}  // namespace

TEST_CASE("Hopf map orientation") {
  check_close(hopf(1, 0), {0, 0, -1});
  check_close(hopf(0, 1), {0, 0, 1});
  check_close(hopf(1, 1), {1, 0, 0});
  check_close(hopf(1, I), {0, -1, 0});
  CHECK(norm(hopf(Complex(0.3, -2), Complex(1.5, 0.25))) == doctest::Approx(1));
  CHECK_THROWS_AS(hopf(0, 0), std::invalid_argument);
}

TEST_CASE("moment map of the fixed points") {
  check_close(moment_map(fp(1, 0, 1, 0), 2, 1), {0, 0, -3});
  check_close(moment_map(fp(0, 1, 0, 1), 2, 1), {0, 0, 3});
  check_close(moment_map(fp(0, 1, 1, 0), 2, 1), {0, 0, 1});
}

TEST_CASE("pairing") {
  // iB = diag(1, -1), so <e3, B> = -1 / (2 pi).
  const Mat2 b{-I, 0, 0, I};
  CHECK(pair({0, 0, 1}, b) == doctest::Approx(-1 / (2 * std::numbers::pi)));
  // iB = [[0, 1], [1, 0]] pairs with Phi1.
  const Mat2 b1{0, -I, -I, 0};
  CHECK(pair({1, 0, 0}, b1) == doctest::Approx(1 / (2 * std::numbers::pi)));
  CHECK(pair({0, 1, 0}, b1) == doctest::Approx(0));
}

TEST_CASE("moment map is SU(2)-equivariant") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    CounterRng rng(17, i);
    const auto g = random_element(Subgroup::G, rng);
    const FlagPointF p = fp({rng.normal(), rng.normal()}, {rng.normal(), rng.normal()}, {rng.normal(), rng.normal()},
                            {rng.normal(), rng.normal()});
    check_close(moment_map(p.act(g), 2, 1), coadjoint(g, moment_map(p, 2, 1)), 1e-10);
    CHECK(norm(coadjoint(g, {1, 2, 3})) == doctest::Approx(std::sqrt(14.0)));
  }
}

TEST_CASE("orbit sampling") {
  const FlagPointF x = fp(0, 1, 1, 1);
  const SampleSet s = sample_orbit(x, Subgroup::H, 500, 9, 2, 1);
  REQUIRE(s.samples.size() == 500);
  check_close(s.samples[0].phi, moment_map(x.normalized(), 2, 1));

  const SampleSet serial = sample_orbit_serial(x, Subgroup::H, 500, 9, 2, 1);
  for (std::size_t i = 0; i < 500; ++i) {
    CHECK(s.samples[i].phi == serial.samples[i].phi);
    CHECK(s.samples[i].point.z == serial.samples[i].point.z);
  }
  CHECK(sample_orbit(x, Subgroup::H, 500, 9, 2, 1).samples[321].phi == s.samples[321].phi);
  CHECK_FALSE(sample_orbit(x, Subgroup::H, 500, 10, 2, 1).samples[321].phi == s.samples[321].phi);
  // A prefix does not depend on n.
  CHECK(sample_orbit(x, Subgroup::H, 100, 9, 2, 1).samples[99].phi == s.samples[99].phi);

  for (const auto& smp : s.samples) {
    CHECK(smp.point.is_real(1e-9));
    CHECK(std::abs(smp.phi[1]) < 1e-12);
  }
  CHECK_THROWS_AS(sample_orbit(x, Subgroup::H, 0, 9, 2, 1), std::invalid_argument);
}

TEST_CASE("sampled Delta") {
  const SampleSet dense = sample_orbit(fp(0, 1, 1, 1), Subgroup::H, 4000, 1, 2, 1);
  const auto radial = sampled_delta(dense, DeltaMode::radial());
  REQUIRE(radial.has_value());
  double lo = 1e9, hi = 0;
  for (const auto& p : phis(dense)) {
    lo = std::min(lo, norm(p));
    hi = std::max(hi, norm(p));
  }
  CHECK(radial->lo == lo);
  CHECK(radial->hi == hi);
  CHECK(radial->lo >= 1 - 1e-9);
  CHECK(radial->hi <= 3 + 1e-9);

  // The Borel-fixed point maps to -3 e3, away from the chamber ray.
  const SampleSet point = sample_orbit(fp(1, 0, 1, 0), Subgroup::H, 200, 1, 2, 1);
  CHECK_FALSE(sampled_delta(point, DeltaMode::angular_filter(0.05)).has_value());
  CHECK(angle_from_chamber_ray({0, 0, 0}) == 0);
  CHECK(angle_from_chamber_ray({0, 0, -1}) == doctest::Approx(std::numbers::pi));

  SampleSet empty;
  CHECK_THROWS_AS(sampled_delta(empty, DeltaMode::radial()), std::invalid_argument);
}

TEST_CASE("Hausdorff distance") {
  const std::vector<R3Vector> a{{0, 0, 0}};
  const std::vector<R3Vector> b{{1, 0, 0}, {0, 0, 0}};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(1));
  CHECK(hausdorff_distance(b, a) == doctest::Approx(1));
  CHECK(hausdorff_distance(a, a) == 0);

  const auto c1 = phis(sample_orbit(fp(0, 1, 1, 1), Subgroup::G, 700, 1, 2, 1));
  const auto c2 = phis(sample_orbit(fp(0, 1, 1, 1), Subgroup::G, 500, 2, 2, 1));
  CHECK(hausdorff_distance(c1, c2) == hausdorff_distance_serial(c1, c2));
}

TEST_CASE("coadjoint fixed-set check") {
  CHECK(coadjoint_fixed_check(2, 2000, 0) < 0.05);
  CHECK(coadjoint_fixed_check(2, 2000, 0, CoadjointPlane::KStar) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("matrix exponential") {
  const Mat2 d = expm({0.5, 0, 0, -0.5});
  CHECK(d[0].real() == doctest::Approx(std::exp(0.5)));
  CHECK(d[3].real() == doctest::Approx(std::exp(-0.5)));
  const Mat2 n = expm({0, 3, 0, 0});
  CHECK(n[0] == Complex(1));
  CHECK(n[1].real() == doctest::Approx(3));
  const Mat2 r = expm({0, -1, 1, 0});
  CHECK(r[0].real() == doctest::Approx(std::cos(1.0)));
  CHECK(r[2].real() == doctest::Approx(std::sin(1.0)));
}

TEST_CASE("gradient identity normalization") {
  GradientIdentity gi;
  CHECK_FALSE(gi.calibrated());
  CHECK_THROWS_AS(gi.constant(), NormalizationUncalibrated);
  GradientCase c;
  c.p = fp(1, 2, 3, 4);
  c.xi = {0.3, 1.1, 0, -0.3};
  CHECK_THROWS_AS(gi.evaluate(c), NormalizationUncalibrated);

  gi.calibrate();
  CHECK(gi.constant() == doctest::Approx(-4 * std::numbers::pi).epsilon(1e-7));
  const GradientTerms t = gi.evaluate(c);
  CHECK(t.residual < 1e-6);

  c.r = 2;
  c.k = 1;
  c.xi = {-0.7, 0.4, 0, 0.7};
  CHECK(gi.evaluate(c).residual < 1e-6);

  // F_{1,0} = y1^2 y2 vanishes at ((1:0), .).
  c.p = fp(1, 0, 1, 1);
  c.r = 1;
  c.k = 0;
  CHECK_THROWS_AS(gi.evaluate(c), std::domain_error);
}
