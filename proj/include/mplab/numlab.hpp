#pragma once

// Floating-point laboratory for CP1 x CP1 under diagonal SU(2).
//
// su(2)* is identified with R^3 in alpha-units through the pairing
//   <Phi, B> = (-p Phi3 + q1 Phi1 + q2 Phi2) / (2 pi),
// where iB = [[p, q1 + i q2], [q1 - i q2, -p]]. The positive chamber t*_+ is
// the ray R>=0 e3, and the conjugation-fixed subalgebra so(2) pairs with Phi2
// only, so q* is the plane Phi2 = 0.
//
// The moment map of one factor is lambda * h with
//   h(a, c) = (2 Re(a conj c), 2 Im(a conj c), |c|^2 - |a|^2) / (|a|^2 + |c|^2),
// so the B-fixed point (1:0) maps to -e3.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mplab/liedata.hpp"
#include "mplab/momentpoly.hpp"

namespace mplab {

using R3Vector = std::array<double, 3>;

double norm(const R3Vector& v);
double angle_from_chamber_ray(const R3Vector& v);

/// (a1, c1, a2, c2)
struct FlagPointF {
  std::array<Complex, 4> z;

  FlagPointF act(const GroupElement2x2& g) const;
  /// Each factor scaled to unit norm.
  FlagPointF normalized() const;
  bool is_real(double tol = 1e-12) const;
};

FlagPointF to_float(const FlagPoint& p);

/// Unit Hopf vector of (a : c). Throws std::invalid_argument for (0, 0).
R3Vector hopf(Complex a, Complex c);

R3Vector moment_map(const FlagPointF& p, double lambda1, double lambda2);

/// 2x2 complex matrix, row major.
using Mat2 = std::array<Complex, 4>;

/// <Phi, B> for B in su(2).
double pair(const R3Vector& phi, const Mat2& b);
/// Coadjoint action of g in SU(2) on su(2)* ~ R^3.
R3Vector coadjoint(const GroupElement2x2& g, const R3Vector& phi);

struct Sample {
  FlagPointF point;
  R3Vector phi;
};

struct SampleSet {
  std::uint64_t seed = 0;
  Subgroup subgroup = Subgroup::G;
  FlagPointF base{};
  double lambda1 = 1, lambda2 = 1;
  std::vector<Sample> samples;
};

/// Points g.x with g drawn from the subgroup, each with its moment-map value.
/// Sample i uses the stream (seed, i) and sample 0 is x itself (g = 1), so
/// the result does not depend on how the indices are split across threads.
/// Throws std::invalid_argument for n < 1.
SampleSet sample_orbit(const FlagPointF& x, Subgroup s, std::size_t n, std::uint64_t seed, double lambda1,
                       double lambda2);
/// Single-threaded reference for sample_orbit; bit-identical output.
SampleSet sample_orbit_serial(const FlagPointF& x, Subgroup s, std::size_t n, std::uint64_t seed, double lambda1,
                              double lambda2);

struct DeltaMode {
  enum class Kind { Radial, AngularFilter } kind = Kind::Radial;
  double eps = 0.05;

  static DeltaMode radial() { return {Kind::Radial, 0}; }
  static DeltaMode angular_filter(double eps = 0.05) { return {Kind::AngularFilter, eps}; }
};

struct Interval {
  double lo;
  double hi;
};

/// Radial: [min |Phi|, max |Phi|]. Angular filter: interval hull of |Phi|
/// over samples within eps radians of the chamber ray (nullopt if none).
/// Throws std::invalid_argument on an empty sample set.
std::optional<Interval> sampled_delta(const SampleSet& s, DeltaMode mode);

/// Symmetric Hausdorff distance between two point clouds.
double hausdorff_distance(std::span<const R3Vector> a, std::span<const R3Vector> b);
double hausdorff_distance_serial(std::span<const R3Vector> a, std::span<const R3Vector> b);

enum class CoadjointPlane { QStar, KStar };

/// Hausdorff distance between samples of (sphere of radius lambda) cut by the
/// chosen eigenspace and samples of the SO(2)-orbit of lambda e3. With QStar
/// both are the same circle; KStar is a negative control (two points).
double coadjoint_fixed_check(double lambda, std::size_t n, std::uint64_t seed,
                             CoadjointPlane plane = CoadjointPlane::QStar);

Mat2 expm(const Mat2& a);

/// One evaluation of L(xi_M) ||s||^2 = kappa r (-lambda(pr xi) + phi^{pr xi}) ||s||^2
/// with s = F_{r,k} under the Fubini-Study norm
/// ||s||^2 = |F(z)|^2 / (|z1|^(2 r l1) |z2|^(2 r l2)).
struct GradientCase {
  FlagPointF p;
  Mat2 xi;  // element of b (complex upper triangular, traceless)
  long r = 1;
  long k = 0;
  long lambda1 = 2;
  long lambda2 = 1;
};

struct GradientTerms {
  double lhs;  // central difference of ||s||^2(exp(t xi) p), step 1e-5
  double rhs;
  double residual;  // |lhs - rhs| / max(1, |rhs|)
};

double section_norm_squared(const FlagPointF& p, const GradientCase& c);

class GradientIdentity {
 public:
  static constexpr double kStep = 1e-5;

  /// Fixes kappa from p = ((1:1),(1:1)), xi = diag(1, -1), s = F_{1,0},
  /// (lambda1, lambda2) = (2, 1).
  void calibrate();
  bool calibrated() const { return kappa_.has_value(); }
  /// Throws NormalizationUncalibrated before calibrate().
  double constant() const;

  /// Throws NormalizationUncalibrated before calibrate() and
  /// std::domain_error when s vanishes at p.
  GradientTerms evaluate(const GradientCase& c) const;

 private:
  std::optional<double> kappa_;
};

/// Finite-difference left side and the uncalibrated bracket
/// r (-lambda(pr xi) + phi^{pr xi}) ||s||^2.
struct GradientRaw {
  double lhs;
  double bracket;
};
GradientRaw gradient_raw(const GradientCase& c);

}  // namespace mplab
