#pragma once

// Borel-orbit closures X = closure(B x) in CP1 x CP1 under diagonal SU(2),
// their moment polytopes Delta(X) on the alpha-axis, and the polytopes of
// the real loci Y = X^tau for tau = complex conjugation.

#include <optional>
#include <string>
#include <vector>

#include "mplab/gaussian.hpp"
#include "mplab/liedata.hpp"
#include "mplab/polytope.hpp"

namespace mplab {

/// ((a1 : c1), (a2 : c2)) with exact coordinates.
class FlagPoint {
 public:
  /// Throws std::invalid_argument if either coordinate pair is (0, 0).
  FlagPoint(GaussianRational a1, GaussianRational c1, GaussianRational a2, GaussianRational c2);

  const GaussianRational& a1() const { return a1_; }
  const GaussianRational& c1() const { return c1_; }
  const GaussianRational& a2() const { return a2_; }
  const GaussianRational& c2() const { return c2_; }

  bool is_real() const;
  /// Coordinates as (x1, y1, x2, y2) for polynomial evaluation.
  std::array<GaussianRational, 4> coords() const { return {a1_, c1_, a2_, c2_}; }

  /// Projective equality, factor by factor.
  friend bool operator==(const FlagPoint& p, const FlagPoint& q);

 private:
  GaussianRational a1_, c1_, a2_, c2_;
};

std::string to_string(const FlagPoint& p);

enum class OrbitClass { Dense, Diagonal, FirstFactor, SecondFactor, Point };

std::string to_string(OrbitClass c);
const std::vector<OrbitClass>& all_orbit_classes();

/// A real representative of each class:
/// Dense ((0:1),(1:1)), Diagonal ((1:1),(1:1)), FirstFactor ((0:1),(1:0)),
/// SecondFactor ((1:0),(0:1)), Point ((1:0),(1:0)).
FlagPoint representative(OrbitClass c);

/// Decided by z1 = (c1 == 0), z2 = (c2 == 0), d = (a1 c2 - a2 c1 == 0).
OrbitClass classify_borel_orbit_closure(const FlagPoint& x);

struct MembershipResult {
  bool member = false;
  std::optional<long> witness_r;  // smallest r that works
};

/// lambda in C(X): some r >= 1 with r lambda integral,
/// k = r(lambda1 + lambda2 - lambda)/2 integral in [0, min(r lambda1, r lambda2)],
/// and F_{r,k}(x) = c1^(r l1 - k) c2^(r l2 - k) (a1 c2 - a2 c1)^k != 0.
/// Integrality is the only r-dependent condition and is met by r = 2 den(lambda)
/// whenever it is met at all, so the search stops at 2 den(lambda)(lambda1 + lambda2).
MembershipResult membership_in_C(const FlagPoint& x, long lambda1, long lambda2, const Rational& lambda);

/// Same predicate, evaluating F_{r,k}(x) from the polynomial itself instead
/// of the vanishing pattern. Restricted to r <= r_max.
MembershipResult membership_in_C_by_evaluation(const FlagPoint& x, long lambda1, long lambda2,
                                               const Rational& lambda, long r_max);

/// Delta(X) by closed-form case analysis on the orbit class.
RationalPolytope moment_polytope(const FlagPoint& x, long lambda1, long lambda2);
RationalPolytope moment_polytope(OrbitClass c, long lambda1, long lambda2);

/// Closure of C(X): hull of every candidate lambda1 + lambda2 - 2k/r
/// (r <= r_max) accepted by membership_in_C.
RationalPolytope highest_weight_polytope(const FlagPoint& x, long lambda1, long lambda2, long r_max = 6);

/// x real (literally: every imaginary part is zero) with an involution of t*.
class RealFormCase {
 public:
  /// Throws std::invalid_argument if x has a nonreal coordinate or gamma is
  /// not an involution of the rank-1 torus.
  RealFormCase(FlagPoint x, InvolutionSpec gamma);

  const FlagPoint& point() const { return x_; }
  const InvolutionSpec& gamma() const { return gamma_; }
  LinearSubspace q_star() const { return involution_eigenspaces(gamma_).q_star; }

 private:
  FlagPoint x_;
  InvolutionSpec gamma_;
};

/// Closure of C_gamma(Y) = closure(C(X)) intersected with q*.
RationalPolytope gamma_highest_weight_polytope(const RealFormCase& c, long lambda1, long lambda2, long r_max = 6);

/// Delta(Y) = Delta(X) intersected with q*. Throws std::logic_error if it
/// disagrees with gamma_highest_weight_polytope.
RationalPolytope real_moment_polytope(const RealFormCase& c, long lambda1, long lambda2, long r_max = 6);

/// Distinct real moment polytopes over the five orbit classes, sorted.
std::vector<RationalPolytope> enumerate_polytope_catalog(long lambda1, long lambda2, const InvolutionSpec& gamma);

}  // namespace mplab
