#include "mplab/momentpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "mplab/reps.hpp"

namespace mplab {

namespace {

void check_weights(long lambda1, long lambda2) {
  if (lambda1 < 1 || lambda2 < 1) throw std::invalid_argument("weights must satisfy lambda1, lambda2 >= 1");
}

struct VanishingPattern {
  bool z1, z2, d;
};

VanishingPattern pattern(const FlagPoint& x) {
  return {x.c1().is_zero(), x.c2().is_zero(), (x.a1() * x.c2() - x.a2() * x.c1()).is_zero()};
}

// Integral k for this r, if any.
std::optional<long> k_for(long r, long lambda1, long lambda2, const Rational& lambda) {
  const Rational k = Rational(r) * (Rational(lambda1 + lambda2) - lambda) / 2;
  if (denominator(k) != 1) return std::nullopt;
  if (denominator(Rational(r) * lambda) != 1) return std::nullopt;
  const Integer kk = numerator(k);
  if (kk < 0 || kk > std::min(r * lambda1, r * lambda2)) return std::nullopt;
  return kk.convert_to<long>();
}

}  // namespace

FlagPoint::FlagPoint(GaussianRational a1, GaussianRational c1, GaussianRational a2, GaussianRational c2)
    : a1_(std::move(a1)), c1_(std::move(c1)), a2_(std::move(a2)), c2_(std::move(c2)) {
  if ((a1_.is_zero() && c1_.is_zero()) || (a2_.is_zero() && c2_.is_zero()))
    throw std::invalid_argument("FlagPoint: homogeneous coordinates (0:0) are not a point of CP1");
}

bool FlagPoint::is_real() const { return a1_.is_real() && c1_.is_real() && a2_.is_real() && c2_.is_real(); }

bool operator==(const FlagPoint& p, const FlagPoint& q) {
  return (p.a1_ * q.c1_ - q.a1_ * p.c1_).is_zero() && (p.a2_ * q.c2_ - q.a2_ * p.c2_).is_zero();
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string out = z.re == 0 ? "" : to_string(z.re);
  const Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
  if (!out.empty() || z.im < 0) out += z.im < 0 ? "-" : "+";
  return out + to_string(mag) + "i";
}

std::string to_string(const FlagPoint& p) {
  return "((" + to_string(p.a1()) + ":" + to_string(p.c1()) + "),(" + to_string(p.a2()) + ":" + to_string(p.c2()) +
         "))";
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Dense: return "Dense";
    case OrbitClass::Diagonal: return "Diagonal";
    case OrbitClass::FirstFactor: return "FirstFactor";
    case OrbitClass::SecondFactor: return "SecondFactor";
    case OrbitClass::Point: return "Point";
  }
  return "?";
}

const std::vector<OrbitClass>& all_orbit_classes() {
  static const std::vector<OrbitClass> all{OrbitClass::Dense, OrbitClass::Diagonal, OrbitClass::FirstFactor,
                                           OrbitClass::SecondFactor, OrbitClass::Point};
  return all;
}

FlagPoint representative(OrbitClass c) {
  const GaussianRational o(0), l(1);
  switch (c) {
    case OrbitClass::Dense: return {o, l, l, l};
    case OrbitClass::Diagonal: return {l, l, l, l};
    case OrbitClass::FirstFactor: return {o, l, l, o};
    case OrbitClass::SecondFactor: return {l, o, o, l};
    case OrbitClass::Point: return {l, o, l, o};
  }
  throw std::invalid_argument("representative: unknown orbit class");
}

OrbitClass classify_borel_orbit_closure(const FlagPoint& x) {
  const auto [z1, z2, d] = pattern(x);
  if (z1 && z2) return OrbitClass::Point;
  if (z1) return OrbitClass::SecondFactor;
  if (z2) return OrbitClass::FirstFactor;
  return d ? OrbitClass::Diagonal : OrbitClass::Dense;
}

MembershipResult membership_in_C(const FlagPoint& x, long lambda1, long lambda2, const Rational& lambda) {
  check_weights(lambda1, lambda2);
  const auto [z1, z2, d] = pattern(x);
  const long den = denominator(lambda).convert_to<long>();
  const long bound = 2 * den * (lambda1 + lambda2);
  for (long r = den; r <= bound; r += den) {
    const auto k = k_for(r, lambda1, lambda2, lambda);
    if (!k) continue;
    // F_{r,k}(x) = c1^(r l1 - k) c2^(r l2 - k) (a1 c2 - a2 c1)^k
    const bool nonzero = (*k == r * lambda1 || !z1) && (*k == r * lambda2 || !z2) && (*k == 0 || !d);
    if (nonzero) return {true, r};
  }
  return {};
}

MembershipResult membership_in_C_by_evaluation(const FlagPoint& x, long lambda1, long lambda2,
                                               const Rational& lambda, long r_max) {
  check_weights(lambda1, lambda2);
  for (long r = 1; r <= r_max; ++r) {
    const auto k = k_for(r, lambda1, lambda2, lambda);
    if (!k) continue;
    const BiHomogPoly f = highest_weight_vector({r, lambda1, lambda2}, *k);
    if (!f.evaluate(x.coords()).is_zero()) return {true, r};
  }
  return {};
}

RationalPolytope moment_polytope(OrbitClass c, long lambda1, long lambda2) {
  check_weights(lambda1, lambda2);
  const Rational sum(lambda1 + lambda2), diff(lambda1 - lambda2);
  switch (c) {
    case OrbitClass::Dense: return RationalPolytope::interval(diff < 0 ? Rational(-diff) : diff, sum);
    case OrbitClass::Diagonal: return RationalPolytope::point({sum});
    case OrbitClass::FirstFactor:
      return lambda1 >= lambda2 ? RationalPolytope::point({diff}) : RationalPolytope::empty(1);
    case OrbitClass::SecondFactor:
      return lambda2 >= lambda1 ? RationalPolytope::point({Rational(-diff)}) : RationalPolytope::empty(1);
    case OrbitClass::Point: return RationalPolytope::empty(1);
  }
  throw std::invalid_argument("moment_polytope: unknown orbit class");
}

RationalPolytope moment_polytope(const FlagPoint& x, long lambda1, long lambda2) {
  return moment_polytope(classify_borel_orbit_closure(x), lambda1, lambda2);
}

RationalPolytope highest_weight_polytope(const FlagPoint& x, long lambda1, long lambda2, long r_max) {
  check_weights(lambda1, lambda2);
  if (r_max < 1) throw std::invalid_argument("highest_weight_polytope: r_max must be >= 1");
  std::vector<RatVector> members;
  for (long r = 1; r <= r_max; ++r)
    for (long k = 0; k <= std::min(r * lambda1, r * lambda2); ++k) {
      const Rational lambda = Rational(lambda1 + lambda2) - Rational(2 * k, r);
      if (membership_in_C(x, lambda1, lambda2, lambda).member) members.push_back({lambda});
    }
  return hull(members, 1);
}

RealFormCase::RealFormCase(FlagPoint x, InvolutionSpec gamma) : x_(std::move(x)), gamma_(std::move(gamma)) {
  if (!x_.is_real()) throw std::invalid_argument("RealFormCase: point must have real coordinates");
  if (gamma_.rank() != 1) throw std::invalid_argument("RealFormCase: involution must act on the rank-1 t*");
}

RationalPolytope gamma_highest_weight_polytope(const RealFormCase& c, long lambda1, long lambda2, long r_max) {
  return intersect_subspace(highest_weight_polytope(c.point(), lambda1, lambda2, r_max), c.q_star());
}

RationalPolytope real_moment_polytope(const RealFormCase& c, long lambda1, long lambda2, long r_max) {
  RationalPolytope delta_y = intersect_subspace(moment_polytope(c.point(), lambda1, lambda2), c.q_star());
  if (!equals(delta_y, gamma_highest_weight_polytope(c, lambda1, lambda2, r_max)))
    throw std::logic_error("real_moment_polytope: polytope route and highest-weight route disagree");
  return delta_y;
}

std::vector<RationalPolytope> enumerate_polytope_catalog(long lambda1, long lambda2, const InvolutionSpec& gamma) {
  check_weights(lambda1, lambda2);
  std::vector<RationalPolytope> out;
  for (OrbitClass c : all_orbit_classes())
    out.push_back(real_moment_polytope(RealFormCase(representative(c), gamma), lambda1, lambda2));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mplab
