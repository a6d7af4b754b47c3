#pragma once

// Exact rational convex polytopes in low dimension, stored by vertices.

#include <cstddef>
#include <span>
#include <vector>

#include "mplab/exactlin.hpp"

namespace mplab {

/// Linear subspace through the origin, kept in canonical basis form.
class LinearSubspace {
 public:
  LinearSubspace(std::size_t ambient_dim, std::span<const RatVector> spanning);

  static LinearSubspace full(std::size_t ambient_dim);
  static LinearSubspace zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  bool contains(const RatVector& x) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<RatVector> basis_;
};

/// Closed half-space normal . x <= offset.
struct Facet {
  RatVector normal;
  Rational offset;
};

/// Implicit description of a nonempty polytope: x lies in it iff
/// equalities . x == eq_rhs and every facet holds.
struct HalfspaceForm {
  RatMatrix equalities;
  RatVector eq_rhs;
  std::vector<Facet> facets;
};

class RationalPolytope {
 public:
  explicit RationalPolytope(std::size_t dim) : dim_(dim) {}

  static RationalPolytope empty(std::size_t dim) { return RationalPolytope(dim); }
  static RationalPolytope point(RatVector p);
  /// Segment [lo, hi] in Q^1 (a point when lo == hi, empty when lo > hi).
  static RationalPolytope interval(const Rational& lo, const Rational& hi);

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  const std::vector<RatVector>& vertices() const { return vertices_; }

  HalfspaceForm halfspaces() const;

  friend RationalPolytope hull(std::span<const RatVector> points, std::size_t dim);
  friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;
  /// Total order for catalogs: by dimension, then vertex lists lexicographically.
  friend bool operator<(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.vertices_ < b.vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<RatVector> vertices_;  // extreme points, lexicographic order
};

/// Convex hull reduced to its extreme points. Q^1 takes min/max, Q^2 a
/// monotone chain, higher dimensions facet enumeration in the affine hull.
RationalPolytope hull(std::span<const RatVector> points, std::size_t dim);
RationalPolytope hull(std::initializer_list<RatVector> points);

bool contains(const RationalPolytope& p, const RatVector& x);

RationalPolytope intersect_subspace(const RationalPolytope& p, const LinearSubspace& l);

/// Throws DimensionMismatch when the ambient dimensions differ.
bool equals(const RationalPolytope& p, const RationalPolytope& q);

namespace detail {
// Dimension-agnostic hull used above dimension 2; exposed so tests can
// cross-check the monotone chain against it.
std::vector<RatVector> extreme_points_by_facets(std::span<const RatVector> points, std::size_t dim);
}  // namespace detail

}  // namespace mplab
