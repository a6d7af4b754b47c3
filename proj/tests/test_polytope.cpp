#include "doctest.h"

#include <algorithm>

#include "mplab/error.hpp"
#include "mplab/polytope.hpp"
#include "mplab/random.hpp"

using namespace mplab;

namespace {

std::vector<RatVector> random_points(std::size_t n, std::size_t dim, std::uint64_t seed, long range = 6) {
  CounterRng rng(seed, 2);
  std::vector<RatVector> pts(n, RatVector(dim));
  for (auto& p : pts)
    for (auto& x : p) x = Rational(rng.uniform_int(-range, range), rng.uniform_int(1, 2));
  return pts;
}

bool satisfies(const HalfspaceForm& h, const RatVector& x) {
  for (std::size_t i = 0; i < h.equalities.rows(); ++i)
    if (dot(h.equalities.row(i), x) != h.eq_rhs[i]) return false;
  return std::all_of(h.facets.begin(), h.facets.end(), [&](const Facet& f) { return dot(f.normal, x) <= f.offset; });
}

}  // namespace

TEST_CASE("basic constructors") {
  CHECK(RationalPolytope::empty(1).is_empty());
  CHECK(RationalPolytope::interval(3, 1).is_empty());
  CHECK(RationalPolytope::interval(2, 2) == RationalPolytope::point({Rational(2)}));
  const auto seg = RationalPolytope::interval(Rational(1, 2), 3);
  REQUIRE(seg.vertices().size() == 2);
  CHECK(seg.vertices()[0][0] == Rational(1, 2));
}

TEST_CASE("hull in one dimension keeps min and max") {
  const auto p = hull({RatVector{2}, RatVector{-1}, RatVector{Rational(1, 3)}, RatVector{2}});
  CHECK(p == RationalPolytope::interval(-1, 2));
}

TEST_CASE("square with interior and edge points") {
  const auto p = hull({RatVector{0, 0}, RatVector{2, 0}, RatVector{2, 2}, RatVector{0, 2}, RatVector{1, 1},
                       RatVector{1, 0}, RatVector{0, 1}});
  CHECK(p.vertices() == std::vector<RatVector>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
}

TEST_CASE("collinear points in the plane give a segment") {
  const auto p = hull({RatVector{0, 0}, RatVector{1, 1}, RatVector{3, 3}, RatVector{2, 2}});
  CHECK(p.vertices() == std::vector<RatVector>{{0, 0}, {3, 3}});
}

TEST_CASE("monotone chain agrees with facet enumeration") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pts = random_points(3 + seed % 12, 2, seed);
    const auto chain = hull(pts, 2);
    CHECK(chain.vertices() == detail::extreme_points_by_facets(pts, 2));
  }
}

TEST_CASE("cube in three dimensions") {
  std::vector<RatVector> pts;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) pts.push_back({x, y, z});
  pts.push_back({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  pts.push_back({Rational(1, 2), 0, 0});
  const auto p = hull(pts, 3);
  CHECK(p.vertices().size() == 8);
  CHECK(contains(p, {Rational(1, 3), Rational(2, 3), 1}));
  CHECK_FALSE(contains(p, {Rational(1, 3), Rational(2, 3), Rational(4, 3)}));
}

TEST_CASE("hull properties: inputs contained, idempotent, H-form consistent") {
  for (std::size_t dim : {1, 2, 3})
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto pts = random_points(4 + seed % 6, dim, seed * 7 + dim);
      const auto p = hull(pts, dim);
      for (const auto& x : pts) CHECK(contains(p, x));
      CHECK(hull(p.vertices(), dim) == p);
      const HalfspaceForm h = p.halfspaces();
      for (const auto& x : pts) CHECK(satisfies(h, x));
    }
}

TEST_CASE("flat polygon in three dimensions") {
  const auto p = hull({RatVector{0, 0, 1}, RatVector{1, 0, 1}, RatVector{0, 1, 1}, RatVector{Rational(1, 4), Rational(1, 4), 1}});
  CHECK(p.vertices().size() == 3);
  const HalfspaceForm h = p.halfspaces();
  CHECK(h.equalities.rows() == 1);
  CHECK_FALSE(satisfies(h, {Rational(1, 4), Rational(1, 4), 2}));
}

TEST_CASE("intersection with subspaces") {
  const auto square = hull({RatVector{-1, -1}, RatVector{1, -1}, RatVector{1, 1}, RatVector{-1, 1}});
  const std::vector<RatVector> diag{{1, 1}};
  CHECK(intersect_subspace(square, LinearSubspace(2, diag)) == hull({RatVector{-1, -1}, RatVector{1, 1}}));
  CHECK(intersect_subspace(square, LinearSubspace::full(2)) == square);
  CHECK(intersect_subspace(square, LinearSubspace::zero(2)) == RationalPolytope::point({0, 0}));

  const auto shifted = hull({RatVector{1, 0}, RatVector{2, 0}, RatVector{2, 1}});
  CHECK(intersect_subspace(shifted, LinearSubspace::zero(2)).is_empty());
  const std::vector<RatVector> xaxis{{1, 0}};
  CHECK(intersect_subspace(shifted, LinearSubspace(2, xaxis)) == hull({RatVector{1, 0}, RatVector{2, 0}}));

  CHECK(intersect_subspace(RationalPolytope::interval(1, 3), LinearSubspace::zero(1)).is_empty());
  CHECK(intersect_subspace(RationalPolytope::interval(-1, 3), LinearSubspace::zero(1)) ==
        RationalPolytope::point({0}));
  CHECK(intersect_subspace(RationalPolytope::empty(1), LinearSubspace::full(1)).is_empty());
}

TEST_CASE("equals checks dimensions") {
  CHECK(equals(RationalPolytope::interval(1, 3), hull({RatVector{3}, RatVector{1}, RatVector{2}})));
  CHECK_THROWS_AS(equals(RationalPolytope::empty(1), RationalPolytope::empty(2)), DimensionMismatch);
}

TEST_CASE("subspace membership") {
  const std::vector<RatVector> span{{1, 2, 0}, {2, 4, 0}};
  const LinearSubspace l(3, span);
  CHECK(l.dim() == 1);
  CHECK(l.contains({Rational(-1, 2), -1, 0}));
  CHECK_FALSE(l.contains({1, 0, 0}));
}
