#include "doctest.h"

#include <stdexcept>

#include "mplab/error.hpp"
#include "mplab/exactlin.hpp"
#include "mplab/random.hpp"

using namespace mplab;

namespace {

RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, long range = 3) {
  CounterRng rng(seed, 1);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform_int(-range, range));
  return m;
}

}  // namespace

TEST_CASE("rationals stay exact and reduced") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(to_string(Rational(Integer(6), Integer(-4))) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("rref of a known matrix") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 7}, {1, 2, 4}};
  const RowEchelon e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced == RatMatrix{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel of [1 1] is spanned by (1, -1)") {
  const auto k = kernel(RatMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RatVector{1, -1});
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t rows = 1 + seed % 4, cols = 2 + seed % 5;
    const RatMatrix m = random_integer_matrix(rows, cols, seed);
    const auto k = kernel(m);
    CHECK(rank(m) + k.size() == cols);
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    if (!k.empty()) CHECK(rank(RatMatrix::from_rows(k, cols)) == k.size());
  }
}

TEST_CASE("span_basis is canonical") {
  const std::vector<RatVector> a{{1, 1, 0}, {0, 1, 1}};
  const std::vector<RatVector> b{{1, 2, 1}, {2, 1, -1}, {1, 0, -1}};
  CHECK(span_basis(a, 3) == span_basis(b, 3));
}

TEST_CASE("inverse and solve_unique") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RatMatrix m = random_integer_matrix(3, 3, seed);
    const auto inv = inverse(m);
    if (rank(m) < 3) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(*inv * m == RatMatrix::identity(3));
    const RatVector b{1, -2, Rational(1, 3)};
    const auto x = solve_unique(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
  CHECK_FALSE(solve_unique(RatMatrix{{1, 1}, {1, 1}}, RatVector{1, 2}).has_value());
}

TEST_CASE("involutions and their eigenspaces") {
  CHECK_THROWS_AS(LinearInvolution(RatMatrix{{1, 1}, {0, 1}}), std::invalid_argument);
  const LinearInvolution swap(RatMatrix{{0, 1}, {1, 0}});
  const Eigensplit e = eigensplit(swap);
  REQUIRE(e.plus.size() == 1);
  REQUIRE(e.minus.size() == 1);
  CHECK(swap.matrix().apply(e.plus[0]) == e.plus[0]);
  CHECK(swap.matrix().apply(e.minus[0]) == RatVector{-e.minus[0][0], -e.minus[0][1]});
  CHECK(eigensplit(swap.negated()).plus == e.minus);
}

TEST_CASE("symplectic form validation") {
  CHECK_THROWS_AS(SymplecticForm(RatMatrix{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymplecticForm(RatMatrix{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymplecticForm(RatMatrix{{0, 0}, {0, 0}}), std::invalid_argument);
  const SymplecticForm w = SymplecticForm::standard(4);
  CHECK(w(RatVector{1, 0, 0, 0}, RatVector{0, 0, 1, 0}) == 1);
  CHECK(w(RatVector{0, 0, 1, 0}, RatVector{1, 0, 0, 0}) == -1);
}

TEST_CASE("Lagrangian predicate") {
  const SymplecticForm w = SymplecticForm::standard(4);
  const std::vector<RatVector> positions{{1, 0, 0, 0}, {0, 1, 0, 0}};
  const std::vector<RatVector> mixed{{1, 0, 0, 0}, {0, 0, 1, 0}};
  const std::vector<RatVector> too_small{{1, 0, 0, 0}};
  CHECK(is_lagrangian(positions, w));
  CHECK_FALSE(is_lagrangian(mixed, w));
  CHECK_FALSE(is_lagrangian(too_small, w));
  const std::vector<RatVector> wrong_dim{{1, 0}};
  CHECK_THROWS_AS(is_lagrangian(wrong_dim, w), DimensionMismatch);
}

TEST_CASE("random symplectic matrices preserve the standard form") {
  for (std::size_t dim : {2, 4, 6, 8})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SymplecticShear t = random_symplectic_matrix(dim, seed);
      const RatMatrix o = SymplecticForm::standard(dim).matrix();
      CHECK(t.matrix.transpose() * o * t.matrix == o);
      CHECK(t.matrix * t.inverse == RatMatrix::identity(dim));
    }
}

TEST_CASE("random antisymplectic involutions have Lagrangian fixed spaces") {
  for (std::size_t dim : {2, 4, 6, 8})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const LinearInvolution s = random_antisymplectic_involution(dim, seed);
      const SymplecticForm w = SymplecticForm::standard(dim);
      CHECK(s.matrix() * s.matrix() == RatMatrix::identity(dim));
      CHECK(is_antisymplectic(s.matrix(), w));
      CHECK_FALSE(is_symplectic(s.matrix(), w));
      CHECK(is_lagrangian(fixed_subspace(s), w));
      CHECK(is_lagrangian(eigensplit(s).minus, w));
    }
  CHECK_THROWS_AS(random_antisymplectic_involution(3, 0), std::invalid_argument);
}

TEST_CASE("seeded involutions are reproducible and vary with the seed") {
  CHECK(random_antisymplectic_involution(6, 11).matrix() == random_antisymplectic_involution(6, 11).matrix());
  CHECK_FALSE(random_antisymplectic_involution(6, 11).matrix() == random_antisymplectic_involution(6, 12).matrix());
}

TEST_CASE("antisymplectic_involution_from rejects non-symplectic input") {
  CHECK_THROWS_AS(antisymplectic_involution_from(RatMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
  const LinearInvolution s = antisymplectic_involution_from(RatMatrix::identity(2));
  CHECK(s.matrix() == RatMatrix{{1, 0}, {0, -1}});
}
