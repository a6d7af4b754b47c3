#include "doctest.h"

#include <stdexcept>

#include "mplab/liedata.hpp"

using namespace mplab;

TEST_CASE("weights, lattice and chamber") {
  const long pair[] = {2, -1};
  const WeightVector w = weight_embed(pair);
  CHECK(w.rank() == 2);
  CHECK(TorusData{2}.in_lattice(w));
  CHECK_FALSE(TorusData{2}.in_chamber(w));
  CHECK_FALSE(is_dominant(w));
  CHECK(is_dominant(weight_embed(3)));
  CHECK_FALSE(TorusData{1}.in_lattice(WeightVector{{Rational(1, 2)}}));
  CHECK(diagonal_project(weight_embed(pair)) == weight_embed(1));
}

TEST_CASE("involution eigenspaces") {
  const auto neg = involution_eigenspaces(InvolutionSpec::negation(1));
  CHECK(neg.q_star.dim() == 1);
  CHECK(neg.k_star.dim() == 0);
  const auto id = involution_eigenspaces(InvolutionSpec::identity(1));
  CHECK(id.q_star.dim() == 0);
  const auto sw = involution_eigenspaces(InvolutionSpec::swap());
  CHECK(sw.k_star.contains({1, 1}));
  CHECK(sw.q_star.contains({1, -1}));
  CHECK_FALSE(sw.q_star.contains({1, 0}));
}

TEST_CASE("involutions must preserve the lattice") {
  CHECK_THROWS_AS(InvolutionSpec(LinearInvolution(RatMatrix{{0, 2}, {Rational(1, 2), 0}}), "x"),
                  std::invalid_argument);
}

TEST_CASE("subgroup names") {
  CHECK(parse_subgroup("G'") == Subgroup::GPrime);
  CHECK(parse_subgroup("Gprime") == Subgroup::GPrime);
  CHECK(parse_subgroup("H") == Subgroup::H);
  CHECK(to_string(Subgroup::B) == "B");
  CHECK_THROWS_AS(parse_subgroup("K"), std::invalid_argument);
}

TEST_CASE("random elements lie in their subgroups") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    CounterRng rng(5, i);
    const auto b = random_element(Subgroup::B, rng);
    CHECK(b.in_borel(1e-9));
    CHECK(b.has_unit_det(1e-9));
    const auto h = random_element(Subgroup::H, rng);
    CHECK(h.in_real_borel(1e-9));
    CHECK(h.has_unit_det(1e-9));
    const auto g = random_element(Subgroup::G, rng);
    CHECK(g.in_su2(1e-9));
    const auto gp = random_element(Subgroup::GPrime, rng);
    CHECK(gp.in_sl2_real(1e-9));
  }
}

TEST_CASE("group element products") {
  const GroupElement2x2 u{{Complex(1), Complex(2), Complex(0), Complex(1)}};
  const GroupElement2x2 v{{Complex(1), Complex(-2), Complex(0), Complex(1)}};
  const auto p = u * v;
  CHECK(std::abs(p.m[1]) < 1e-15);
  CHECK(u.in_unipotent());
  const auto [a, c] = u.act(Complex(0), Complex(1));
  CHECK(a == Complex(2));
  CHECK(c == Complex(1));
}

TEST_CASE("exact group elements") {
  ExactGroupElement2x2 g;
  g.m = {GaussianRational(2), GaussianRational(0, 1), GaussianRational(0), GaussianRational(Rational(1, 2))};
  CHECK(g.in_borel());
  const auto [a, c] = g.act(GaussianRational(0), GaussianRational(1));
  CHECK(a == GaussianRational(0, 1));
  CHECK(c == GaussianRational(Rational(1, 2)));
}
