#include "doctest.h"

#include <stdexcept>

#include "mplab/error.hpp"
#include "mplab/reps.hpp"

using namespace mplab;

TEST_CASE("section space dimensions and weight multiplicities") {
  for (long r = 1; r <= 3; ++r)
    for (long l1 = 1; l1 <= 3; ++l1)
      for (long l2 = 1; l2 <= 3; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        CHECK(section_space_dim(spec) == (r * l1 + 1) * (r * l2 + 1));
        // Brute-force count over exponents (a, c); b and d are determined.
        std::map<long, long> count;
        for (long a = 0; a <= spec.degree1(); ++a)
          for (long c = 0; c <= spec.degree2(); ++c) ++count[(spec.degree1() - 2 * a) + (spec.degree2() - 2 * c)];
        const auto dec = weight_decomposition(spec);
        CHECK(dec.size() == count.size());
        for (const auto& [w, m] : count) CHECK(dec.at(w) == m);
      }
}

TEST_CASE("N-invariant dimension is the multiplicity drop") {
  // For sl2-modules the highest-weight vectors of weight w >= 0 number
  // mult(w) - mult(w + 2).
  for (long r = 1; r <= 2; ++r)
    for (long l1 = 1; l1 <= 3; ++l1)
      for (long l2 = 1; l2 <= 3; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        const auto dec = weight_decomposition(spec);
        const auto mult = [&](long w) { return dec.count(w) ? dec.at(w) : 0L; };
        for (long w = -(spec.degree1() + spec.degree2()); w <= spec.degree1() + spec.degree2(); ++w) {
          const long expected = w >= 0 ? mult(w) - mult(w + 2) : 0;
          CHECK(static_cast<long>(n_invariant_subspace(spec, w).size()) == expected);
        }
      }
}

TEST_CASE("the determinant section") {
  const SectionSpaceSpec spec{1, 1, 1};
  const BiHomogPoly f = highest_weight_vector(spec, 1);
  CHECK(to_string(f) == "x1*y2 - y1*x2");
  CHECK(torus_weight(f) == 0);
  CHECK(to_string(highest_weight_vector(spec, 0)) == "y1*y2");
  CHECK_THROWS_AS(highest_weight_vector(spec, 2), std::out_of_range);
  CHECK_THROWS_AS(highest_weight_vector(spec, -1), std::out_of_range);
}

TEST_CASE("sum and product forms agree") {
  for (long r = 1; r <= 3; ++r)
    for (long l1 = 1; l1 <= 3; ++l1)
      for (long l2 = 1; l2 <= 3; ++l2) {
        const SectionSpaceSpec spec{r, l1, l2};
        for (long k = 0; k <= spec.max_k(); ++k) CHECK(hwv_sum_form(spec, k) == hwv_product_form(spec, k));
      }
}

TEST_CASE("invariance checks") {
  const SectionSpaceSpec spec{2, 2, 1};
  for (long k = 0; k <= spec.max_k(); ++k) {
    const auto f = highest_weight_vector(spec, k);
    CHECK(verify_n_invariance(f));
    CHECK(verify_n_invariance_sampled(f, 3));
    CHECK(torus_weight(f) == spec.weight_of(k));
  }
  const auto g = BiHomogPoly::monomial({1, 0, 0, 1});
  CHECK_FALSE(verify_n_invariance(g));
  CHECK_FALSE(verify_n_invariance_sampled(g, 3));
}

TEST_CASE("torus weight errors") {
  const auto mixed = BiHomogPoly::monomial({1, 0, 0, 1}) + BiHomogPoly::monomial({0, 1, 0, 1});
  CHECK_THROWS_AS(torus_weight(mixed), MixedWeights);
  CHECK_THROWS_AS(torus_weight(BiHomogPoly(1, 1)), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and evaluation") {
  BiHomogPoly f(1, 1);
  CHECK_THROWS_AS(f.add_term({2, 0, 0, 1}, 1), std::invalid_argument);
  f.add_term({1, 0, 0, 1}, 3);
  f.add_term({0, 1, 1, 0}, -1);
  f.add_term({0, 1, 1, 0}, 1);
  CHECK(f.terms().size() == 1);
  CHECK(f.coefficient({1, 0, 0, 1}) == 3);
  CHECK((f - f).is_zero());
  const BiHomogPoly sq = f * f;
  CHECK(sq.degree1() == 2);
  CHECK(sq.coefficient({2, 0, 0, 2}) == 9);

  const auto det = highest_weight_vector({1, 1, 1}, 1);
  const std::array<GaussianRational, 4> exact{GaussianRational(1, 1), GaussianRational(2), GaussianRational(0, -1),
                                              GaussianRational(Rational(1, 2))};
  const std::array<std::complex<double>, 4> approx{std::complex<double>(1, 1), 2.0, std::complex<double>(0, -1),
                                                   0.5};
  const GaussianRational e = det.evaluate(exact);
  const std::complex<double> a = det.evaluate(approx);
  CHECK(e.re.convert_to<double>() == doctest::Approx(a.real()));
  CHECK(e.im.convert_to<double>() == doctest::Approx(a.imag()));
  CHECK(e == GaussianRational(Rational(1, 2), Rational(5, 2)));
}

TEST_CASE("proportionality") {
  const auto f = highest_weight_vector({1, 2, 1}, 1);
  CHECK(is_proportional(f, Integer(-4) * f));
  CHECK_FALSE(is_proportional(f, highest_weight_vector({1, 2, 1}, 0)));
}

TEST_CASE("binomials and Clebsch-Gordan weights") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(clebsch_gordan_highest_weights({1, 2, 1}) == std::vector<long>{3, 1});
  CHECK(clebsch_gordan_highest_weights({2, 2, 1}) == std::vector<long>{6, 4, 2});
  CHECK_THROWS_AS(SectionSpaceSpec({0, 1, 1}).validate(), std::invalid_argument);
}
