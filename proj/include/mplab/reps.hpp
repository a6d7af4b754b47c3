#pragma once

// Polynomial model of the section spaces of CP1 x CP1: bihomogeneous
// polynomials F(x1, y1, x2, y2) of bidegree (r*lambda1, r*lambda2).
//
// Action convention: a group element g acts by (g.F)(v) = F(g^-1 v). With it
// the monomial x1^a y1^b x2^c y2^d has torus weight (b - a) + (d - c), and
// u = [[1, t], [0, 1]] in N acts by x_i -> x_i - t y_i. Under this
// convention F_{r,k} has weight r(lambda1 + lambda2) - 2k.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mplab/exactlin.hpp"
#include "mplab/gaussian.hpp"

namespace mplab {

using Exponents = std::array<int, 4>;  // (a, b, c, d) of x1^a y1^b x2^c y2^d

class BiHomogPoly {
 public:
  // Descending lexicographic order on (a, b, c, d).
  using TermMap = std::map<Exponents, Integer, std::greater<Exponents>>;

  BiHomogPoly(int d1, int d2);

  static BiHomogPoly monomial(const Exponents& e, const Integer& coeff = 1);

  int degree1() const { return d1_; }
  int degree2() const { return d2_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * monomial; throws std::invalid_argument if the exponents do
  /// not have this polynomial's bidegree.
  void add_term(const Exponents& e, const Integer& coeff);

  Integer coefficient(const Exponents& e) const;

  GaussianRational evaluate(const std::array<GaussianRational, 4>& v) const;
  std::complex<double> evaluate(const std::array<std::complex<double>, 4>& v) const;

  friend BiHomogPoly operator+(const BiHomogPoly& f, const BiHomogPoly& g);
  friend BiHomogPoly operator-(const BiHomogPoly& f, const BiHomogPoly& g);
  friend BiHomogPoly operator*(const BiHomogPoly& f, const BiHomogPoly& g);
  friend BiHomogPoly operator*(const Integer& s, const BiHomogPoly& f);
  friend bool operator==(const BiHomogPoly&, const BiHomogPoly&) = default;

 private:
  int d1_;
  int d2_;
  TermMap terms_;
};

/// e.g. "x1*y2 - x2*y1"; "0" for the zero polynomial.
std::string to_string(const BiHomogPoly& f);

/// f = c * g for some nonzero rational c (both nonzero).
bool is_proportional(const BiHomogPoly& f, const BiHomogPoly& g);

struct SectionSpaceSpec {
  long r;
  long lambda1;
  long lambda2;

  /// Throws std::invalid_argument unless r, lambda1, lambda2 >= 1.
  void validate() const;
  long degree1() const { return r * lambda1; }
  long degree2() const { return r * lambda2; }
  long max_k() const { return std::min(degree1(), degree2()); }
  long weight_of(long k) const { return degree1() + degree2() - 2 * k; }
};

long section_space_dim(const SectionSpaceSpec& spec);

/// r(lambda1 + lambda2) - 2k for k = 0 .. min(r lambda1, r lambda2), descending.
std::vector<long> clebsch_gordan_highest_weights(const SectionSpaceSpec& spec);

/// sum_j (-1)^(k-j) C(k,j) x1^j y1^(d1-j) x2^(k-j) y2^(d2-k+j)
BiHomogPoly hwv_sum_form(const SectionSpaceSpec& spec, long k);
/// y1^(d1-k) y2^(d2-k) (x1 y2 - x2 y1)^k
BiHomogPoly hwv_product_form(const SectionSpaceSpec& spec, long k);

/// F_{r,k}; both closed forms are built and must agree exactly (throws
/// std::logic_error otherwise). Throws std::out_of_range for k outside
/// [0, min(r lambda1, r lambda2)].
BiHomogPoly highest_weight_vector(const SectionSpaceSpec& spec, long k);

/// Symbolic check that f(x1 - t y1, y1, x2 - t y2, y2) == f with t formal.
bool verify_n_invariance(const BiHomogPoly& f);

/// Randomized check of the same identity: evaluates at a seeded integer point
/// for deg+1 values of t. Never reports a false negative.
bool verify_n_invariance_sampled(const BiHomogPoly& f, std::uint64_t seed);

/// Common weight (b - a) + (d - c) of all terms. Throws MixedWeights if terms
/// disagree and std::invalid_argument for the zero polynomial.
long torus_weight(const BiHomogPoly& f);

/// weight -> multiplicity over the monomial basis, descending by weight.
std::map<long, long, std::greater<long>> weight_decomposition(const SectionSpaceSpec& spec);

/// Basis (primitive integer coefficients) of the N-invariant polynomials of
/// the given weight, from the exact linear system "every positive power of t
/// vanishes" over the monomial basis.
std::vector<BiHomogPoly> n_invariant_subspace(const SectionSpaceSpec& spec, long weight);

Integer binomial(long n, long k);

}  // namespace mplab
