#pragma once

// Weight lattices, chambers, torus involutions and 2x2 group elements for
// SU(2) and SU(2) x SU(2). Weights are in alpha-units: alpha evaluates to x
// on diag(2 pi i x, -2 pi i x), so the lattice is Z^rank and every weight
// considered here is rational.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "mplab/exactlin.hpp"
#include "mplab/gaussian.hpp"
#include "mplab/polytope.hpp"
#include "mplab/random.hpp"

namespace mplab {

struct WeightVector {
  RatVector coords;

  std::size_t rank() const { return coords.size(); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Torus of rank n with lattice Z^n and chamber the closed nonnegative orthant.
struct TorusData {
  std::size_t rank;

  bool in_lattice(const WeightVector& w) const;
  bool in_chamber(const WeightVector& w) const;
};

WeightVector weight_embed(std::span<const long> n);
WeightVector weight_embed(long n);
bool is_dominant(const WeightVector& w);
/// Dual of the diagonal inclusion u -> u + u: (w1, w2) -> w1 + w2.
WeightVector diagonal_project(const WeightVector& w);

/// Involution of t* (alpha-coordinates) preserving the weight lattice.
class InvolutionSpec {
 public:
  /// Throws std::invalid_argument if the matrix is not integral (lattice
  /// non-preservation) or not an involution.
  InvolutionSpec(LinearInvolution action, std::string label);

  static InvolutionSpec negation(std::size_t rank);
  static InvolutionSpec identity(std::size_t rank);
  static InvolutionSpec swap();

  const LinearInvolution& action() const { return action_; }
  const std::string& label() const { return label_; }
  std::size_t rank() const { return action_.dim(); }

 private:
  LinearInvolution action_;
  std::string label_;
};

struct InvolutionEigenspaces {
  LinearSubspace k_star;  // +1 eigenspace
  LinearSubspace q_star;  // -1 eigenspace
};

InvolutionEigenspaces involution_eigenspaces(const InvolutionSpec& gamma);

// ---------------------------------------------------------------------------
// 2x2 group elements

using Complex = std::complex<double>;

struct GroupElement2x2 {
  std::array<Complex, 4> m{Complex(1), Complex(0), Complex(0), Complex(1)};  // row major

  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::pair<Complex, Complex> act(Complex a, Complex c) const { return {m[0] * a + m[1] * c, m[2] * a + m[3] * c}; }
  GroupElement2x2 operator*(const GroupElement2x2& o) const;

  bool has_unit_det(double tol = 1e-12) const { return std::abs(det() - Complex(1)) <= tol; }
  bool in_borel(double tol = 1e-12) const;          // upper triangular
  bool in_unipotent(double tol = 1e-12) const;      // upper triangular, unit diagonal
  bool in_real_borel(double tol = 1e-12) const;     // real upper triangular, positive diagonal
  bool in_su2(double tol = 1e-12) const;
  bool in_sl2_real(double tol = 1e-12) const;
};

struct ExactGroupElement2x2 {
  std::array<GaussianRational, 4> m{GaussianRational(1), GaussianRational(0), GaussianRational(0),
                                    GaussianRational(1)};

  GaussianRational det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::pair<GaussianRational, GaussianRational> act(const GaussianRational& a, const GaussianRational& c) const {
    return {m[0] * a + m[1] * c, m[2] * a + m[3] * c};
  }
  bool in_borel() const { return m[2].is_zero() && det() == GaussianRational(1); }
};

enum class Subgroup { B, H, G, GPrime };

Subgroup parse_subgroup(const std::string& tag);
std::string to_string(Subgroup s);

/// Seeded element generators.
/// B: complex upper triangular, det 1. H: real upper triangular with positive
/// diagonal (identity component of the real Borel). G: SU(2), Haar-uniform
/// via unit quaternions. GPrime: SL(2, R) as rotation * diag * rotation.
GroupElement2x2 random_element(Subgroup s, CounterRng& rng);

}  // namespace mplab
