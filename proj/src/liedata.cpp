#include "mplab/liedata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mplab/error.hpp"

namespace mplab {

bool TorusData::in_lattice(const WeightVector& w) const {
  if (w.rank() != rank) throw DimensionMismatch("TorusData: weight rank mismatch");
  return std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& q) { return denominator(q) == 1; });
}

bool TorusData::in_chamber(const WeightVector& w) const {
  if (w.rank() != rank) throw DimensionMismatch("TorusData: weight rank mismatch");
  return is_dominant(w);
}

WeightVector weight_embed(std::span<const long> n) {
  WeightVector w;
  for (long x : n) w.coords.emplace_back(x);
  return w;
}

WeightVector weight_embed(long n) { return WeightVector{{Rational(n)}}; }

bool is_dominant(const WeightVector& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& q) { return q >= 0; });
}

WeightVector diagonal_project(const WeightVector& w) {
  if (w.rank() != 2) throw DimensionMismatch("diagonal_project: expected a weight of the rank-2 torus");
  return WeightVector{{w.coords[0] + w.coords[1]}};
}

InvolutionSpec::InvolutionSpec(LinearInvolution action, std::string label)
    : action_(std::move(action)), label_(std::move(label)) {
  if (!action_.matrix().is_integral())
    throw std::invalid_argument("InvolutionSpec: involution does not preserve the weight lattice");
}

InvolutionSpec InvolutionSpec::negation(std::size_t rank) {
  return {LinearInvolution(-RatMatrix::identity(rank)), "negation"};
}

InvolutionSpec InvolutionSpec::identity(std::size_t rank) {
  return {LinearInvolution(RatMatrix::identity(rank)), "identity"};
}

InvolutionSpec InvolutionSpec::swap() { return {LinearInvolution(RatMatrix{{0, 1}, {1, 0}}), "swap"}; }

InvolutionEigenspaces involution_eigenspaces(const InvolutionSpec& gamma) {
  const auto split = eigensplit(gamma.action());
  return {LinearSubspace(gamma.rank(), split.plus), LinearSubspace(gamma.rank(), split.minus)};
}

GroupElement2x2 GroupElement2x2::operator*(const GroupElement2x2& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3], m[2] * o.m[0] + m[3] * o.m[2],
           m[2] * o.m[1] + m[3] * o.m[3]}};
}

bool GroupElement2x2::in_borel(double tol) const { return has_unit_det(tol) && std::abs(m[2]) <= tol; }

bool GroupElement2x2::in_unipotent(double tol) const {
  return in_borel(tol) && std::abs(m[0] - Complex(1)) <= tol && std::abs(m[3] - Complex(1)) <= tol;
}

bool GroupElement2x2::in_real_borel(double tol) const {
  const bool real = std::all_of(m.begin(), m.end(), [tol](Complex z) { return std::abs(z.imag()) <= tol; });
  return real && in_borel(tol) && m[0].real() > 0 && m[3].real() > 0;
}

bool GroupElement2x2::in_su2(double tol) const {
  // [[a, b], [-conj(b), conj(a)]]
  return has_unit_det(tol) && std::abs(m[3] - std::conj(m[0])) <= tol && std::abs(m[2] + std::conj(m[1])) <= tol;
}

bool GroupElement2x2::in_sl2_real(double tol) const {
  return has_unit_det(tol) && std::all_of(m.begin(), m.end(), [tol](Complex z) { return std::abs(z.imag()) <= tol; });
}

Subgroup parse_subgroup(const std::string& tag) {
  if (tag == "B") return Subgroup::B;
  if (tag == "H") return Subgroup::H;
  if (tag == "G") return Subgroup::G;
  if (tag == "G'" || tag == "Gprime" || tag == "GPrime") return Subgroup::GPrime;
  throw std::invalid_argument("unknown subgroup tag '" + tag + "' (expected B, H, G or G')");
}

std::string to_string(Subgroup s) {
  switch (s) {
    case Subgroup::B: return "B";
    case Subgroup::H: return "H";
    case Subgroup::G: return "G";
    case Subgroup::GPrime: return "G'";
  }
  return "?";
}

namespace {

GroupElement2x2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {{Complex(c), Complex(-s), Complex(s), Complex(c)}};
}

}  // namespace

GroupElement2x2 random_element(Subgroup s, CounterRng& rng) {
  switch (s) {
    case Subgroup::B: {
      const Complex beta = std::exp(Complex(rng.normal(), rng.uniform(-std::numbers::pi, std::numbers::pi)));
      const Complex gamma(2.0 * rng.normal(), 2.0 * rng.normal());
      return {{beta, gamma, Complex(0), 1.0 / beta}};
    }
    case Subgroup::H: {
      const double u = 1.5 * rng.normal();
      const double v = 2.0 * rng.normal();
      return {{Complex(std::exp(u)), Complex(v), Complex(0), Complex(std::exp(-u))}};
    }
    case Subgroup::G: {
      double q[4];
      double norm = 0;
      do {
        norm = 0;
        for (double& x : q) {
          x = rng.normal();
          norm += x * x;
        }
      } while (norm < 1e-12);
      norm = std::sqrt(norm);
      const Complex a(q[0] / norm, q[1] / norm), b(q[2] / norm, q[3] / norm);
      return {{a, b, -std::conj(b), std::conj(a)}};
    }
    case Subgroup::GPrime: {
      const double t = 1.5 * rng.normal();
      const GroupElement2x2 d{{Complex(std::exp(t)), Complex(0), Complex(0), Complex(std::exp(-t))}};
      return rotation(rng.uniform(0, 2 * std::numbers::pi)) * d * rotation(rng.uniform(0, 2 * std::numbers::pi));
    }
  }
  throw std::invalid_argument("random_element: unknown subgroup");
}

}  // namespace mplab
