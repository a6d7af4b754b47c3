#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kernels.hpp"
#include "mplab/error.hpp"
#include "mplab/reps.hpp"

namespace mplab {

namespace {

double section_norm_squared(const FlagPointF& p, const BiHomogPoly& f, const GradientCase& c) {
  const double n1 = std::norm(p.z[0]) + std::norm(p.z[1]);
  const double n2 = std::norm(p.z[2]) + std::norm(p.z[3]);
  const double num = std::norm(f.evaluate(p.z));
  return num / (std::pow(n1, static_cast<double>(c.r * c.lambda1)) * std::pow(n2, static_cast<double>(c.r * c.lambda2)));
}

}  // namespace

double section_norm_squared(const FlagPointF& p, const GradientCase& c) {
  return section_norm_squared(p, highest_weight_vector({c.r, c.lambda1, c.lambda2}, c.k), c);
}

GradientRaw gradient_raw(const GradientCase& c) {
  const BiHomogPoly f = highest_weight_vector({c.r, c.lambda1, c.lambda2}, c.k);
  const FlagPointF p = c.p.normalized();
  const double s0 = section_norm_squared(p, f, c);
  if (!(s0 > 1e-14)) throw std::domain_error("gradient identity: section vanishes at p");

  const double h = GradientIdentity::kStep;
  auto flowed = [&](double t) {
    const Mat2 scaled{t * c.xi[0], t * c.xi[1], t * c.xi[2], t * c.xi[3]};
    const Mat2 e = expm(scaled);
    return section_norm_squared(p.act(GroupElement2x2{e}), f, c);
  };
  const double lhs = (flowed(h) - flowed(-h)) / (2 * h);

  // pr(xi) = Im(xi) = B with iB = (xi + xi^*)/2.
  const Complex i(0, 1);
  const Mat2 herm{(c.xi[0] + std::conj(c.xi[0])) / 2.0, (c.xi[1] + std::conj(c.xi[2])) / 2.0,
                  (c.xi[2] + std::conj(c.xi[1])) / 2.0, (c.xi[3] + std::conj(c.xi[3])) / 2.0};
  const Mat2 pr{-i * herm[0], -i * herm[1], -i * herm[2], -i * herm[3]};

  const double lambda = static_cast<double>(c.r * (c.lambda1 + c.lambda2) - 2 * c.k) / static_cast<double>(c.r);
  const double lambda_of_pr = pair({0.0, 0.0, lambda}, pr);
  const double phi_of_pr = pair(moment_map(p, static_cast<double>(c.lambda1), static_cast<double>(c.lambda2)), pr);
  return {lhs, static_cast<double>(c.r) * (-lambda_of_pr + phi_of_pr) * s0};
}

void GradientIdentity::calibrate() {
  GradientCase c;
  c.p = {{Complex(1), Complex(1), Complex(1), Complex(1)}};
  c.xi = {Complex(1), Complex(0), Complex(0), Complex(-1)};
  c.r = 1;
  c.k = 0;
  c.lambda1 = 2;
  c.lambda2 = 1;
  const GradientRaw raw = gradient_raw(c);
  kappa_ = raw.lhs / raw.bracket;
}

double GradientIdentity::constant() const {
  if (!kappa_) throw NormalizationUncalibrated();
  return *kappa_;
}

GradientTerms GradientIdentity::evaluate(const GradientCase& c) const {
  const double kappa = constant();
  const GradientRaw raw = gradient_raw(c);
  const double rhs = kappa * raw.bracket;
  return {raw.lhs, rhs, std::abs(raw.lhs - rhs) / std::max(1.0, std::abs(rhs))};
}

}  // namespace mplab
