#pragma once

// Exact rational linear algebra: matrices, row reduction, kernels,
// involution eigenspaces and linear-symplectic predicates.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mplab {

using Integer = boost::multiprecision::mpz_int;
// GMP keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using RatVector = std::vector<Rational>;

std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

Rational dot(const RatVector& u, const RatVector& v);
bool is_zero(const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
  static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& x) const;

  bool is_integral() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Null space of m as the rows of a reduced echelon matrix (pivots in
/// increasing column order), so equal kernels give identical output.
std::vector<RatVector> kernel(const RatMatrix& m);

/// Canonical basis of span(vectors) in Q^dim, same normal form as kernel().
std::vector<RatVector> span_basis(std::span<const RatVector> vectors, std::size_t dim);

/// Unique solution of a·x = b, or nullopt when the system is inconsistent or
/// underdetermined.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

class LinearInvolution {
 public:
  /// Throws std::invalid_argument unless m is square with m·m = I.
  explicit LinearInvolution(RatMatrix m);

  const RatMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  LinearInvolution negated() const { return LinearInvolution(-matrix_); }

 private:
  RatMatrix matrix_;
};

struct Eigensplit {
  std::vector<RatVector> plus;   // ker(S - I)
  std::vector<RatVector> minus;  // ker(S + I)
};

/// Eigenspaces of an involution, read off the column spaces of the
/// projectors (I + S)/2 and (I - S)/2.
Eigensplit eigensplit(const LinearInvolution& s);
std::vector<RatVector> fixed_subspace(const LinearInvolution& s);

class SymplecticForm {
 public:
  /// Throws std::invalid_argument unless m is antisymmetric, nondegenerate
  /// and of even size.
  explicit SymplecticForm(RatMatrix m);

  /// Darboux form on Q^dim: omega(e_i, f_i) = 1 for the split (e_1..e_n, f_1..f_n).
  static SymplecticForm standard(std::size_t dim);

  const RatMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  Rational operator()(const RatVector& u, const RatVector& v) const;

 private:
  RatMatrix matrix_;
};

bool is_symplectic(const RatMatrix& t, const SymplecticForm& omega);
bool is_antisymplectic(const RatMatrix& s, const SymplecticForm& omega);

/// Isotropic and of exactly half the ambient dimension.
bool is_lagrangian(std::span<const RatVector> basis, const SymplecticForm& omega);

/// T^-1 · diag(I, -I) · T for a matrix T symplectic w.r.t. the standard form.
LinearInvolution antisymplectic_involution_from(const RatMatrix& t);

/// Product of seeded elementary symplectic shears with integer parameters in
/// [-9, 9]; together with its exact inverse.
struct SymplecticShear {
  RatMatrix matrix;
  RatMatrix inverse;
};
SymplecticShear random_symplectic_matrix(std::size_t dim, std::uint64_t seed);

LinearInvolution random_antisymplectic_involution(std::size_t dim, std::uint64_t seed);

}  // namespace mplab
