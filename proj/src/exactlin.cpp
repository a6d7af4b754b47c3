#include "mplab/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mplab/error.hpp"
#include "mplab/random.hpp"

namespace mplab {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational dot(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("dot: vector lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("RatMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  RatVector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return denominator(q) == 1; });
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix +: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix -: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x = -x;
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix *: inner dimensions differ");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));

    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> span_basis(std::span<const RatVector> vectors, std::size_t dim) {
  const RowEchelon e = rref(RatMatrix::from_rows(vectors, dim));
  std::vector<RatVector> basis;
  basis.reserve(e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) basis.push_back(e.reduced.row(i));
  return basis;
}

std::vector<RatVector> kernel(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> raw;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    raw.push_back(std::move(v));
  }
  return span_basis(raw, m.cols());
}

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_unique: rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;  // 0 = 1
  if (e.pivots.size() != a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = e.reduced(i, a.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

LinearInvolution::LinearInvolution(RatMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) throw std::invalid_argument("LinearInvolution: matrix not square");
  if (matrix_ * matrix_ != RatMatrix::identity(matrix_.rows()))
    throw std::invalid_argument("LinearInvolution: S*S != I");
}

Eigensplit eigensplit(const LinearInvolution& s) {
  const std::size_t n = s.dim();
  const RatMatrix id = RatMatrix::identity(n);
  const Rational half(1, 2);
  const RatMatrix plus_proj = half * (id + s.matrix());
  const RatMatrix minus_proj = half * (id - s.matrix());

  auto column_space = [n](const RatMatrix& p) {
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.column(j));
    return span_basis(cols, n);
  };
  return {column_space(plus_proj), column_space(minus_proj)};
}

std::vector<RatVector> fixed_subspace(const LinearInvolution& s) { return eigensplit(s).plus; }

SymplecticForm::SymplecticForm(RatMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.rows() % 2 != 0)
    throw std::invalid_argument("SymplecticForm: need a square matrix of even size");
  if (matrix_.transpose() != -matrix_) throw std::invalid_argument("SymplecticForm: not antisymmetric");
  if (rank(matrix_) != matrix_.rows()) throw std::invalid_argument("SymplecticForm: degenerate");
}

SymplecticForm SymplecticForm::standard(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw std::invalid_argument("standard symplectic form needs even dim >= 2");
  const std::size_t n = dim / 2;
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return SymplecticForm(std::move(m));
}

Rational SymplecticForm::operator()(const RatVector& u, const RatVector& v) const {
  return dot(u, matrix_.apply(v));
}

bool is_symplectic(const RatMatrix& t, const SymplecticForm& omega) {
  return t.transpose() * omega.matrix() * t == omega.matrix();
}

bool is_antisymplectic(const RatMatrix& s, const SymplecticForm& omega) {
  return s.transpose() * omega.matrix() * s == -omega.matrix();
}

bool is_lagrangian(std::span<const RatVector> basis, const SymplecticForm& omega) {
  const std::size_t n = omega.dim();
  for (const auto& v : basis)
    if (v.size() != n) throw DimensionMismatch("is_lagrangian: basis vector has wrong dimension");
  if (rank(RatMatrix::from_rows(basis, n)) != n / 2) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (omega(basis[i], basis[j]) != 0) return false;
  return true;
}

namespace {

RatMatrix reflection_block(std::size_t dim) {
  RatMatrix d = RatMatrix::identity(dim);
  for (std::size_t i = dim / 2; i < dim; ++i) d(i, i) = -1;
  return d;
}

// Elementary symplectic generators for the standard form, as (shear, inverse).
SymplecticShear elementary_shear(std::size_t dim, CounterRng& rng) {
  const std::size_t n = dim / 2;
  std::int64_t p = 0;
  while (p == 0) p = rng.uniform_int(-9, 9);
  const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
  const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
  const auto kind = n > 1 ? rng.uniform_int(0, 2) : rng.uniform_int(0, 1);

  RatMatrix fwd = RatMatrix::identity(dim);
  RatMatrix inv = RatMatrix::identity(dim);
  const Rational q(p);
  if (kind == 2 && i != j) {
    // [[M, 0], [0, M^-T]] with M = I + p E_ij
    fwd(i, j) = q;
    fwd(n + j, n + i) = -q;
    inv(i, j) = -q;
    inv(n + j, n + i) = q;
  } else {
    // [[I, A], [0, I]] or [[I, 0], [A, I]] with A = p (E_ij + E_ji) symmetric
    const std::size_t r0 = kind == 0 ? 0 : n;
    const std::size_t c0 = kind == 0 ? n : 0;
    fwd(r0 + i, c0 + j) = q;
    fwd(r0 + j, c0 + i) = q;
    inv(r0 + i, c0 + j) = -q;
    inv(r0 + j, c0 + i) = -q;
  }
  return {std::move(fwd), std::move(inv)};
}

}  // namespace

LinearInvolution antisymplectic_involution_from(const RatMatrix& t) {
  if (!t.is_square() || t.rows() % 2 != 0 || t.rows() == 0)
    throw std::invalid_argument("antisymplectic_involution_from: need even-dimensional square matrix");
  if (!is_symplectic(t, SymplecticForm::standard(t.rows())))
    throw std::invalid_argument("antisymplectic_involution_from: matrix is not symplectic");
  const auto t_inv = inverse(t);
  return LinearInvolution(*t_inv * reflection_block(t.rows()) * t);
}

SymplecticShear random_symplectic_matrix(std::size_t dim, std::uint64_t seed) {
  if (dim == 0 || dim % 2 != 0) throw std::invalid_argument("random_symplectic_matrix: dim must be even and >= 2");
  CounterRng rng(seed, 0x5e1f);
  RatMatrix t = RatMatrix::identity(dim);
  RatMatrix t_inv = RatMatrix::identity(dim);
  const std::size_t count = dim + 2;
  for (std::size_t s = 0; s < count; ++s) {
    const auto shear = elementary_shear(dim, rng);
    t = shear.matrix * t;
    t_inv = t_inv * shear.inverse;
  }
  return {std::move(t), std::move(t_inv)};
}

LinearInvolution random_antisymplectic_involution(std::size_t dim, std::uint64_t seed) {
  if (dim == 0 || dim % 2 != 0)
    throw std::invalid_argument("random_antisymplectic_involution: dim must be even and >= 2");
  const auto t = random_symplectic_matrix(dim, seed);
  return LinearInvolution(t.inverse * reflection_block(dim) * t.matrix);
}

}  // namespace mplab
