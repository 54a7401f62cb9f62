#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace loewner_lab {

/// Dense square matrix, row-major. Intermediate products of symmetric
/// factors are not symmetric, so they live here until re-symmetrized.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim, double fill = 0.0);
  Matrix(std::size_t dim, std::vector<double> entries);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> entries() const noexcept { return data_; }
  std::span<double> entries() noexcept { return data_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  Matrix transposed() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double scale);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, double scale) { return lhs *= scale; }
  friend Matrix operator*(double scale, Matrix rhs) { return rhs *= scale; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Real symmetric matrix. Construction symmetrizes, so entry (i,j) equals
/// entry (j,i) bit-for-bit; dim is at least one and all entries are finite.
class SymMatrix {
 public:
  /// Stores (m + mᵀ)/2. Throws BadParameters on dim 0 or non-finite entries.
  explicit SymMatrix(const Matrix& m);
  SymMatrix(std::size_t dim, std::vector<double> row_major);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return m_.dim(); }
  std::span<const double> entries() const noexcept { return m_.entries(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  const Matrix& matrix() const noexcept { return m_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(double scale, const SymMatrix& a);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

/// ‖a − b‖_F / max(1, ‖b‖_F). Throws DimensionMismatch.
double relative_difference(const Matrix& a, const Matrix& b);
double relative_difference(const SymMatrix& a, const SymMatrix& b);

}  // namespace loewner_lab
