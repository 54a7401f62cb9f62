#include "loewner_lab/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "loewner_lab/errors.hpp"

namespace loewner_lab {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim, double fill) : dim_(dim), data_(dim * dim, fill) {}

Matrix::Matrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionMismatch("Matrix: expected " + std::to_string(dim_ * dim_) +
                            " entries, got " + std::to_string(data_.size()));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  // Scaled accumulation keeps huge or tiny entries from overflowing.
  double scale = 0.0;
  for (double v : data_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double v : data_) {
    const double x = v / scale;
    sum += x * x;
  }
  return scale * std::sqrt(sum);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(dim_, other.dim_, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(dim_, other.dim_, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double scale) {
  for (double& v : data_) v *= scale;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "operator*");
  const std::size_t n = lhs.dim_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double a = lhs(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

SymMatrix::SymMatrix(const Matrix& m) : m_(m.dim()) {
  const std::size_t n = m.dim();
  if (n == 0) throw BadParameters("SymMatrix: dimension must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = i == j ? m(i, i) : 0.5 * (m(i, j) + m(j, i));
      if (!std::isfinite(v)) {
        throw BadParameters("SymMatrix: non-finite entry at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      }
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> row_major)
    : SymMatrix(Matrix(dim, std::move(row_major))) {}

SymMatrix SymMatrix::identity(std::size_t dim) { return SymMatrix(Matrix::identity(dim)); }

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  return SymMatrix(Matrix::diagonal(values));
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ + b.m_); }
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ - b.m_); }
SymMatrix operator*(double scale, const SymMatrix& a) { return SymMatrix(scale * a.m_); }

double relative_difference(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "relative_difference");
  return (a - b).frobenius_norm() / std::max(1.0, b.frobenius_norm());
}

double relative_difference(const SymMatrix& a, const SymMatrix& b) {
  return relative_difference(a.matrix(), b.matrix());
}

}  // namespace loewner_lab
