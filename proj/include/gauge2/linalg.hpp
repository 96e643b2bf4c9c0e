#ifndef GAUGE2_LINALG_HPP
#define GAUGE2_LINALG_HPP

#include "gauge2/rational.hpp"

#include <stdexcept>
#include <vector>

namespace gauge2 {

/// Dense matrix over an exact ring (Rational or Polynomial). Just enough
/// for the rep-space bookkeeping; dimensions stay in single digits.
template <class T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, T fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity_like(int n, const T& one, const T& zero)
  {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return a_[i * cols_ + j]; }
  const T& at(int i, int j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const
  {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& aik = at(i, k);
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const
  {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const
  {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  bool operator==(const Matrix& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  int rows_, cols_;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;

/// Exact inverse via Gauss-Jordan; throws std::domain_error if singular.
RatMatrix invert(const RatMatrix& m);

/// Least-structure exact left inverse of a full-column-rank matrix V:
/// returns L with L*V = I (computed as (V^T V)^{-1} V^T).
RatMatrix left_inverse(const RatMatrix& v);

RatMatrix transpose(const RatMatrix& m);

} // namespace gauge2

#endif
