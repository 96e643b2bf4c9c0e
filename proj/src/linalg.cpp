#include "gauge2/linalg.hpp"

namespace gauge2 {

RatMatrix transpose(const RatMatrix& m)
{
  RatMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

RatMatrix invert(const RatMatrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity_like(n, Rational(1), Rational(0));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMatrix left_inverse(const RatMatrix& v)
{
  const RatMatrix vt = transpose(v);
  return invert(vt * v) * vt;
}

} // namespace gauge2
