#include "gauge2/lie_algebra.hpp"

#include <set>
#include <stdexcept>

namespace gauge2 {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)),
      dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)),
      c_(static_cast<std::size_t>(dim_) * dim_ * dim_, Rational(0))
{
  if (dim_ < 1) throw std::invalid_argument("Lie algebra dimension must be positive");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != dim_)
    throw std::invalid_argument("duplicate basis labels in algebra " + name_);
}

std::optional<int> LieAlgebra::index_of(const std::string& label) const
{
  for (int i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t LieAlgebra::cidx(int a, int b, int k) const
{
  if (a < 0 || a >= dim_ || b < 0 || b >= dim_ || k < 0 || k >= dim_)
    throw std::out_of_range("structure constant index out of range");
  return (static_cast<std::size_t>(a) * dim_ + b) * dim_ + k;
}

void LieAlgebra::set_structure_constant(int a, int b, int k, const Rational& value)
{
  c_[cidx(a, b, k)] = value;
}

const Rational& LieAlgebra::c(int a, int b, int k) const { return c_[cidx(a, b, k)]; }

void LieAlgebra::set_representation(std::vector<RatMatrix> rep)
{
  if (static_cast<int>(rep.size()) != dim_)
    throw std::invalid_argument("representation must supply one matrix per basis element");
  const int d = rep.front().rows();
  for (const auto& m : rep)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("representation matrices must share a square size");
  rep_ = std::move(rep);
}

const std::vector<RatMatrix>& LieAlgebra::representation() const
{
  if (!rep_) throw std::logic_error("algebra " + name_ + " carries no matrix representation");
  return *rep_;
}

int LieAlgebra::rep_size() const { return representation().front().rows(); }

AlgVector LieAlgebra::bracket(const AlgVector& x, const AlgVector& y) const
{
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket operand dimension mismatch in " + name_);
  AlgVector r(dim_, Rational(0));
  for (int a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      const Rational xy = x[a] * y[b];
      for (int k = 0; k < dim_; ++k) {
        const Rational& cc = c(a, b, k);
        if (cc != 0) r[k] += cc * xy;
      }
    }
  }
  return r;
}

RatMatrix LieAlgebra::ad_matrix(int a) const
{
  RatMatrix m(dim_, dim_);
  for (int b = 0; b < dim_; ++b)
    for (int k = 0; k < dim_; ++k) m.at(k, b) = c(a, b, k);
  return m;
}

ValidationReport LieAlgebra::validate() const
{
  ValidationReport report;

  AxiomCheck antisym{"antisymmetry[" + name_ + "]"};
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int k = 0; k < dim_; ++k) {
        const Rational r = c(a, b, k) + c(b, a, k);
        if (r != 0) antisym.residuals.push_back({{a, b, k}, r});
      }
  antisym.pass = antisym.residuals.empty();
  report.checks.push_back(std::move(antisym));

  AxiomCheck jacobi{"jacobi[" + name_ + "]"};
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int cc = 0; cc < dim_; ++cc)
        for (int d = 0; d < dim_; ++d) {
          Rational r = 0;
          for (int e = 0; e < dim_; ++e)
            r += c(a, b, e) * c(e, cc, d) + c(b, cc, e) * c(e, a, d) + c(cc, a, e) * c(e, b, d);
          if (r != 0) jacobi.residuals.push_back({{a, b, cc, d}, r});
        }
  jacobi.pass = jacobi.residuals.empty();
  report.checks.push_back(std::move(jacobi));

  if (rep_) {
    AxiomCheck repchk{"rep_consistency[" + name_ + "]"};
    const auto& rho = *rep_;
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) {
        RatMatrix lhs = rho[a] * rho[b] - rho[b] * rho[a];
        for (int k = 0; k < dim_; ++k) {
          const Rational& cc = c(a, b, k);
          if (cc == 0) continue;
          for (int i = 0; i < lhs.rows(); ++i)
            for (int j = 0; j < lhs.cols(); ++j) lhs.at(i, j) -= cc * rho[k].at(i, j);
        }
        for (int i = 0; i < lhs.rows(); ++i)
          for (int j = 0; j < lhs.cols(); ++j)
            if (lhs.at(i, j) != 0) repchk.residuals.push_back({{a, b, i, j}, lhs.at(i, j)});
      }
    repchk.pass = repchk.residuals.empty();
    report.checks.push_back(std::move(repchk));
  }

  return report;
}

} // namespace gauge2
