#ifndef GAUGE2_LIE_ALGEBRA_HPP
#define GAUGE2_LIE_ALGEBRA_HPP

#include "gauge2/linalg.hpp"
#include "gauge2/validation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gauge2 {

/// Algebra element as coordinates in the chosen basis.
using AlgVector = std::vector<Rational>;

/// Finite-dimensional Lie algebra given by structure constants
/// [X_a, X_b] = sum_k c(a,b,k) X_k, with an optional matrix representation
/// used for trace pairings and cross-validation. The structure constants,
/// not matrix products, are the primary bracket implementation.
class LieAlgebra {
public:
  LieAlgebra(std::string name, std::vector<std::string> basis_labels);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  std::optional<int> index_of(const std::string& label) const;

  void set_structure_constant(int a, int b, int k, const Rational& value);
  const Rational& c(int a, int b, int k) const;

  void set_representation(std::vector<RatMatrix> rep);
  bool has_representation() const { return rep_.has_value(); }
  const std::vector<RatMatrix>& representation() const;
  int rep_size() const;

  AlgVector bracket(const AlgVector& x, const AlgVector& y) const;

  /// dim_h x dim_h matrix of ad(X_a) in this basis.
  RatMatrix ad_matrix(int a) const;

  /// Antisymmetry, Jacobi, and (when present) rep consistency
  /// rho(X_a)rho(X_b) - rho(X_b)rho(X_a) = sum_k c(a,b,k) rho(X_k).
  ValidationReport validate() const;

private:
  std::string name_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  std::optional<std::vector<RatMatrix>> rep_;

  std::size_t cidx(int a, int b, int k) const;
};

} // namespace gauge2

#endif
