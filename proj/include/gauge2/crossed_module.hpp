#ifndef GAUGE2_CROSSED_MODULE_HPP
#define GAUGE2_CROSSED_MODULE_HPP

#include "gauge2/lie_algebra.hpp"

#include <memory>

namespace gauge2 {

/// Differential crossed module (h, g; alpha, |>): two Lie algebras, a map
/// alpha(Y_b) = sum_a alpha(a,b) X_a, and a left action
/// X_a |> Y_c = sum_b act(a,c,b) Y_b.
class CrossedModule {
public:
  CrossedModule(std::string name, LieAlgebra g, LieAlgebra h, RatMatrix alpha);

  const std::string& name() const { return name_; }
  const LieAlgebra& g() const { return g_; }
  const LieAlgebra& h() const { return h_; }
  const RatMatrix& alpha() const { return alpha_; }

  void set_action(int a, int c, int b, const Rational& value);
  const Rational& act(int a, int c, int b) const;

  AlgVector act_vec(const AlgVector& x, const AlgVector& y) const;
  AlgVector alpha_vec(const AlgVector& y) const;

  /// dim_h x dim_h matrix of X_a acting on h.
  const RatMatrix& action_matrix(int a) const;

  /// rho(alpha(Y_b)) in g's representation.
  RatMatrix rep_alpha(int b) const;

  /// Full axiom sweep: Jacobi for both algebras, rep consistency where
  /// present, alpha and the action being Lie algebra maps, action by
  /// derivations, alpha-equivariance, and the Peiffer identity.
  ValidationReport validate() const;

  bool has_representation() const { return g_.has_representation(); }

  /// Exact left inverse of a -> vec(rho(X_a)); lets callers decompose
  /// rep-space matrices back into g coordinates.
  const RatMatrix& rep_left_inverse() const;

  /// Must be called once after all action entries are set.
  void finalize();

private:
  std::string name_;
  LieAlgebra g_, h_;
  RatMatrix alpha_;
  std::vector<Rational> act_;
  std::vector<RatMatrix> action_mats_;
  mutable std::optional<RatMatrix> rep_left_inverse_;
  bool finalized_ = false;

  std::size_t aidx(int a, int c, int b) const;
};

using CrossedModulePtr = std::shared_ptr<const CrossedModule>;

} // namespace gauge2

#endif
