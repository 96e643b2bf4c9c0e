#ifndef GAUGE2_PAIRING_HPP
#define GAUGE2_PAIRING_HPP

#include "gauge2/crossed_module.hpp"

#include <span>

namespace gauge2 {

/// Arity-n multilinear pairing <X_{a1} ... X_{an}, Y_b> = T(a1..an, b),
/// symmetric in the g slots, ad-invariant, and compatible with swapping an
/// alpha'd argument into the h slot.
class InvariantPairing {
public:
  InvariantPairing(int arity, int dim_g, int dim_h);

  int arity() const { return arity_; }
  int dim_g() const { return dim_g_; }
  int dim_h() const { return dim_h_; }

  void set(std::span<const int> g_idx, int h_idx, const Rational& value);
  const Rational& at(std::span<const int> g_idx, int h_idx) const;

  bool is_zero() const;

  /// Symmetry, ad-invariance, and the alpha-swap axiom, all as exact
  /// residual tensors over every basis tuple.
  ValidationReport validate(const CrossedModule& cm) const;

  /// Group-level invariance residual for explicit matrices: conj acts on
  /// each g slot, act on the h slot; zero iff T is invariant.
  std::vector<AxiomResidual> conjugation_residual(const RatMatrix& conj,
                                                  const RatMatrix& act) const;

  /// Symmetrized-trace pairing: sum over all orderings of the g arguments
  /// and all insertion positions of rho(alpha(Y_b)) of the matrix trace.
  static InvariantPairing from_trace(const CrossedModule& cm, int arity);

private:
  int arity_, dim_g_, dim_h_;
  std::vector<Rational> t_;

  std::size_t index(std::span<const int> g_idx, int h_idx) const;
};

/// Odometer over basis tuples [0,dim)^len.
class TupleIterator {
public:
  TupleIterator(int len, int dim);
  bool done() const { return done_; }
  void next();
  const std::vector<int>& tuple() const { return tuple_; }

private:
  std::vector<int> tuple_;
  int dim_;
  bool done_;
};

} // namespace gauge2

#endif
