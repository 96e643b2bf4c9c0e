#ifndef GAUGE2_BUILTINS_HPP
#define GAUGE2_BUILTINS_HPP

#include "gauge2/pairing.hpp"

#include <utility>

namespace gauge2 {

/// Built-in validated crossed modules with their default pairings (arity 1).
/// Known names: poincare2, abelian_tt, adjoint_so21.
std::pair<CrossedModulePtr, InvariantPairing> load_builtin(const std::string& name);

/// Pairing of the requested arity for a built-in module. poincare2 only
/// carries the arity-1 Minkowski pairing; abelian_tt has the all-ones tensor
/// in every arity; adjoint_so21 uses the symmetrized trace.
InvariantPairing builtin_pairing(const std::string& name, const CrossedModule& cm, int arity);

bool is_builtin(const std::string& name);

/// gl(2,R) acting on itself by the adjoint action, alpha = id, with the
/// defining 2x2 representation. Not part of the builtin name set; used by
/// tests and shipped as a scenario algebra file. Its symmetrized-trace
/// pairing is nonzero in every arity, unlike so(2,1) whose arity-2
/// symmetric invariant vanishes identically.
CrossedModulePtr make_adjoint_gl2();

/// Exact SO(2,1) boost in the (i,j) coordinate plane, parametrized the
/// rational way: cosh = (1+s^2)/(1-s^2), sinh = 2s/(1-s^2). Returns the
/// matrix and its exact inverse (the boost with -s).
std::pair<RatMatrix, RatMatrix> so21_boost(int i, int j, const Rational& s);

/// Rational rotation in the (1,2) spacelike plane via tan half-angle u.
std::pair<RatMatrix, RatMatrix> so21_rotation(const Rational& u);

} // namespace gauge2

#endif
