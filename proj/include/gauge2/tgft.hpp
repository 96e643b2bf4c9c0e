#ifndef GAUGE2_TGFT_HPP
#define GAUGE2_TGFT_HPP

#include "gauge2/chsas.hpp"
#include "gauge2/gauge_data.hpp"

namespace gauge2 {

using Box = std::vector<std::pair<Rational, Rational>>;

/// Independent endpoint variations with their straight-line interpolation
/// dA_t = dA0 + t(dA1 - dA0), dB_t = dB0 + t(dB1 - dB0).
struct VariationData {
  AlgebraForm dA0, dB0, dA1, dB1;
  AlgebraForm dA_t, dB_t;

  VariationData(AlgebraForm a0, AlgebraForm b0, AlgebraForm a1, AlgebraForm b1);

  static VariationData zero(CrossedModulePtr cm, Chart chart);

  bool is_zero() const;
};

/// The action lagrangian: the transgression form of the interpolation.
ScalarForm action_integrand(const Interpolation& interp, const InvariantPairing& p);

/// Exact box quadrature of the lagrangian; requires chart dim == 2n+2.
Rational action_value(const Interpolation& interp, const InvariantPairing& p, const Box& box);

/// Per-basis field-equation residuals of a single connection: for each g
/// basis element the (2n+1)-form n<X_a . F^{n-1}, G> (one g slot frozen),
/// for each h basis element the (2n)-form <F^n, Y_b>. A connection solves
/// the field equations iff every entry vanishes.
std::pair<std::vector<ScalarForm>, std::vector<ScalarForm>> field_equation_residuals(
    const TwoConnection& conn, const InvariantPairing& p);

/// Boundary (2n+1)-form as displayed in the variation of the action:
///   n * int_0^1 { (n-1)<theta ^ dA_t ^ F_t^{n-2}, G_t>
///               + <theta ^ F_t^{n-1}, dB_t>
///               + <dA_t ^ F_t^{n-1}, Phi> } dt.
ScalarForm boundary_term(const Interpolation& interp, const VariationData& var,
                         const InvariantPairing& p);

/// Same up to the sign of the third term. With this sign the first-order
/// variation identity closes exactly; the displayed form leaves the exact
/// remainder 2n * d int_0^1 <dA_t ^ F_t^{n-1}, Phi> dt.
ScalarForm boundary_term_adjusted(const Interpolation& interp, const VariationData& var,
                                  const InvariantPairing& p);

/// First-order (exact s-coefficient) difference of the action integrand
/// under conn_i + s var_i, minus
///   n<dA1 ^ F1^{n-1}, G1> + <F1^n, dB1>
/// - n<dA0 ^ F0^{n-1}, G0> - <F0^n, dB0> - d boundary_term.
ScalarForm variation_identity_residual(const Interpolation& interp, const VariationData& var,
                                       const InvariantPairing& p);

/// Residual against boundary_term_adjusted; identically zero.
ScalarForm variation_identity_residual_adjusted(const Interpolation& interp,
                                                const VariationData& var,
                                                const InvariantPairing& p);

/// Both endpoints transformed with one (g, phi).
Interpolation gauge_transform(const Interpolation& interp, const GaugeData& gd);

/// Residuals of the displayed transformation laws of the interpolation data:
/// theta' - g^{-1}theta g, Phi' - g^{-1}|>Phi - theta'^|>phi,
/// F_t' - g^{-1}F_t g, G_t' - g^{-1}|>G_t - F_t'^|>phi.
struct InterpolationTransformResiduals {
  AlgebraForm theta, Phi, F_t, G_t;
  bool all_zero() const;
};

InterpolationTransformResiduals interpolation_transform_residuals(const Interpolation& interp,
                                                                  const GaugeData& gd);

/// action_integrand(transformed) - action_integrand(original). The report
/// records whether a nonzero residual is closed (hence exact on the chart).
struct GaugeInvarianceResult {
  ScalarForm residual;
  bool residual_zero;
  bool residual_closed;
};

GaugeInvarianceResult action_gauge_invariance(const Interpolation& interp, const GaugeData& gd,
                                              const InvariantPairing& p);

/// Restriction of the boundary form to the 2m faces of a box; entries are
/// (coordinate, value, restricted form).
struct FaceRestriction {
  int coordinate;
  Rational value;
  ScalarForm form;
};

std::vector<FaceRestriction> boundary_faces(const Interpolation& interp, const VariationData& var,
                                            const InvariantPairing& p, const Box& box);

} // namespace gauge2

#endif
