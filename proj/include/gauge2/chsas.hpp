#ifndef GAUGE2_CHSAS_HPP
#define GAUGE2_CHSAS_HPP

#include "gauge2/connection.hpp"
#include "gauge2/pairing.hpp"

#include <vector>

namespace gauge2 {

/// Form-level pairing: sum over basis tuples of
/// gs_1^{a_1} ^ ... ^ gs_n^{a_n} ^ hv^b * T(a_1..a_n, b), components
/// concatenated in slot order with no extra Koszul signs.
ScalarForm pairing_eval(const InvariantPairing& p, const std::vector<AlgebraForm>& gs,
                        const AlgebraForm& hv);

/// <F^n, G>: the closed degree-(2n+3) invariant density of a 2-connection.
ScalarForm characteristic_form(const TwoConnection& conn, const InvariantPairing& p);

/// Rescaling family F_t = tF + (t^2-t)(1/2)A^[,]A, G_t = tG + (t^2-t)A^|>B.
struct TCurvaturePair {
  AlgebraForm F_t;
  AlgebraForm G_t;
};

TCurvaturePair rescaling_family(const TwoConnection& conn);

/// Potential for the characteristic form via the exact t-integral
/// int_0^1 { n<A ^ F_t^{n-1}, G_t> + <F_t^n, B> } dt; d(chsas) recovers
/// characteristic_form exactly.
ScalarForm chsas_form(const TwoConnection& conn, const InvariantPairing& p);

/// Straight-line interpolation between two 2-connections with its
/// t-dependent curvatures.
struct Interpolation {
  TwoConnection conn0;
  TwoConnection conn1;
  AlgebraForm theta; // A1 - A0
  AlgebraForm Phi;   // B1 - B0
  AlgebraForm A_t;
  AlgebraForm B_t;
  AlgebraForm F_t;
  AlgebraForm G_t;

  Interpolation(TwoConnection c0, TwoConnection c1);

  /// Covariant derivative along the interpolated connection.
  AlgebraForm covariant(const AlgebraForm& w) const { return covariant_d(A_t, w); }
};

/// Transgression form int_0^1 { n<theta ^ F_t^{n-1}, G_t> + <F_t^n, Phi> } dt.
ScalarForm transgression_form(const Interpolation& interp, const InvariantPairing& p);

/// characteristic(conn1) - characteristic(conn0) - d(transgression);
/// identically zero.
ScalarForm chern_weil_residual(const Interpolation& interp, const InvariantPairing& p);

/// n<dF ^ F^{n-1}, G> + <F^n, dG> - d( n<dA ^ F^{n-1}, G> + <F^n, dB> )
/// with (dF, dG) the linearized curvatures; identically zero.
ScalarForm variation_residual(const TwoConnection& conn, const AlgebraForm& dA,
                              const AlgebraForm& dB, const InvariantPairing& p);

/// <D(W_1 ^ ... ^ W_n, V)> expanded by the graded Leibniz rule with the
/// covariant derivative of the supplied connection in every slot; equals
/// d<W_1 ^ ... ^ W_n, V> for any ad-invariant pairing.
ScalarForm pairing_covariant_expansion(const AlgebraForm& connection,
                                       const std::vector<AlgebraForm>& slots,
                                       const AlgebraForm& hv, const InvariantPairing& p);

/// Interpolation-family combinations entering the transgression proof.
/// The two action cross-terms vanish only jointly:
///   <F_t^n, theta ^|> B_t> + n <theta ^ F_t^{n-1}, F_t ^|> B_t> == 0.
ScalarForm interp_action_term_h(const Interpolation& interp, const InvariantPairing& p);
ScalarForm interp_action_term_g(const Interpolation& interp, const InvariantPairing& p);

/// <theta ^ D_t F_t ^ F_t^{n-2}, G_t> (arity >= 2); vanishes identically.
ScalarForm interp_alpha_slot_residual(const Interpolation& interp, const InvariantPairing& p);

/// <D_t F_t ^ F_t^{n-1}, Phi> + <F_t^{n-1} ^ alpha(Phi), G_t>; vanishes
/// identically.
ScalarForm interp_alpha_swap_residual(const Interpolation& interp, const InvariantPairing& p);

} // namespace gauge2

#endif
