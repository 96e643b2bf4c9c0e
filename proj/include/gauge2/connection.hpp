#ifndef GAUGE2_CONNECTION_HPP
#define GAUGE2_CONNECTION_HPP

#include "gauge2/algebra_form.hpp"

namespace gauge2 {

/// 2-connection (A, B): g-valued 1-form and h-valued 2-form on one chart.
struct TwoConnection {
  AlgebraForm A;
  AlgebraForm B;

  TwoConnection(AlgebraForm a, AlgebraForm b);

  static TwoConnection zero(CrossedModulePtr cm, Chart chart)
  {
    return TwoConnection(AlgebraForm(cm, Side::G, chart, 1), AlgebraForm(cm, Side::H, chart, 2));
  }

  const CrossedModulePtr& module() const { return A.module(); }
  const Chart& chart() const { return A.chart(); }
};

/// Fake curvature F (g-valued 2-form) and 2-curvature G (h-valued 3-form).
struct CurvaturePair {
  AlgebraForm F;
  AlgebraForm G;

  bool is_flat() const { return F.is_zero() && G.is_zero(); }
};

/// F = dA + (1/2) A ^[,] A - alpha(B), G = dB + A ^|> B.
CurvaturePair curvatures(const TwoConnection& conn);

/// (dF + A^[,]F + alpha(G), dG + A^|>G - F^|>B); identically zero for any
/// connection.
std::pair<AlgebraForm, AlgebraForm> bianchi_residuals(const TwoConnection& conn);

/// First-order curvature response (dF, dG) to a connection variation
/// (dA, dB): (D dA - alpha(dB), D dB + dA ^|> B).
std::pair<AlgebraForm, AlgebraForm> linearized_curvatures(const TwoConnection& conn,
                                                          const AlgebraForm& dA,
                                                          const AlgebraForm& dB);

} // namespace gauge2

#endif
