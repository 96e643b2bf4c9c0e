#include "gauge2/connection.hpp"

#include <stdexcept>

namespace gauge2 {

TwoConnection::TwoConnection(AlgebraForm a, AlgebraForm b) : A(std::move(a)), B(std::move(b))
{
  if (A.side() != Side::G || A.degree() != 1)
    throw std::invalid_argument("A must be a g-valued 1-form");
  if (B.side() != Side::H || B.degree() != 2)
    throw std::invalid_argument("B must be an h-valued 2-form");
  if (A.module() != B.module() || A.chart() != B.chart())
    throw std::invalid_argument("A and B must share module and chart");
}

CurvaturePair curvatures(const TwoConnection& conn)
{
  AlgebraForm F = conn.A.d() + wedge_bracket(conn.A, conn.A).scaled(Rational(1, 2)) -
                  alpha_lift(conn.B);
  AlgebraForm G = conn.B.d() + wedge_action(conn.A, conn.B);
  return {std::move(F), std::move(G)};
}

std::pair<AlgebraForm, AlgebraForm> bianchi_residuals(const TwoConnection& conn)
{
  const CurvaturePair cur = curvatures(conn);
  AlgebraForm rg = cur.F.d() + wedge_bracket(conn.A, cur.F) + alpha_lift(cur.G);
  AlgebraForm rh = cur.G.d() + wedge_action(conn.A, cur.G) - wedge_action(cur.F, conn.B);
  return {std::move(rg), std::move(rh)};
}

std::pair<AlgebraForm, AlgebraForm> linearized_curvatures(const TwoConnection& conn,
                                                          const AlgebraForm& dA,
                                                          const AlgebraForm& dB)
{
  if (dA.side() != Side::G || dA.degree() != 1)
    throw std::invalid_argument("dA must be a g-valued 1-form");
  if (dB.side() != Side::H || dB.degree() != 2)
    throw std::invalid_argument("dB must be an h-valued 2-form");
  AlgebraForm dF = covariant_d(conn.A, dA) - alpha_lift(dB);
  AlgebraForm dG = covariant_d(conn.A, dB) + wedge_action(dA, conn.B);
  return {std::move(dF), std::move(dG)};
}

} // namespace gauge2
