#include "gauge2/chsas.hpp"

#include <stdexcept>

namespace gauge2 {

ScalarForm pairing_eval(const InvariantPairing& p, const std::vector<AlgebraForm>& gs,
                        const AlgebraForm& hv)
{
  if (static_cast<int>(gs.size()) != p.arity())
    throw std::invalid_argument("pairing arity mismatch");
  if (hv.side() != Side::H) throw std::invalid_argument("h slot expects an h-valued form");
  int degree = hv.degree();
  for (const auto& g : gs) {
    if (g.side() != Side::G) throw std::invalid_argument("g slot expects a g-valued form");
    if (g.module() != hv.module() || g.chart() != hv.chart())
      throw std::invalid_argument("pairing operands must share module and chart");
    degree += g.degree();
  }
  const Chart chart = hv.chart();
  ScalarForm out(chart, degree);
  const int n = p.arity();
  for (TupleIterator it(n, p.dim_g()); !it.done(); it.next()) {
    const auto& a = it.tuple();
    bool skip = false;
    for (int i = 0; i < n && !skip; ++i) skip = gs[i].component(a[i]).is_zero();
    if (skip) continue;
    ScalarForm prod = gs[0].component(a[0]);
    for (int i = 1; i < n; ++i) prod = prod.wedge(gs[i].component(a[i]));
    if (prod.is_zero()) continue;
    for (int b = 0; b < p.dim_h(); ++b) {
      const Rational& coeff = p.at(a, b);
      if (coeff == 0 || hv.component(b).is_zero()) continue;
      out += prod.wedge(hv.component(b)).scaled(coeff);
    }
  }
  return out;
}

namespace {

std::vector<AlgebraForm> repeat_slots(const AlgebraForm& f, int count)
{
  return std::vector<AlgebraForm>(static_cast<std::size_t>(count), f);
}

std::vector<AlgebraForm> prepend(const AlgebraForm& head, std::vector<AlgebraForm> tail)
{
  std::vector<AlgebraForm> slots;
  slots.reserve(tail.size() + 1);
  slots.push_back(head);
  for (auto& t : tail) slots.push_back(std::move(t));
  return slots;
}

} // namespace

ScalarForm characteristic_form(const TwoConnection& conn, const InvariantPairing& p)
{
  const CurvaturePair cur = curvatures(conn);
  return pairing_eval(p, repeat_slots(cur.F, p.arity()), cur.G);
}

TCurvaturePair rescaling_family(const TwoConnection& conn)
{
  const int m = conn.chart().dim;
  const CurvaturePair cur = curvatures(conn);
  const Polynomial t = Polynomial::t(m);
  const Polynomial t2mt = t * t - t;
  const AlgebraForm half_AA = wedge_bracket(conn.A, conn.A).scaled(Rational(1, 2));
  const AlgebraForm AB = wedge_action(conn.A, conn.B);
  return {cur.F.scaled(t) + half_AA.scaled(t2mt), cur.G.scaled(t) + AB.scaled(t2mt)};
}

ScalarForm chsas_form(const TwoConnection& conn, const InvariantPairing& p)
{
  const int n = p.arity();
  const TCurvaturePair fam = rescaling_family(conn);
  ScalarForm integrand =
      pairing_eval(p, prepend(conn.A, repeat_slots(fam.F_t, n - 1)), fam.G_t).scaled(Rational(n));
  integrand += pairing_eval(p, repeat_slots(fam.F_t, n), conn.B);
  return integrand.integrate_t01();
}

Interpolation::Interpolation(TwoConnection c0, TwoConnection c1)
    : conn0(std::move(c0)),
      conn1(std::move(c1)),
      theta(conn1.A - conn0.A),
      Phi(conn1.B - conn0.B),
      A_t(conn0.A + theta.scaled(Polynomial::t(conn0.chart().dim))),
      B_t(conn0.B + Phi.scaled(Polynomial::t(conn0.chart().dim))),
      F_t(A_t.d() + wedge_bracket(A_t, A_t).scaled(Rational(1, 2)) - alpha_lift(B_t)),
      G_t(B_t.d() + wedge_action(A_t, B_t))
{
}

ScalarForm transgression_form(const Interpolation& interp, const InvariantPairing& p)
{
  const int n = p.arity();
  ScalarForm integrand =
      pairing_eval(p, prepend(interp.theta, repeat_slots(interp.F_t, n - 1)), interp.G_t)
          .scaled(Rational(n));
  integrand += pairing_eval(p, repeat_slots(interp.F_t, n), interp.Phi);
  return integrand.integrate_t01();
}

ScalarForm chern_weil_residual(const Interpolation& interp, const InvariantPairing& p)
{
  return characteristic_form(interp.conn1, p) - characteristic_form(interp.conn0, p) -
         transgression_form(interp, p).d();
}

ScalarForm variation_residual(const TwoConnection& conn, const AlgebraForm& dA,
                              const AlgebraForm& dB, const InvariantPairing& p)
{
  const int n = p.arity();
  const CurvaturePair cur = curvatures(conn);
  const auto [dF, dG] = linearized_curvatures(conn, dA, dB);
  ScalarForm lhs =
      pairing_eval(p, prepend(dF, repeat_slots(cur.F, n - 1)), cur.G).scaled(Rational(n));
  lhs += pairing_eval(p, repeat_slots(cur.F, n), dG);
  ScalarForm boundary =
      pairing_eval(p, prepend(dA, repeat_slots(cur.F, n - 1)), cur.G).scaled(Rational(n));
  boundary += pairing_eval(p, repeat_slots(cur.F, n), dB);
  return lhs - boundary.d();
}

ScalarForm pairing_covariant_expansion(const AlgebraForm& connection,
                                       const std::vector<AlgebraForm>& slots,
                                       const AlgebraForm& hv, const InvariantPairing& p)
{
  ScalarForm out(hv.chart(), 0);
  bool first = true;
  int degree_before = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    std::vector<AlgebraForm> mod = slots;
    mod[i] = covariant_d(connection, slots[i]);
    ScalarForm term = pairing_eval(p, mod, hv);
    if (degree_before % 2) term = -term;
    if (first) {
      out = std::move(term);
      first = false;
    } else {
      out += term;
    }
    degree_before += slots[i].degree();
  }
  ScalarForm hterm = pairing_eval(p, slots, covariant_d(connection, hv));
  if (degree_before % 2) hterm = -hterm;
  if (first) return hterm;
  out += hterm;
  return out;
}

ScalarForm interp_action_term_h(const Interpolation& interp, const InvariantPairing& p)
{
  return pairing_eval(p, repeat_slots(interp.F_t, p.arity()),
                      wedge_action(interp.theta, interp.B_t));
}

ScalarForm interp_action_term_g(const Interpolation& interp, const InvariantPairing& p)
{
  const int n = p.arity();
  return pairing_eval(p, prepend(interp.theta, repeat_slots(interp.F_t, n - 1)),
                      wedge_action(interp.F_t, interp.B_t));
}

ScalarForm interp_alpha_slot_residual(const Interpolation& interp, const InvariantPairing& p)
{
  const int n = p.arity();
  if (n < 2) throw std::invalid_argument("alpha-slot identity needs arity >= 2");
  const AlgebraForm DtFt = interp.covariant(interp.F_t);
  std::vector<AlgebraForm> slots;
  slots.push_back(interp.theta);
  slots.push_back(DtFt);
  for (int i = 0; i < n - 2; ++i) slots.push_back(interp.F_t);
  return pairing_eval(p, slots, interp.G_t);
}

ScalarForm interp_alpha_swap_residual(const Interpolation& interp, const InvariantPairing& p)
{
  const int n = p.arity();
  const AlgebraForm DtFt = interp.covariant(interp.F_t);
  ScalarForm lhs = pairing_eval(p, prepend(DtFt, repeat_slots(interp.F_t, n - 1)), interp.Phi);
  std::vector<AlgebraForm> slots = repeat_slots(interp.F_t, n - 1);
  slots.push_back(alpha_lift(interp.Phi));
  ScalarForm rhs = pairing_eval(p, slots, interp.G_t);
  return lhs + rhs;
}

} // namespace gauge2
