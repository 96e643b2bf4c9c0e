#include "gauge2/tgft.hpp"

#include <stdexcept>

namespace gauge2 {

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

VariationData::VariationData(AlgebraForm a0, AlgebraForm b0, AlgebraForm a1, AlgebraForm b1)
    : dA0(std::move(a0)),
      dB0(std::move(b0)),
      dA1(std::move(a1)),
      dB1(std::move(b1)),
      dA_t(dA0 + (dA1 - dA0).scaled(Polynomial::t(dA0.chart().dim))),
      dB_t(dB0 + (dB1 - dB0).scaled(Polynomial::t(dB0.chart().dim)))
{
  if (dA0.side() != Side::G || dA0.degree() != 1 || dA1.side() != Side::G || dA1.degree() != 1)
    throw std::invalid_argument("connection variations must be g-valued 1-forms");
  if (dB0.side() != Side::H || dB0.degree() != 2 || dB1.side() != Side::H || dB1.degree() != 2)
    throw std::invalid_argument("B variations must be h-valued 2-forms");
}

VariationData VariationData::zero(CrossedModulePtr cm, Chart chart)
{
  return VariationData(AlgebraForm(cm, Side::G, chart, 1), AlgebraForm(cm, Side::H, chart, 2),
                       AlgebraForm(cm, Side::G, chart, 1), AlgebraForm(cm, Side::H, chart, 2));
}

bool VariationData::is_zero() const
{
  return dA0.is_zero() && dB0.is_zero() && dA1.is_zero() && dB1.is_zero();
}

ScalarForm action_integrand(const Interpolation& interp, const InvariantPairing& p)
{
  return transgression_form(interp, p);
}

Rational action_value(const Interpolation& interp, const InvariantPairing& p, const Box& box)
{
  const int m = interp.conn0.chart().dim;
  if (m != 2 * p.arity() + 2)
    throw std::invalid_argument("action quadrature needs chart dim == 2n+2");
  if (static_cast<int>(box.size()) != m) throw std::invalid_argument("box dimension mismatch");
  return action_integrand(interp, p).integrate_box(box);
}

std::pair<std::vector<ScalarForm>, std::vector<ScalarForm>> field_equation_residuals(
    const TwoConnection& conn, const InvariantPairing& p)
{
  const int n = p.arity();
  const CurvaturePair cur = curvatures(conn);
  const Chart chart = conn.chart();
  const int dg = p.dim_g(), dh = p.dim_h();

  std::vector<ScalarForm> g_res;
  g_res.reserve(dg);
  for (int a = 0; a < dg; ++a) {
    ScalarForm acc(chart, 2 * n + 1);
    std::vector<int> tuple(n);
    tuple[0] = a;
    for (TupleIterator it(n - 1, dg); !it.done(); it.next()) {
      const auto& rest = it.tuple();
      for (int i = 0; i < n - 1; ++i) tuple[i + 1] = rest[i];
      bool skip = false;
      for (int i = 1; i < n && !skip; ++i) skip = cur.F.component(tuple[i]).is_zero();
      if (skip) continue;
      ScalarForm prod = ScalarForm::unit(chart);
      for (int i = 1; i < n; ++i) prod = prod.wedge(cur.F.component(tuple[i]));
      for (int b = 0; b < dh; ++b) {
        const Rational& coeff = p.at(tuple, b);
        if (coeff == 0 || cur.G.component(b).is_zero()) continue;
        acc += prod.wedge(cur.G.component(b)).scaled(coeff * n);
      }
    }
    g_res.push_back(std::move(acc));
  }

  std::vector<ScalarForm> h_res;
  h_res.reserve(dh);
  for (int b = 0; b < dh; ++b) {
    ScalarForm acc(chart, 2 * n);
    for (TupleIterator it(n, dg); !it.done(); it.next()) {
      const auto& a = it.tuple();
      const Rational& coeff = p.at(a, b);
      if (coeff == 0) continue;
      bool skip = false;
      for (int i = 0; i < n && !skip; ++i) skip = cur.F.component(a[i]).is_zero();
      if (skip) continue;
      ScalarForm prod = cur.F.component(a[0]);
      for (int i = 1; i < n; ++i) prod = prod.wedge(cur.F.component(a[i]));
      acc += prod.scaled(coeff);
    }
    h_res.push_back(std::move(acc));
  }

  return {std::move(g_res), std::move(h_res)};
}

namespace {

ScalarForm boundary_term_signed(const Interpolation& interp, const VariationData& var,
                                const InvariantPairing& p, const Rational& third_sign)
{
  const int n = p.arity();
  const Chart chart = interp.conn0.chart();
  ScalarForm integrand(chart, 2 * n + 1);
  if (n >= 2) {
    std::vector<AlgebraForm> slots;
    slots.push_back(interp.theta);
    slots.push_back(var.dA_t);
    for (int i = 0; i < n - 2; ++i) slots.push_back(interp.F_t);
    integrand += pairing_eval(p, slots, interp.G_t).scaled(Rational(n - 1));
  }
  integrand += pairing_eval(p, prepend(interp.theta, repeat_slots(interp.F_t, n - 1)), var.dB_t);
  integrand += pairing_eval(p, prepend(var.dA_t, repeat_slots(interp.F_t, n - 1)), interp.Phi)
                   .scaled(third_sign);
  return integrand.scaled(Rational(n)).integrate_t01();
}

ScalarForm endpoint_terms(const Interpolation& interp, const VariationData& var,
                          const InvariantPairing& p)
{
  const int n = p.arity();
  const CurvaturePair c1 = curvatures(interp.conn1);
  const CurvaturePair c0 = curvatures(interp.conn0);
  ScalarForm e =
      pairing_eval(p, prepend(var.dA1, repeat_slots(c1.F, n - 1)), c1.G).scaled(Rational(n));
  e += pairing_eval(p, repeat_slots(c1.F, n), var.dB1);
  e -= pairing_eval(p, prepend(var.dA0, repeat_slots(c0.F, n - 1)), c0.G).scaled(Rational(n));
  e -= pairing_eval(p, repeat_slots(c0.F, n), var.dB0);
  return e;
}

ScalarForm perturbed_first_order(const Interpolation& interp, const VariationData& var,
                                 const InvariantPairing& p)
{
  const int m = interp.conn0.chart().dim;
  const Polynomial s = Polynomial::s(m);
  TwoConnection p0(interp.conn0.A + var.dA0.scaled(s), interp.conn0.B + var.dB0.scaled(s));
  TwoConnection p1(interp.conn1.A + var.dA1.scaled(s), interp.conn1.B + var.dB1.scaled(s));
  const Interpolation perturbed(std::move(p0), std::move(p1));
  return transgression_form(perturbed, p).coefficient_of_s(1);
}

} // namespace

ScalarForm boundary_term(const Interpolation& interp, const VariationData& var,
                         const InvariantPairing& p)
{
  return boundary_term_signed(interp, var, p, Rational(1));
}

ScalarForm boundary_term_adjusted(const Interpolation& interp, const VariationData& var,
                                  const InvariantPairing& p)
{
  return boundary_term_signed(interp, var, p, Rational(-1));
}

ScalarForm variation_identity_residual(const Interpolation& interp, const VariationData& var,
                                       const InvariantPairing& p)
{
  return perturbed_first_order(interp, var, p) - endpoint_terms(interp, var, p) +
         boundary_term(interp, var, p).d();
}

ScalarForm variation_identity_residual_adjusted(const Interpolation& interp,
                                                const VariationData& var,
                                                const InvariantPairing& p)
{
  return perturbed_first_order(interp, var, p) - endpoint_terms(interp, var, p) +
         boundary_term_adjusted(interp, var, p).d();
}

Interpolation gauge_transform(const Interpolation& interp, const GaugeData& gd)
{
  return Interpolation(gauge_transform(interp.conn0, gd), gauge_transform(interp.conn1, gd));
}

bool InterpolationTransformResiduals::all_zero() const
{
  return theta.is_zero() && Phi.is_zero() && F_t.is_zero() && G_t.is_zero();
}

InterpolationTransformResiduals interpolation_transform_residuals(const Interpolation& interp,
                                                                  const GaugeData& gd)
{
  const Interpolation after = gauge_transform(interp, gd);
  AlgebraForm r_theta = after.theta - gd.conjugate(interp.theta);
  AlgebraForm r_phi =
      after.Phi - gd.act_on(interp.Phi) - wedge_action(after.theta, gd.phi());
  AlgebraForm r_f = after.F_t - gd.conjugate(interp.F_t);
  AlgebraForm r_g = after.G_t - gd.act_on(interp.G_t) - wedge_action(after.F_t, gd.phi());
  return {std::move(r_theta), std::move(r_phi), std::move(r_f), std::move(r_g)};
}

GaugeInvarianceResult action_gauge_invariance(const Interpolation& interp, const GaugeData& gd,
                                              const InvariantPairing& p)
{
  const Interpolation after = gauge_transform(interp, gd);
  ScalarForm residual = transgression_form(after, p) - transgression_form(interp, p);
  const bool zero = residual.is_zero();
  const bool closed = zero || residual.d().is_zero();
  return {std::move(residual), zero, closed};
}

std::vector<FaceRestriction> boundary_faces(const Interpolation& interp, const VariationData& var,
                                            const InvariantPairing& p, const Box& box)
{
  const Chart chart = interp.conn0.chart();
  if (static_cast<int>(box.size()) != chart.dim)
    throw std::invalid_argument("box dimension mismatch");
  const ScalarForm pi = boundary_term(interp, var, p);
  std::vector<FaceRestriction> faces;
  for (int i = 0; i < chart.dim; ++i) {
    faces.push_back({i, box[i].first, pi.restrict_face(i, box[i].first)});
    faces.push_back({i, box[i].second, pi.restrict_face(i, box[i].second)});
  }
  return faces;
}

} // namespace gauge2
