#include <doctest.h>

#include "oracles.hpp"
#include "gauge2/builtins.hpp"
#include "gauge2/tgft.hpp"

using namespace gauge2;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

ScalarForm dx(const Chart& c, int i) { return ScalarForm::covector(c, i - 1); }
Polynomial x(const Chart& c, int i) { return Polynomial::variable(c.dim, i - 1); }

AlgebraForm single(const CrossedModulePtr& cm, Side side, const Chart& c, int comp,
                   const ScalarForm& f)
{
  AlgebraForm a(cm, side, c, f.degree());
  a.set_component(comp, f);
  return a;
}

VariationData random_variation(const CrossedModulePtr& cm, const Chart& c, SplitMix64& rng)
{
  return VariationData(random_algebra_form(cm, Side::G, c, 1, rng),
                       random_algebra_form(cm, Side::H, c, 2, rng),
                       random_algebra_form(cm, Side::G, c, 1, rng),
                       random_algebra_form(cm, Side::H, c, 2, rng));
}

} // namespace

TEST_CASE("action integrand is the transgression form")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(1);
  const Interpolation interp(random_connection(p2, c, rng), random_connection(p2, c, rng));
  CHECK(action_integrand(interp, eta) == transgression_form(interp, eta));
  CHECK(action_integrand(Interpolation(interp.conn1, interp.conn1), eta).is_zero());
}

TEST_CASE("action value: frozen 4d example and box additivity")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(4);
  // A = x2 dx1 (x) J1, B = x3 dx3^dx4 (x) P1, from the zero connection.
  const AlgebraForm A =
      single(p2, Side::G, c, 1, ScalarForm::from_function(c, x(c, 2)).wedge(dx(c, 1)));
  const AlgebraForm B =
      single(p2, Side::H, c, 1,
             ScalarForm::from_function(c, x(c, 3)).wedge(dx(c, 3)).wedge(dx(c, 4)));
  const Interpolation interp(TwoConnection::zero(p2, c), TwoConnection(A, B));
  const Box unit(4, {r(0), r(1)});
  CHECK(action_value(interp, eta, unit) == r(-1, 4));

  // against the antidifferentiation oracle on the top component
  const ScalarForm q = action_integrand(interp, eta);
  const std::vector<int> top{0, 1, 2, 3};
  CHECK(action_value(interp, eta, unit) == oracles::box_integral(q.component(top), unit));

  // additivity over a partition
  Box lower = unit, upper = unit;
  lower[2] = {r(0), r(1, 3)};
  upper[2] = {r(1, 3), r(1)};
  CHECK(action_value(interp, eta, lower) + action_value(interp, eta, upper) ==
        action_value(interp, eta, unit));

  // conn0 = conn1 integrates to zero
  const TwoConnection cc(A, B);
  CHECK(action_value(Interpolation(cc, cc), eta, unit) == r(0));

  // dimension contract
  Chart c5(5);
  SplitMix64 rng(3);
  const Interpolation wrong(random_connection(p2, c5, rng), random_connection(p2, c5, rng));
  CHECK_THROWS_AS(action_value(wrong, eta, Box(5, {r(0), r(1)})), std::invalid_argument);
}

TEST_CASE("action value vanishes when the top component is absent")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(4);
  // Connection with no x4 anywhere: the degree-4 integrand misses dx4.
  const AlgebraForm A =
      single(p2, Side::G, c, 1, ScalarForm::from_function(c, x(c, 2)).wedge(dx(c, 1)));
  const AlgebraForm B =
      single(p2, Side::H, c, 1, ScalarForm::from_function(c, x(c, 1)).wedge(dx(c, 2)).wedge(dx(c, 3)));
  const Interpolation interp(TwoConnection::zero(p2, c), TwoConnection(A, B));
  CHECK(action_value(interp, eta, Box(4, {r(0), r(1)})) == r(0));
}

TEST_CASE("field equations: flat connections solve them")
{
  SplitMix64 rng(11);
  for (const char* name : {"poincare2", "abelian_tt", "adjoint_so21"}) {
    auto [cm, p] = load_builtin(name);
    Chart c(5);
    const auto [gres, hres] = field_equation_residuals(TwoConnection::zero(cm, c), p);
    for (const auto& f : gres) CHECK(f.is_zero());
    for (const auto& f : hres) CHECK(f.is_zero());
    // gauge-transformed flat connections stay solutions
    AlgebraForm phi = random_algebra_form(cm, Side::H, c, 1, rng);
    const TwoConnection moved =
        gauge_transform(TwoConnection::zero(cm, c), GaugeData::identity(cm, c, phi));
    CHECK(curvatures(moved).is_flat());
    const auto [g2, h2] = field_equation_residuals(moved, p);
    for (const auto& f : g2) CHECK(f.is_zero());
    for (const auto& f : h2) CHECK(f.is_zero());
  }
}

TEST_CASE("field equations: poincare2 h-residuals contract F with eta")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(21);
  const TwoConnection conn = random_connection(p2, c, rng);
  const CurvaturePair cur = curvatures(conn);
  const auto [gres, hres] = field_equation_residuals(conn, eta);
  REQUIRE(hres.size() == 3);
  const Rational etadiag[3] = {r(-1), r(1), r(1)};
  bool some_nonzero = false;
  for (int b = 0; b < 3; ++b) {
    CHECK(hres[b] == cur.F.component(b).scaled(etadiag[b]));
    some_nonzero = some_nonzero || !hres[b].is_zero();
  }
  CHECK(some_nonzero);
}

TEST_CASE("field equations: fake-flat instances")
{
  SplitMix64 rng(31);
  {
    // poincare2 with A = 0: F = 0 (h-residuals vanish) while G = dB feeds
    // nonzero g-residuals.
    auto [p2, eta] = load_builtin("poincare2");
    Chart c(5);
    const AlgebraForm B = random_algebra_form(p2, Side::H, c, 2, rng);
    const TwoConnection conn(AlgebraForm(p2, Side::G, c, 1), B);
    const CurvaturePair cur = curvatures(conn);
    REQUIRE(cur.F.is_zero());
    REQUIRE(!cur.G.is_zero());
    const auto [gres, hres] = field_equation_residuals(conn, eta);
    for (const auto& f : hres) CHECK(f.is_zero());
    bool some = false;
    for (const auto& f : gres) some = some || !f.is_zero();
    CHECK(some);
  }
  {
    // abelian_tt with alpha = id and B = dA: fake-flatness forces full
    // flatness (G = ddA = 0), so every residual vanishes.
    auto [tt, one] = load_builtin("abelian_tt");
    Chart c(5);
    const AlgebraForm A = random_algebra_form(tt, Side::G, c, 1, rng);
    AlgebraForm B(tt, Side::H, c, 2);
    B.set_component(0, A.d().component(0)); // alpha = id forces B = dA
    const TwoConnection conn(A, B);
    const CurvaturePair cur = curvatures(conn);
    CHECK(cur.F.is_zero());
    CHECK(cur.G.is_zero());
    const auto [gres, hres] = field_equation_residuals(conn, one);
    for (const auto& f : gres) CHECK(f.is_zero());
    for (const auto& f : hres) CHECK(f.is_zero());
  }
}

TEST_CASE("boundary term: zero cases and the arity-1 expansion")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(41);
  const TwoConnection c0 = random_connection(p2, c, rng);
  const TwoConnection c1 = random_connection(p2, c, rng);
  const Interpolation interp(c0, c1);

  CHECK(boundary_term(interp, VariationData::zero(p2, c), eta).is_zero());
  CHECK(boundary_term(Interpolation(c1, c1), random_variation(p2, c, rng), eta).is_zero());

  // n = 1: the (n-1) term drops; integrate the t-linear pieces by hand:
  // Pi = <theta, dB0> + 1/2 <theta, dB1 - dB0> + <dA0, Phi> + 1/2 <dA1 - dA0, Phi>.
  const VariationData var = random_variation(p2, c, rng);
  const ScalarForm byhand =
      pairing_eval(eta, {interp.theta}, var.dB0) +
      pairing_eval(eta, {interp.theta}, var.dB1 - var.dB0).scaled(r(1, 2)) +
      pairing_eval(eta, {var.dA0}, interp.Phi) +
      pairing_eval(eta, {var.dA1 - var.dA0}, interp.Phi).scaled(r(1, 2));
  CHECK(boundary_term(interp, var, eta) == byhand);
}

TEST_CASE("variation identity holds with the sign-adjusted boundary term")
{
  SplitMix64 rng(51);
  {
    auto [p2, eta] = load_builtin("poincare2");
    Chart c(5);
    for (int k = 0; k < 5; ++k) {
      const Interpolation interp(random_connection(p2, c, rng),
                                 random_connection(p2, c, rng));
      const VariationData var = random_variation(p2, c, rng);
      CHECK(variation_identity_residual_adjusted(interp, var, eta).is_zero());
    }
  }
  {
    auto [tt, one] = load_builtin("abelian_tt");
    Chart c(5);
    for (int k = 0; k < 5; ++k) {
      const Interpolation interp(random_connection(tt, c, rng),
                                 random_connection(tt, c, rng));
      const VariationData var = random_variation(tt, c, rng);
      CHECK(variation_identity_residual_adjusted(interp, var, one).is_zero());
    }
  }
  {
    auto gl2 = make_adjoint_gl2();
    const InvariantPairing p2t = InvariantPairing::from_trace(*gl2, 2);
    Chart c(7);
    const Interpolation interp(random_connection(gl2, c, rng),
                               random_connection(gl2, c, rng));
    const VariationData var = random_variation(gl2, c, rng);
    CHECK(variation_identity_residual_adjusted(interp, var, p2t).is_zero());
  }
}

TEST_CASE("the displayed boundary term misses by an exact d-term")
{
  // With the all-plus boundary form the residual equals
  // 2n * d int_0^1 <dA_t ^ F_t^{n-1}, Phi> dt, coefficient by coefficient.
  SplitMix64 rng(61);
  {
    auto [p2, eta] = load_builtin("poincare2");
    Chart c(5);
    for (int k = 0; k < 3; ++k) {
      const Interpolation interp(random_connection(p2, c, rng),
                                 random_connection(p2, c, rng));
      const VariationData var = random_variation(p2, c, rng);
      const ScalarForm residual = variation_identity_residual(interp, var, eta);
      const ScalarForm remainder =
          pairing_eval(eta, {var.dA_t}, interp.Phi).integrate_t01().d().scaled(r(2));
      CHECK(residual == remainder);
    }
  }
  {
    auto gl2 = make_adjoint_gl2();
    const InvariantPairing p2t = InvariantPairing::from_trace(*gl2, 2);
    Chart c(7);
    const Interpolation interp(random_connection(gl2, c, rng),
                               random_connection(gl2, c, rng));
    const VariationData var = random_variation(gl2, c, rng);
    const ScalarForm residual = variation_identity_residual(interp, var, p2t);
    const ScalarForm remainder = pairing_eval(p2t, {var.dA_t, interp.F_t}, interp.Phi)
                                     .integrate_t01()
                                     .d()
                                     .scaled(r(4));
    CHECK(residual == remainder);
  }
  // Zero variations keep even the displayed version exact.
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  const Interpolation interp(random_connection(p2, c, rng), random_connection(p2, c, rng));
  CHECK(variation_identity_residual(interp, VariationData::zero(p2, c), eta).is_zero());
}

TEST_CASE("specialization to the single-connection variation identity")
{
  // conn0 = 0 and var0 = 0: the adjusted identity reduces to the potential
  // variation statement for the chsas form.
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(71);
  const TwoConnection conn = random_connection(p2, c, rng);
  const Interpolation interp(TwoConnection::zero(p2, c), conn);
  const VariationData var(AlgebraForm(p2, Side::G, c, 1), AlgebraForm(p2, Side::H, c, 2),
                          random_algebra_form(p2, Side::G, c, 1, rng),
                          random_algebra_form(p2, Side::H, c, 2, rng));
  CHECK(variation_identity_residual_adjusted(interp, var, eta).is_zero());
  CHECK(variation_identity_residual(interp, var, eta) ==
        pairing_eval(eta, {var.dA_t}, interp.Phi).integrate_t01().d().scaled(r(2)));
}

TEST_CASE("interpolation transformation laws and action invariance")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(81);
  const Interpolation interp(random_connection(p2, c, rng), random_connection(p2, c, rng));

  // identity gauge data
  const GaugeData id = GaugeData::identity(p2, c);
  CHECK(interpolation_transform_residuals(interp, id).all_zero());
  CHECK(action_gauge_invariance(interp, id, eta).residual_zero);

  // constant boost with phi = 0
  const auto [b, binv] = so21_boost(0, 1, r(1, 2));
  const GaugeData boost =
      GaugeData::constant(p2, c, b, binv, binv, AlgebraForm(p2, Side::H, c, 1));
  CHECK(interpolation_transform_residuals(interp, boost).all_zero());
  CHECK(action_gauge_invariance(interp, boost, eta).residual_zero);

  // identity with random polynomial phi
  for (int k = 0; k < 3; ++k) {
    AlgebraForm phi = random_algebra_form(p2, Side::H, c, 1, rng);
    const GaugeData gd = GaugeData::identity(p2, c, phi);
    CHECK(interpolation_transform_residuals(interp, gd).all_zero());
    const GaugeInvarianceResult res = action_gauge_invariance(interp, gd, eta);
    CHECK(res.residual_zero);
    CHECK(res.residual_closed);
  }

  // boost combined with phi
  AlgebraForm phi = random_algebra_form(p2, Side::H, c, 1, rng);
  const GaugeData both = GaugeData::constant(p2, c, b, binv, binv, phi);
  CHECK(interpolation_transform_residuals(interp, both).all_zero());
  CHECK(action_gauge_invariance(interp, both, eta).residual_zero);
}

TEST_CASE("boundary faces report")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(91);
  const Interpolation interp(random_connection(p2, c, rng), random_connection(p2, c, rng));
  const Box unit(5, {r(0), r(1)});

  // zero variation: every face restriction is the zero form
  const auto zero_faces = boundary_faces(interp, VariationData::zero(p2, c), eta, unit);
  CHECK(zero_faces.size() == 10);
  for (const auto& face : zero_faces) CHECK(face.form.is_zero());

  // random variation: faces are reported; restriction drops the face covector
  const VariationData var = random_variation(p2, c, rng);
  const ScalarForm pi = boundary_term(interp, var, eta);
  for (const auto& face : boundary_faces(interp, var, eta, unit)) {
    CHECK(face.form == pi.restrict_face(face.coordinate, face.value));
  }
}
