#include <doctest.h>

#include "oracles.hpp"
#include "gauge2/builtins.hpp"
#include "gauge2/chsas.hpp"
#include "gauge2/gauge_data.hpp"

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

// g = exp(u * (J0 + J1)) in the so(2,1) vector representation: (J0+J1) is
// nilpotent, so the series terminates and both g and its inverse are
// polynomial matrices.
GaugeData null_rotation_gauge(const CrossedModulePtr& cm, const Chart& chart,
                              const Polynomial& u)
{
  const auto& rho = cm->g().representation();
  RatMatrix N(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) N.at(i, j) = rho[0].at(i, j) + rho[1].at(i, j);
  const RatMatrix N2 = N * N;
  const int nx = chart.dim;
  PolyMatrix g(3, 3, Polynomial(nx)), gi(3, 3, Polynomial(nx));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Polynomial base = Polynomial::constant(nx, i == j ? 1 : 0);
      g.at(i, j) = base + u.scaled(N.at(i, j)) + (u * u).scaled(N2.at(i, j) / 2);
      gi.at(i, j) = base - u.scaled(N.at(i, j)) + (u * u).scaled(N2.at(i, j) / 2);
    }
  return GaugeData(cm, chart, g, gi, gi, AlgebraForm(cm, Side::H, chart, 1));
}

} // namespace

TEST_CASE("wedge_bracket: single-term expansion and abelian collapse")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(4);
  // u = f dx1 (x) J0, v = g dx2 (x) J1 -> f g dx1^dx2 (x) [J0,J1] = ... (x) J2
  const ScalarForm f = ScalarForm::from_function(c, x(c, 2)).wedge(dx(c, 1));
  const ScalarForm g = ScalarForm::from_function(c, x(c, 3)).wedge(dx(c, 2));
  const AlgebraForm u = single(p2, Side::G, c, 0, f);
  const AlgebraForm v = single(p2, Side::G, c, 1, g);
  const AlgebraForm w = wedge_bracket(u, v);
  CHECK(w.component(2) == f.wedge(g));
  CHECK(w.component(0).is_zero());
  CHECK(w.component(1).is_zero());

  auto [tt, one] = load_builtin("abelian_tt");
  SplitMix64 rng(1);
  const AlgebraForm a = random_algebra_form(tt, Side::G, c, 1, rng);
  const AlgebraForm b = random_algebra_form(tt, Side::G, c, 2, rng);
  CHECK(wedge_bracket(a, b).is_zero());
}

TEST_CASE("wedge_bracket equals the matrix-product route on adjoint_so21")
{
  auto [cm, kf] = load_builtin("adjoint_so21");
  Chart c(6);
  SplitMix64 rng(17);
  for (int k1 : {1, 2})
    for (int k2 : {1, 2})
      for (int trial = 0; trial < 3; ++trial) {
        const AlgebraForm u = random_algebra_form(cm, Side::G, c, k1, rng);
        const AlgebraForm v = random_algebra_form(cm, Side::G, c, k2, rng);
        CHECK(wedge_bracket(u, v) == oracles::matrix_wedge_bracket(u, v));
      }
}

TEST_CASE("wedge_action examples")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  const ScalarForm b23 = dx(c, 2).wedge(dx(c, 3));
  // (dx1 (x) J1) ^|> (dx2^dx3 (x) P1) = 0 because J1 |> P1 = 0
  CHECK(wedge_action(single(p2, Side::G, c, 1, dx(c, 1)), single(p2, Side::H, c, 1, b23))
            .is_zero());
  // (dx1 (x) J0) ^|> (dx2^dx3 (x) P1) = dx1^dx2^dx3 (x) (J0 |> P1 = P2)
  const AlgebraForm res =
      wedge_action(single(p2, Side::G, c, 0, dx(c, 1)), single(p2, Side::H, c, 1, b23));
  CHECK(res.component(2) == dx(c, 1).wedge(b23));
  CHECK(res.component(0).is_zero());
  CHECK(res.component(1).is_zero());

  auto [tt, one] = load_builtin("abelian_tt");
  SplitMix64 rng(2);
  CHECK(wedge_action(random_algebra_form(tt, Side::G, c, 1, rng),
                     random_algebra_form(tt, Side::H, c, 2, rng))
            .is_zero());

  CHECK_THROWS_AS(wedge_action(single(p2, Side::G, c, 0, dx(c, 1)),
                               single(p2, Side::G, c, 0, dx(c, 2))),
                  std::invalid_argument);
}

TEST_CASE("alpha_lift")
{
  Chart c(4);
  auto [p2, eta] = load_builtin("poincare2");
  SplitMix64 rng(5);
  CHECK(alpha_lift(random_algebra_form(p2, Side::H, c, 2, rng)).is_zero());

  auto [tt, one] = load_builtin("abelian_tt");
  const AlgebraForm v = random_algebra_form(tt, Side::H, c, 2, rng);
  const AlgebraForm lifted = alpha_lift(v);
  CHECK(lifted.side() == Side::G);
  CHECK(lifted.component(0) == v.component(0));
  CHECK(alpha_lift(AlgebraForm(tt, Side::H, c, 2)).is_zero());
}

TEST_CASE("covariant derivative")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  SplitMix64 rng(7);
  // A = 0 reduces to d
  const AlgebraForm w = random_algebra_form(p2, Side::H, c, 2, rng);
  CHECK(covariant_d(AlgebraForm(p2, Side::G, c, 1), w) == w.d());

  // abelian: both routes reduce to d
  auto [tt, one] = load_builtin("abelian_tt");
  const AlgebraForm aw = random_algebra_form(tt, Side::H, c, 2, rng);
  const AlgebraForm aa = random_algebra_form(tt, Side::G, c, 1, rng);
  CHECK(covariant_d(aa, aw) == aw.d());
  const AlgebraForm ag = random_algebra_form(tt, Side::G, c, 2, rng);
  CHECK(covariant_d(aa, ag) == ag.d());

  // poincare2 single-term: A = x2 dx1 (x) J0, w = x4 dx3 (x) P1
  const AlgebraForm A =
      single(p2, Side::G, c, 0, ScalarForm::from_function(c, x(c, 2)).wedge(dx(c, 1)));
  const AlgebraForm wv =
      single(p2, Side::H, c, 1, ScalarForm::from_function(c, x(c, 4)).wedge(dx(c, 3)));
  const AlgebraForm out = covariant_d(A, wv);
  // dw lands in P1; the action term x2 x4 dx1^dx3 lands in P2 via J0|>P1.
  CHECK(out.component(1) == wv.component(1).d());
  CHECK(out.component(2) ==
        ScalarForm::from_function(c, x(c, 2) * x(c, 4)).wedge(dx(c, 1)).wedge(dx(c, 3)));
  CHECK(out.component(0).is_zero());
}

TEST_CASE("curvature examples")
{
  Chart c5(5);
  auto [tt, one] = load_builtin("abelian_tt");
  {
    // abelian: A = x2 dx1, B = 0 -> F = -dx1^dx2, G = 0
    Chart c(5);
    const AlgebraForm A =
        single(tt, Side::G, c, 0, ScalarForm::from_function(c, x(c, 2)).wedge(dx(c, 1)));
    const TwoConnection conn(A, AlgebraForm(tt, Side::H, c, 2));
    const CurvaturePair cur = curvatures(conn);
    CHECK(cur.F.component(0) == -(dx(c, 1).wedge(dx(c, 2))));
    CHECK(cur.G.is_zero());
  }
  {
    // A = 0: F = -alpha(B), G = dB
    SplitMix64 rng(3);
    const AlgebraForm B = random_algebra_form(tt, Side::H, c5, 2, rng);
    const TwoConnection conn(AlgebraForm(tt, Side::G, c5, 1), B);
    const CurvaturePair cur = curvatures(conn);
    CHECK(cur.F == -alpha_lift(B));
    CHECK(cur.G == B.d());
  }
  {
    // poincare2 m=5: A = x2 dx1 (x) J1, B = x4 dx3^dx5 (x) P1
    auto [p2, eta] = load_builtin("poincare2");
    const AlgebraForm A =
        single(p2, Side::G, c5, 1, ScalarForm::from_function(c5, x(c5, 2)).wedge(dx(c5, 1)));
    const AlgebraForm B = single(
        p2, Side::H, c5, 1,
        ScalarForm::from_function(c5, x(c5, 4)).wedge(dx(c5, 3)).wedge(dx(c5, 5)));
    const CurvaturePair cur = curvatures(TwoConnection(A, B));
    CHECK(cur.F.component(1) == -(dx(c5, 1).wedge(dx(c5, 2))));
    CHECK(cur.F.component(0).is_zero());
    CHECK(cur.F.component(2).is_zero());
    CHECK(cur.G.component(1) == -(dx(c5, 3).wedge(dx(c5, 4)).wedge(dx(c5, 5))));
    CHECK(cur.G.component(0).is_zero());
    CHECK(cur.G.component(2).is_zero());
  }
}

TEST_CASE("Bianchi identities vanish exactly for random connections")
{
  SplitMix64 rng(1234);
  std::vector<std::pair<std::string, CrossedModulePtr>> modules;
  for (const char* name : {"poincare2", "abelian_tt", "adjoint_so21"})
    modules.emplace_back(name, load_builtin(name).first);
  modules.emplace_back("adjoint_gl2", make_adjoint_gl2());

  for (const auto& [name, cm] : modules)
    for (int m : {5, 7}) {
      Chart c(m);
      for (int trial = 0; trial < 4; ++trial) {
        const TwoConnection conn = random_connection(cm, c, rng);
        const auto [rg, rh] = bianchi_residuals(conn);
        INFO("module ", name, " m=", m, " trial ", trial);
        CHECK(rg.is_zero());
        CHECK(rh.is_zero());
        // pointwise oracle confirmation at 5 random rational points
        std::vector<std::vector<Rational>> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(oracles::random_point(c, rng));
        CHECK(oracles::vanishes_at_points(rg, pts));
        CHECK(oracles::vanishes_at_points(rh, pts));
      }
    }
}

TEST_CASE("trivial Bianchi case A = 0, B = 0")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  const auto [rg, rh] = bianchi_residuals(TwoConnection::zero(p2, c));
  CHECK(rg.is_zero());
  CHECK(rh.is_zero());
}

TEST_CASE("gauge transform: identity, boost, and phi-only cases")
{
  Chart c(5);
  SplitMix64 rng(42);
  auto [p2, eta] = load_builtin("poincare2");
  const TwoConnection conn = random_connection(p2, c, rng);

  // identity, phi = 0: unchanged
  const GaugeData id = GaugeData::identity(p2, c);
  const TwoConnection same = gauge_transform(conn, id);
  CHECK(same.A == conn.A);
  CHECK(same.B == conn.B);

  // constant boost, phi = 0: components transform linearly, curvatures conjugate
  const auto [b, binv] = so21_boost(0, 1, r(1, 2));
  const GaugeData boost =
      GaugeData::constant(p2, c, b, binv, binv, AlgebraForm(p2, Side::H, c, 1));
  CHECK(boost.validate().pass());
  const TwoConnection moved = gauge_transform(conn, boost);
  CHECK(moved.A == boost.conjugate(conn.A));
  CHECK(moved.B == boost.act_on(conn.B));
  const CurvaturePair before = curvatures(conn);
  const CurvaturePair after = curvatures(moved);
  CHECK(after.F == boost.conjugate(before.F));
  CHECK(after.G == boost.act_on(before.G));
  const auto [rg, rh] = curvature_transform_residual(conn, boost);
  CHECK(rg.is_zero());
  CHECK(rh.is_zero());

  // g = identity, A = B = 0, arbitrary phi: A' = 0 (alpha = 0), B' = d phi
  AlgebraForm phi = random_algebra_form(p2, Side::H, c, 1, rng);
  const GaugeData idphi = GaugeData::identity(p2, c, phi);
  const TwoConnection swept = gauge_transform(TwoConnection::zero(p2, c), idphi);
  CHECK(swept.A.is_zero());
  CHECK(swept.B == phi.d());
}

TEST_CASE("curvature transform residual vanishes for random phi and boosts")
{
  Chart c(5);
  SplitMix64 rng(77);
  auto [p2, eta] = load_builtin("poincare2");
  for (int trial = 0; trial < 5; ++trial) {
    const TwoConnection conn = random_connection(p2, c, rng);
    AlgebraForm phi = random_algebra_form(p2, Side::H, c, 1, rng);
    const auto [rg, rh] = curvature_transform_residual(conn, GaugeData::identity(p2, c, phi));
    CHECK(rg.is_zero());
    CHECK(rh.is_zero());
  }
  auto gl2 = make_adjoint_gl2();
  for (int trial = 0; trial < 3; ++trial) {
    const TwoConnection conn = random_connection(gl2, c, rng);
    // invertible constant element diag(2,1) with phi
    RatMatrix g = RatMatrix::identity_like(2, r(1), r(0));
    g.at(0, 0) = 2;
    RatMatrix gi = RatMatrix::identity_like(2, r(1), r(0));
    gi.at(0, 0) = r(1, 2);
    // act matrix: Ad(g^{-1}) on gl2 = conjugation by g^{-1} in component basis
    RatMatrix act(4, 4);
    // E_ij -> g^{-1} E_ij g with g = diag(2,1): entry scales by g_jj / g_ii.
    const Rational gd[2] = {r(2), r(1)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) act.at(2 * i + j, 2 * i + j) = gd[j] / gd[i];
    AlgebraForm phi = random_algebra_form(gl2, Side::H, c, 1, rng);
    const GaugeData gauge = GaugeData::constant(gl2, c, g, gi, act, phi);
    CHECK(gauge.validate().pass());
    const auto [rg, rh] = curvature_transform_residual(conn, gauge);
    CHECK(rg.is_zero());
    CHECK(rh.is_zero());
  }
}

TEST_CASE("x-dependent unipotent gauge elements work end to end")
{
  Chart c(5);
  SplitMix64 rng(88);
  auto [p2, eta] = load_builtin("poincare2");
  const GaugeData uni = null_rotation_gauge(p2, c, Polynomial::variable(5, 0));
  CHECK(uni.validate().pass());
  // maurer-cartan form is dx1 (x) (J0 + J1)
  CHECK(uni.maurer_cartan().component(0) == dx(c, 1));
  CHECK(uni.maurer_cartan().component(1) == dx(c, 1));
  CHECK(uni.maurer_cartan().component(2).is_zero());
  for (int trial = 0; trial < 3; ++trial) {
    const TwoConnection conn = random_connection(p2, c, rng);
    const auto [rg, rh] = curvature_transform_residual(conn, uni);
    CHECK(rg.is_zero());
    CHECK(rh.is_zero());
  }
}

TEST_CASE("x-dependent unipotent element on the gl2 module")
{
  auto gl2 = make_adjoint_gl2();
  Chart c(6);
  const int nx = 6;
  // g = [[1, x1],[0, 1]] in the defining representation.
  PolyMatrix g(2, 2, Polynomial(nx)), gi(2, 2, Polynomial(nx));
  g.at(0, 0) = Polynomial::constant(nx, 1);
  g.at(1, 1) = Polynomial::constant(nx, 1);
  g.at(0, 1) = Polynomial::variable(nx, 0);
  gi.at(0, 0) = Polynomial::constant(nx, 1);
  gi.at(1, 1) = Polynomial::constant(nx, 1);
  gi.at(0, 1) = -Polynomial::variable(nx, 0);
  // adjoint action of g^{-1} on the E-basis (columns are images):
  // E11 -> E11 + u E12, E12 -> E12, E21 -> E21 + u(E22 - E11) - u^2 E12,
  // E22 -> E22 - u E12, with u = x1.
  const Polynomial u = Polynomial::variable(nx, 0);
  PolyMatrix act(4, 4, Polynomial(nx));
  for (int i = 0; i < 4; ++i) act.at(i, i) = Polynomial::constant(nx, 1);
  act.at(1, 0) = u;
  act.at(0, 2) = -u;
  act.at(3, 2) = u;
  act.at(1, 2) = -(u * u);
  act.at(1, 3) = -u;
  const GaugeData gd(gl2, c, g, gi, act, AlgebraForm(gl2, Side::H, c, 1));
  CHECK(gd.validate().pass());
  SplitMix64 rng(515);
  const TwoConnection conn = random_connection(gl2, c, rng);
  const auto [rg, rh] = curvature_transform_residual(conn, gd);
  CHECK(rg.is_zero());
  CHECK(rh.is_zero());
  const InvariantPairing p2t = InvariantPairing::from_trace(*gl2, 2);
  const TwoConnection after = gauge_transform(conn, gd);
  CHECK(characteristic_form(after, p2t) == characteristic_form(conn, p2t));
}

TEST_CASE("gauge data rejects a wrong inverse")
{
  Chart c(4);
  auto [p2, eta] = load_builtin("poincare2");
  const auto [b, binv] = so21_boost(0, 1, r(1, 2));
  CHECK_THROWS_AS(GaugeData::constant(p2, c, b, b, b, AlgebraForm(p2, Side::H, c, 1)),
                  std::invalid_argument);
}

TEST_CASE("composition of phi-free gauge transforms")
{
  Chart c(5);
  SplitMix64 rng(31);
  auto [p2, eta] = load_builtin("poincare2");
  const TwoConnection conn = random_connection(p2, c, rng);
  const auto [b1, b1i] = so21_boost(0, 1, r(1, 2));
  const auto [b2, b2i] = so21_boost(0, 2, r(1, 3));
  const GaugeData g1 = GaugeData::constant(p2, c, b1, b1i, b1i, AlgebraForm(p2, Side::H, c, 1));
  const GaugeData g2 = GaugeData::constant(p2, c, b2, b2i, b2i, AlgebraForm(p2, Side::H, c, 1));
  const GaugeData g12 = GaugeData::compose(g1, g2);
  const TwoConnection two_steps = gauge_transform(gauge_transform(conn, g1), g2);
  const TwoConnection one_step = gauge_transform(conn, g12);
  CHECK(two_steps.A == one_step.A);
  CHECK(two_steps.B == one_step.B);
}

TEST_CASE("flatness propagates through phi-free gauge transforms")
{
  Chart c(5);
  auto [p2, eta] = load_builtin("poincare2");
  const auto [b, binv] = so21_boost(0, 2, r(2, 3));
  const GaugeData boost =
      GaugeData::constant(p2, c, b, binv, binv, AlgebraForm(p2, Side::H, c, 1));
  const TwoConnection flat = TwoConnection::zero(p2, c);
  CHECK(curvatures(flat).is_flat());
  CHECK(curvatures(gauge_transform(flat, boost)).is_flat());
  // and with phi: the zero curvature pair stays zero
  SplitMix64 rng(3);
  AlgebraForm phi = random_algebra_form(p2, Side::H, c, 1, rng);
  CHECK(curvatures(gauge_transform(flat, GaugeData::identity(p2, c, phi))).is_flat());
}

TEST_CASE("shape errors in the gauge layer")
{
  auto [p2, eta] = load_builtin("poincare2");
  Chart c(5);
  Chart c4(4);
  SplitMix64 rng(19);
  const AlgebraForm ug = random_algebra_form(p2, Side::G, c, 1, rng);
  const AlgebraForm uh = random_algebra_form(p2, Side::H, c, 1, rng);
  CHECK_THROWS_AS(wedge_bracket(ug, uh), std::invalid_argument); // mixed sides
  const AlgebraForm other = random_algebra_form(p2, Side::G, c4, 1, rng);
  CHECK_THROWS_AS(ug + other, std::invalid_argument); // chart mismatch
  CHECK_THROWS_AS(ScalarForm::covector(c, 0).wedge(ScalarForm::covector(c4, 0)),
                  std::invalid_argument);
  // covariant derivative needs a 1-form connection
  const AlgebraForm two = random_algebra_form(p2, Side::G, c, 2, rng);
  CHECK_THROWS_AS(covariant_d(two, ug), std::invalid_argument);
  // linearized curvatures reject wrong degrees
  const TwoConnection conn = random_connection(p2, c, rng);
  CHECK_THROWS_AS(linearized_curvatures(conn, two, random_algebra_form(p2, Side::H, c, 2, rng)),
                  std::invalid_argument);
  CHECK_THROWS_AS(linearized_curvatures(conn, ug, uh), std::invalid_argument);
}

TEST_CASE("linearized curvatures")
{
  Chart c(5);
  SplitMix64 rng(55);
  auto [p2, eta] = load_builtin("poincare2");
  const TwoConnection conn = random_connection(p2, c, rng);

  // zero variation -> zero response
  const auto [z1, z2] = linearized_curvatures(conn, AlgebraForm(p2, Side::G, c, 1),
                                              AlgebraForm(p2, Side::H, c, 2));
  CHECK(z1.is_zero());
  CHECK(z2.is_zero());

  // A = B = 0: response is (d dA - alpha(dB), d dB)
  const AlgebraForm dA = random_algebra_form(p2, Side::G, c, 1, rng);
  const AlgebraForm dB = random_algebra_form(p2, Side::H, c, 2, rng);
  const auto [e1, e2] = linearized_curvatures(TwoConnection::zero(p2, c), dA, dB);
  CHECK(e1 == dA.d() - alpha_lift(dB));
  CHECK(e2 == dB.d());

  // first order in the formal parameter s: curvatures(conn + s dconn)
  // has s-coefficient equal to the linearized response.
  const Polynomial s = Polynomial::s(5);
  const TwoConnection bumped(conn.A + dA.scaled(s), conn.B + dB.scaled(s));
  const CurvaturePair cur = curvatures(bumped);
  const auto [lF, lG] = linearized_curvatures(conn, dA, dB);
  CHECK(cur.F.coefficient_of_s(1) == lF);
  CHECK(cur.G.coefficient_of_s(1) == lG);
  // and the s^0 part is the unperturbed curvature
  const CurvaturePair base = curvatures(conn);
  CHECK(cur.F.coefficient_of_s(0) == base.F);
  CHECK(cur.G.coefficient_of_s(0) == base.G);
}
