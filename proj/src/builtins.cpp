#include "gauge2/builtins.hpp"

#include <stdexcept>

namespace gauge2 {

namespace {

// Levi-Civita on three indices, epsilon(0,1,2) = +1.
int epsilon3(int i, int j, int k)
{
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

const Rational eta[3] = {Rational(-1), Rational(1), Rational(1)};

LieAlgebra make_so21(const std::string& name, const std::vector<std::string>& labels)
{
  LieAlgebra g(name, labels);
  // [J^i, J^j] = eps^{ijk} eta_{kl} J^l
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon3(i, j, k);
        if (e) g.set_structure_constant(i, j, k, Rational(e) * eta[k]);
      }
  // Vector (= adjoint) representation: rho(J_a) = ad(J_a).
  std::vector<RatMatrix> rep;
  for (int a = 0; a < 3; ++a) rep.push_back(g.ad_matrix(a));
  g.set_representation(std::move(rep));
  return g;
}

CrossedModulePtr make_poincare2()
{
  LieAlgebra g = make_so21("so(2,1)", {"J0", "J1", "J2"});
  LieAlgebra h("R3", {"P0", "P1", "P2"});
  RatMatrix alpha(3, 3);
  auto cm = std::make_shared<CrossedModule>("poincare2", std::move(g), std::move(h), alpha);
  // J^i |> P^a = eps^{iak} eta_{kb} P^b
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int e = epsilon3(i, a, b);
        if (e) cm->set_action(i, a, b, Rational(e) * eta[b]);
      }
  cm->finalize();
  return cm;
}

CrossedModulePtr make_abelian_tt()
{
  LieAlgebra g("t", {"e"});
  LieAlgebra h("t", {"e"});
  std::vector<RatMatrix> rep{RatMatrix::identity_like(1, Rational(1), Rational(0))};
  g.set_representation(rep);
  RatMatrix alpha(1, 1);
  alpha.at(0, 0) = 1;
  auto cm = std::make_shared<CrossedModule>("abelian_tt", std::move(g), std::move(h), alpha);
  cm->finalize();
  return cm;
}

CrossedModulePtr make_adjoint_so21()
{
  LieAlgebra g = make_so21("so(2,1)", {"J0", "J1", "J2"});
  LieAlgebra h = make_so21("so(2,1)", {"J0", "J1", "J2"});
  RatMatrix alpha = RatMatrix::identity_like(3, Rational(1), Rational(0));
  LieAlgebra gc = g;
  auto cm = std::make_shared<CrossedModule>("adjoint_so21", std::move(g), std::move(h), alpha);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        if (gc.c(a, c, b) != 0) cm->set_action(a, c, b, gc.c(a, c, b));
  cm->finalize();
  return cm;
}

InvariantPairing ones_pairing(int arity, int dg, int dh)
{
  InvariantPairing p(arity, dg, dh);
  for (TupleIterator it(arity, dg); !it.done(); it.next())
    for (int b = 0; b < dh; ++b) p.set(it.tuple(), b, 1);
  return p;
}

InvariantPairing minkowski_pairing()
{
  InvariantPairing p(1, 3, 3);
  for (int i = 0; i < 3; ++i) p.set(std::vector<int>{i}, i, eta[i]);
  return p;
}

} // namespace

bool is_builtin(const std::string& name)
{
  return name == "poincare2" || name == "abelian_tt" || name == "adjoint_so21";
}

std::pair<CrossedModulePtr, InvariantPairing> load_builtin(const std::string& name)
{
  if (name == "poincare2") return {make_poincare2(), minkowski_pairing()};
  if (name == "abelian_tt") return {make_abelian_tt(), ones_pairing(1, 1, 1)};
  if (name == "adjoint_so21") {
    auto cm = make_adjoint_so21();
    auto pairing = InvariantPairing::from_trace(*cm, 1);
    return {cm, std::move(pairing)};
  }
  throw std::invalid_argument("unknown builtin module: " + name);
}

InvariantPairing builtin_pairing(const std::string& name, const CrossedModule& cm, int arity)
{
  if (name == "poincare2") {
    if (arity != 1)
      throw std::invalid_argument("poincare2 carries no symmetric invariant of arity " +
                                  std::to_string(arity));
    return minkowski_pairing();
  }
  if (name == "abelian_tt") return ones_pairing(arity, 1, 1);
  if (name == "adjoint_so21") return InvariantPairing::from_trace(cm, arity);
  throw std::invalid_argument("unknown builtin module: " + name);
}

CrossedModulePtr make_adjoint_gl2()
{
  // Basis E11, E12, E21, E22; [E_ij, E_kl] = d_jk E_il - d_li E_kj.
  const std::vector<std::string> labels{"E11", "E12", "E21", "E22"};
  auto pos = [](int idx) { return std::pair<int, int>{idx / 2, idx % 2}; };
  auto idx_of = [](int i, int j) { return 2 * i + j; };

  LieAlgebra make("gl(2,R)", labels);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto [i, j] = pos(a);
      const auto [k, l] = pos(b);
      if (j == k) {
        const int out = idx_of(i, l);
        make.set_structure_constant(a, b, out, make.c(a, b, out) + 1);
      }
      if (l == i) {
        const int out = idx_of(k, j);
        make.set_structure_constant(a, b, out, make.c(a, b, out) - 1);
      }
    }
  std::vector<RatMatrix> rep;
  for (int a = 0; a < 4; ++a) {
    RatMatrix m(2, 2);
    const auto [i, j] = pos(a);
    m.at(i, j) = 1;
    rep.push_back(std::move(m));
  }
  LieAlgebra g = make;
  g.set_representation(rep);
  LieAlgebra h = make;
  RatMatrix alpha = RatMatrix::identity_like(4, Rational(1), Rational(0));
  LieAlgebra gc = g;
  auto cm = std::make_shared<CrossedModule>("adjoint_gl2", std::move(g), std::move(h), alpha);
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      for (int b = 0; b < 4; ++b)
        if (gc.c(a, c, b) != 0) cm->set_action(a, c, b, gc.c(a, c, b));
  cm->finalize();
  return cm;
}

std::pair<RatMatrix, RatMatrix> so21_boost(int i, int j, const Rational& s)
{
  if (i != 0 || (j != 1 && j != 2)) throw std::invalid_argument("boost plane must be (0,1) or (0,2)");
  if (s == 1 || s == -1) throw std::invalid_argument("boost parameter must avoid +-1");
  const Rational c = (1 + s * s) / (1 - s * s);
  const Rational sh = (2 * s) / (1 - s * s);
  auto build = [&](const Rational& ch, const Rational& sh_) {
    RatMatrix m = RatMatrix::identity_like(3, Rational(1), Rational(0));
    m.at(i, i) = ch;
    m.at(j, j) = ch;
    m.at(i, j) = sh_;
    m.at(j, i) = sh_;
    return m;
  };
  return {build(c, sh), build(c, -sh)};
}

std::pair<RatMatrix, RatMatrix> so21_rotation(const Rational& u)
{
  const Rational den = 1 + u * u;
  const Rational c = (1 - u * u) / den;
  const Rational sn = (2 * u) / den;
  auto build = [&](const Rational& cs, const Rational& sn_) {
    RatMatrix m = RatMatrix::identity_like(3, Rational(1), Rational(0));
    m.at(1, 1) = cs;
    m.at(2, 2) = cs;
    m.at(1, 2) = -sn_;
    m.at(2, 1) = sn_;
    return m;
  };
  return {build(c, sn), build(c, -sn)};
}

} // namespace gauge2
