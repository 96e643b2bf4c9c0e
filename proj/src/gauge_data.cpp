#include "gauge2/gauge_data.hpp"

#include <stdexcept>

namespace gauge2 {

PolyMatrix lift_matrix(const RatMatrix& m, int nx)
{
  PolyMatrix r(m.rows(), m.cols(), Polynomial(nx));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r.at(i, j) = Polynomial::constant(nx, m.at(i, j));
  return r;
}

namespace {

bool is_poly_identity(const PolyMatrix& m, int nx)
{
  const Polynomial one = Polynomial::constant(nx, 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j && m.at(i, j) != one) return false;
      if (i != j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}

// rho-matrix of a g-valued coefficient vector with Polynomial entries.
PolyMatrix rep_combination(const CrossedModule& cm, const std::vector<Polynomial>& coords, int nx)
{
  const auto& rho = cm.g().representation();
  const int d = cm.g().rep_size();
  PolyMatrix out(d, d, Polynomial(nx));
  for (int a = 0; a < cm.g().dim(); ++a) {
    if (coords[a].is_zero()) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (rho[a].at(i, j) != 0) out.at(i, j) += coords[a].scaled(rho[a].at(i, j));
  }
  return out;
}

// Exact decomposition of a rep-space polynomial matrix into g coordinates;
// throws if the matrix leaves the algebra span.
std::vector<Polynomial> decompose_to_algebra(const CrossedModule& cm, const PolyMatrix& m, int nx,
                                             const char* what)
{
  const RatMatrix& L = cm.rep_left_inverse();
  const int d = cm.g().rep_size();
  std::vector<Polynomial> coords(cm.g().dim(), Polynomial(nx));
  for (int a = 0; a < cm.g().dim(); ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational& l = L.at(a, i * d + j);
        if (l != 0) coords[a] += m.at(i, j).scaled(l);
      }
  if (rep_combination(cm, coords, nx) != m)
    throw std::invalid_argument(std::string(what) + " does not lie in the algebra span");
  return coords;
}

} // namespace

GaugeData::GaugeData(CrossedModulePtr cm, Chart chart, PolyMatrix group, PolyMatrix group_inv,
                     PolyMatrix action, AlgebraForm phi)
    : cm_(std::move(cm)),
      chart_(chart),
      group_(std::move(group)),
      group_inv_(std::move(group_inv)),
      action_(std::move(action)),
      conj_(),
      phi_(std::move(phi)),
      mc_(cm_, Side::G, chart, 1)
{
  if (!cm_->has_representation())
    throw std::invalid_argument("gauge transformations need a matrix representation on g");
  const int d = cm_->g().rep_size();
  if (group_.rows() != d || group_.cols() != d || group_inv_.rows() != d || group_inv_.cols() != d)
    throw std::invalid_argument("group element must match the representation size");
  if (action_.rows() != cm_->h().dim() || action_.cols() != cm_->h().dim())
    throw std::invalid_argument("action matrix must be dim(h) x dim(h)");
  if (phi_.side() != Side::H || phi_.degree() != 1 || phi_.chart() != chart_ ||
      phi_.module() != cm_)
    throw std::invalid_argument("phi must be an h-valued 1-form on the same chart");
  const int nx = chart_.dim;
  if (!is_poly_identity(group_ * group_inv_, nx) || !is_poly_identity(group_inv_ * group_, nx))
    throw std::invalid_argument("supplied inverse is not exact");
  build_derived();
}

void GaugeData::build_derived()
{
  const int nx = chart_.dim;
  const int d = cm_->g().rep_size();
  const auto& rho = cm_->g().representation();

  conj_ = PolyMatrix(cm_->g().dim(), cm_->g().dim(), Polynomial(nx));
  for (int a = 0; a < cm_->g().dim(); ++a) {
    const PolyMatrix m = group_inv_ * lift_matrix(rho[a], nx) * group_;
    auto coords = decompose_to_algebra(*cm_, m, nx, "conjugated basis element");
    for (int b = 0; b < cm_->g().dim(); ++b) conj_.at(b, a) = std::move(coords[b]);
  }

  // g^{-1} dg, built per chart direction: the v-th column holds the
  // coefficient of dx_v.
  std::vector<std::vector<Polynomial>> mc_coords(chart_.dim);
  for (int v = 0; v < chart_.dim; ++v) {
    PolyMatrix dgv(d, d, Polynomial(nx));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dgv.at(i, j) = group_.at(i, j).derivative_x(v);
    const PolyMatrix m = group_inv_ * dgv;
    mc_coords[v] = decompose_to_algebra(*cm_, m, nx, "Maurer-Cartan form");
  }
  mc_ = AlgebraForm(cm_, Side::G, chart_, 1);
  for (int a = 0; a < cm_->g().dim(); ++a) {
    ScalarForm f(chart_, 1);
    for (int v = 0; v < chart_.dim; ++v) f.add_term({v}, mc_coords[v][a]);
    mc_.set_component(a, std::move(f));
  }
}

GaugeData GaugeData::constant(CrossedModulePtr cm, Chart chart, const RatMatrix& group,
                              const RatMatrix& group_inv, const RatMatrix& action, AlgebraForm phi)
{
  const int nx = chart.dim;
  return GaugeData(std::move(cm), chart, lift_matrix(group, nx), lift_matrix(group_inv, nx),
                   lift_matrix(action, nx), std::move(phi));
}

GaugeData GaugeData::identity(CrossedModulePtr cm, Chart chart, AlgebraForm phi)
{
  const RatMatrix ig = RatMatrix::identity_like(cm->g().rep_size(), Rational(1), Rational(0));
  const RatMatrix ih = RatMatrix::identity_like(cm->h().dim(), Rational(1), Rational(0));
  return constant(std::move(cm), chart, ig, ig, ih, std::move(phi));
}

GaugeData GaugeData::identity(CrossedModulePtr cm, Chart chart)
{
  AlgebraForm phi(cm, Side::H, chart, 1);
  return identity(std::move(cm), chart, std::move(phi));
}

AlgebraForm GaugeData::conjugate(const AlgebraForm& g_valued) const
{
  if (g_valued.side() != Side::G) throw std::invalid_argument("conjugate expects a g-valued form");
  return g_valued.linear_transform(conj_, Side::G);
}

AlgebraForm GaugeData::act_on(const AlgebraForm& h_valued) const
{
  if (h_valued.side() != Side::H) throw std::invalid_argument("act_on expects an h-valued form");
  return h_valued.linear_transform(action_, Side::H);
}

ValidationReport GaugeData::validate() const
{
  ValidationReport report;
  const int nx = chart_.dim;
  const int dg = cm_->g().dim(), dh = cm_->h().dim();
  const PolyMatrix alpha = lift_matrix(cm_->alpha(), nx);

  // alpha(g^{-1} |> Y) = g^{-1} alpha(Y) g
  AxiomCheck equiv{"gauge_alpha_equivariance"};
  {
    const PolyMatrix lhs = alpha * action_;
    const PolyMatrix rhs = conj_ * alpha;
    for (int a = 0; a < dg; ++a)
      for (int c = 0; c < dh; ++c)
        if (lhs.at(a, c) != rhs.at(a, c)) equiv.residuals.push_back({{a, c}, Rational(1)});
  }
  equiv.pass = equiv.residuals.empty();
  report.checks.push_back(std::move(equiv));

  // g^{-1} |> (X |> Y) = (g^{-1} X g) |> (g^{-1} |> Y)
  AxiomCheck intertwine{"gauge_action_intertwines"};
  for (int a = 0; a < dg; ++a) {
    PolyMatrix lhs(dh, dh, Polynomial(nx));
    {
      const PolyMatrix ra = lift_matrix(cm_->action_matrix(a), nx);
      lhs = action_ * ra;
    }
    PolyMatrix rhs(dh, dh, Polynomial(nx));
    for (int b = 0; b < dg; ++b) {
      if (conj_.at(b, a).is_zero()) continue;
      const RatMatrix& rb = cm_->action_matrix(b);
      for (int i = 0; i < dh; ++i)
        for (int j = 0; j < dh; ++j)
          if (rb.at(i, j) != 0) rhs.at(i, j) += conj_.at(b, a).scaled(rb.at(i, j));
    }
    const PolyMatrix prod = rhs * action_;
    for (int i = 0; i < dh; ++i)
      for (int j = 0; j < dh; ++j)
        if (lhs.at(i, j) != prod.at(i, j)) intertwine.residuals.push_back({{a, i, j}, Rational(1)});
  }
  intertwine.pass = intertwine.residuals.empty();
  report.checks.push_back(std::move(intertwine));

  // g^{-1} |> [Y, Y'] = [g^{-1}|>Y, g^{-1}|>Y']
  AxiomCheck automorphism{"gauge_h_automorphism"};
  for (int c = 0; c < dh; ++c)
    for (int d = 0; d < dh; ++d)
      for (int b = 0; b < dh; ++b) {
        Polynomial lhs(nx);
        for (int e = 0; e < dh; ++e)
          if (cm_->h().c(c, d, e) != 0) lhs += action_.at(b, e).scaled(cm_->h().c(c, d, e));
        Polynomial rhs(nx);
        for (int e = 0; e < dh; ++e)
          for (int f = 0; f < dh; ++f)
            if (cm_->h().c(e, f, b) != 0)
              rhs += (action_.at(e, c) * action_.at(f, d)).scaled(cm_->h().c(e, f, b));
        if (lhs != rhs) automorphism.residuals.push_back({{c, d, b}, Rational(1)});
      }
  automorphism.pass = automorphism.residuals.empty();
  report.checks.push_back(std::move(automorphism));

  return report;
}

GaugeData GaugeData::compose(const GaugeData& a, const GaugeData& b)
{
  if (a.cm_ != b.cm_ || a.chart_ != b.chart_)
    throw std::invalid_argument("gauge data mismatch in composition");
  if (!a.phi_.is_zero() || !b.phi_.is_zero())
    throw std::invalid_argument("composition is defined for phi = 0 gauge data");
  return GaugeData(a.cm_, a.chart_, a.group_ * b.group_, b.group_inv_ * a.group_inv_,
                   b.action_ * a.action_, a.phi_);
}

TwoConnection gauge_transform(const TwoConnection& conn, const GaugeData& gd)
{
  if (conn.module() != gd.module() || conn.chart() != gd.chart())
    throw std::invalid_argument("gauge data does not match the connection");
  AlgebraForm A1 = gd.conjugate(conn.A) + gd.maurer_cartan() + alpha_lift(gd.phi());
  AlgebraForm B1 = gd.act_on(conn.B) + gd.phi().d() + wedge_action(A1, gd.phi()) -
                   wedge_bracket(gd.phi(), gd.phi()).scaled(Rational(1, 2));
  return TwoConnection(std::move(A1), std::move(B1));
}

std::pair<AlgebraForm, AlgebraForm> curvature_transform_residual(const TwoConnection& conn,
                                                                 const GaugeData& gd)
{
  const CurvaturePair before = curvatures(conn);
  const TwoConnection after = gauge_transform(conn, gd);
  const CurvaturePair cur = curvatures(after);
  AlgebraForm rg = cur.F - gd.conjugate(before.F);
  AlgebraForm rh = cur.G - gd.act_on(before.G) - wedge_action(cur.F, gd.phi());
  return {std::move(rg), std::move(rh)};
}

} // namespace gauge2
