#ifndef GAUGE2_GAUGE_DATA_HPP
#define GAUGE2_GAUGE_DATA_HPP

#include "gauge2/connection.hpp"

namespace gauge2 {

using PolyMatrix = Matrix<Polynomial>;

/// Gauge data (g, phi): a group element as a rational-polynomial matrix in
/// g's representation with an explicitly supplied exact inverse, the matrix
/// realizing g^{-1} |> on h components, and an h-valued 1-form phi.
///
/// Exactness rules out generic exp(): accepted elements are constant
/// rational matrices or unipotent polynomial matrices whose inverse is the
/// finite Neumann series, supplied explicitly and verified.
class GaugeData {
public:
  GaugeData(CrossedModulePtr cm, Chart chart, PolyMatrix group, PolyMatrix group_inv,
            PolyMatrix action, AlgebraForm phi);

  static GaugeData constant(CrossedModulePtr cm, Chart chart, const RatMatrix& group,
                            const RatMatrix& group_inv, const RatMatrix& action, AlgebraForm phi);

  static GaugeData identity(CrossedModulePtr cm, Chart chart, AlgebraForm phi);
  static GaugeData identity(CrossedModulePtr cm, Chart chart);

  const CrossedModulePtr& module() const { return cm_; }
  const Chart& chart() const { return chart_; }
  const AlgebraForm& phi() const { return phi_; }
  const PolyMatrix& group() const { return group_; }
  const PolyMatrix& group_inv() const { return group_inv_; }
  const PolyMatrix& action() const { return action_; }

  /// Component matrix of X -> g^{-1} X g.
  const PolyMatrix& conj_matrix() const { return conj_; }

  /// g^{-1} dg as a g-valued 1-form.
  const AlgebraForm& maurer_cartan() const { return mc_; }

  AlgebraForm conjugate(const AlgebraForm& g_valued) const;
  AlgebraForm act_on(const AlgebraForm& h_valued) const;

  /// Group-level compatibility of (g, action) with the crossed module:
  /// alpha-equivariance, action intertwining, and h-automorphism; the
  /// inverse and span conditions are enforced at construction.
  ValidationReport validate() const;

  /// Sequential application: first `a`, then `b` (group element a*b).
  static GaugeData compose(const GaugeData& a, const GaugeData& b);

private:
  CrossedModulePtr cm_;
  Chart chart_;
  PolyMatrix group_, group_inv_, action_;
  PolyMatrix conj_;
  AlgebraForm phi_;
  AlgebraForm mc_;

  void build_derived();
};

/// A' = g^{-1}Ag + g^{-1}dg + alpha(phi),
/// B' = g^{-1}|>B + dphi + A'^|>phi - (1/2) phi^[,]phi.
TwoConnection gauge_transform(const TwoConnection& conn, const GaugeData& gd);

/// (F' - g^{-1}Fg, G' - g^{-1}|>G - F'^|>phi); identically zero.
std::pair<AlgebraForm, AlgebraForm> curvature_transform_residual(const TwoConnection& conn,
                                                                 const GaugeData& gd);

PolyMatrix lift_matrix(const RatMatrix& m, int nx);

} // namespace gauge2

#endif
