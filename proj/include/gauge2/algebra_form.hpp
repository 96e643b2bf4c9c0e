#ifndef GAUGE2_ALGEBRA_FORM_HPP
#define GAUGE2_ALGEBRA_FORM_HPP

#include "gauge2/crossed_module.hpp"
#include "gauge2/scalar_form.hpp"

namespace gauge2 {

enum class Side { G, H };

/// Algebra-valued form: one ScalarForm per basis element of the chosen
/// algebra, all of the same degree on the same chart.
class AlgebraForm {
public:
  AlgebraForm(CrossedModulePtr cm, Side side, Chart chart, int degree);

  static AlgebraForm zero(CrossedModulePtr cm, Side side, Chart chart, int degree)
  {
    return AlgebraForm(std::move(cm), side, chart, degree);
  }

  const CrossedModulePtr& module() const { return cm_; }
  Side side() const { return side_; }
  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  int algebra_dim() const;
  const LieAlgebra& algebra() const;

  const ScalarForm& component(int i) const { return comps_.at(i); }
  void set_component(int i, ScalarForm f);
  void add_component_term(int i, ScalarForm::IndexTuple idx, const Polynomial& coeff);

  bool is_zero() const;

  AlgebraForm operator-() const;
  AlgebraForm operator+(const AlgebraForm& o) const;
  AlgebraForm operator-(const AlgebraForm& o) const;
  bool operator==(const AlgebraForm& o) const;
  bool operator!=(const AlgebraForm& o) const { return !(*this == o); }

  AlgebraForm scaled(const Rational& c) const;
  AlgebraForm scaled(const Polynomial& p) const;

  AlgebraForm d() const;
  AlgebraForm derivative_t() const;
  AlgebraForm substitute_t(const Rational& value) const;
  AlgebraForm integrate_t01() const;
  AlgebraForm coefficient_of_s(unsigned k) const;

  /// Componentwise transform w'^b = sum_a m(b,a) w^a with exact ring
  /// entries; used by alpha lifts and gauge actions.
  AlgebraForm linear_transform(const Matrix<Rational>& m, Side out_side) const;
  AlgebraForm linear_transform(const Matrix<Polynomial>& m, Side out_side) const;

  std::string first_witness(const std::string& prefix = "") const;

private:
  CrossedModulePtr cm_;
  Side side_;
  Chart chart_;
  int degree_;
  std::vector<ScalarForm> comps_;

  void check_binary(const AlgebraForm& o) const;
};

/// sum u^a ^ v^b [X_a, X_b]; both operands g-valued.
AlgebraForm wedge_bracket(const AlgebraForm& u, const AlgebraForm& v);

/// sum u^a ^ v^c (X_a |> Y_c); u g-valued, v h-valued.
AlgebraForm wedge_action(const AlgebraForm& u, const AlgebraForm& v);

/// Componentwise alpha: h-valued -> g-valued, degree preserved.
AlgebraForm alpha_lift(const AlgebraForm& v);

/// dw + A ^[,] w (g side) or dw + A ^|> w (h side); A is the connection
/// 1-form.
AlgebraForm covariant_d(const AlgebraForm& connection, const AlgebraForm& w);

} // namespace gauge2

#endif
