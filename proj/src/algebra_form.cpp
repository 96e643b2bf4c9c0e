#include "gauge2/algebra_form.hpp"

#include <stdexcept>

namespace gauge2 {

AlgebraForm::AlgebraForm(CrossedModulePtr cm, Side side, Chart chart, int degree)
    : cm_(std::move(cm)), side_(side), chart_(chart), degree_(degree)
{
  if (!cm_) throw std::invalid_argument("null crossed module");
  comps_.assign(algebra_dim(), ScalarForm(chart_, degree_));
}

int AlgebraForm::algebra_dim() const
{
  return side_ == Side::G ? cm_->g().dim() : cm_->h().dim();
}

const LieAlgebra& AlgebraForm::algebra() const
{
  return side_ == Side::G ? cm_->g() : cm_->h();
}

void AlgebraForm::set_component(int i, ScalarForm f)
{
  if (f.chart() != chart_ || f.degree() != degree_)
    throw std::invalid_argument("component shape mismatch");
  comps_.at(i) = std::move(f);
}

void AlgebraForm::add_component_term(int i, ScalarForm::IndexTuple idx, const Polynomial& coeff)
{
  comps_.at(i).add_term(std::move(idx), coeff);
}

bool AlgebraForm::is_zero() const
{
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

void AlgebraForm::check_binary(const AlgebraForm& o) const
{
  if (cm_ != o.cm_) throw std::invalid_argument("crossed module mismatch");
  if (side_ != o.side_) throw std::invalid_argument("algebra side mismatch");
  if (chart_ != o.chart_ || degree_ != o.degree_)
    throw std::invalid_argument("form shape mismatch");
}

AlgebraForm AlgebraForm::operator-() const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = -f;
  return r;
}

AlgebraForm AlgebraForm::operator+(const AlgebraForm& o) const
{
  check_binary(o);
  AlgebraForm r = *this;
  for (int i = 0; i < algebra_dim(); ++i) r.comps_[i] += o.comps_[i];
  return r;
}

AlgebraForm AlgebraForm::operator-(const AlgebraForm& o) const
{
  check_binary(o);
  AlgebraForm r = *this;
  for (int i = 0; i < algebra_dim(); ++i) r.comps_[i] -= o.comps_[i];
  return r;
}

bool AlgebraForm::operator==(const AlgebraForm& o) const
{
  return cm_ == o.cm_ && side_ == o.side_ && chart_ == o.chart_ && degree_ == o.degree_ &&
         comps_ == o.comps_;
}

AlgebraForm AlgebraForm::scaled(const Rational& c) const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.scaled(c);
  return r;
}

AlgebraForm AlgebraForm::scaled(const Polynomial& p) const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.scaled(p);
  return r;
}

AlgebraForm AlgebraForm::d() const
{
  AlgebraForm r(cm_, side_, chart_, degree_ + 1);
  for (int i = 0; i < algebra_dim(); ++i) r.comps_[i] = comps_[i].d();
  return r;
}

AlgebraForm AlgebraForm::derivative_t() const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.derivative_t();
  return r;
}

AlgebraForm AlgebraForm::substitute_t(const Rational& value) const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.substitute_t(value);
  return r;
}

AlgebraForm AlgebraForm::integrate_t01() const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.integrate_t01();
  return r;
}

AlgebraForm AlgebraForm::coefficient_of_s(unsigned k) const
{
  AlgebraForm r = *this;
  for (auto& f : r.comps_) f = f.coefficient_of_s(k);
  return r;
}

template <class T>
static AlgebraForm linear_transform_impl(const AlgebraForm& in, const Matrix<T>& m, Side out_side,
                                         const CrossedModulePtr& cm, Chart chart, int degree)
{
  AlgebraForm r(cm, out_side, chart, degree);
  for (int b = 0; b < m.rows(); ++b) {
    ScalarForm acc(chart, degree);
    for (int a = 0; a < m.cols(); ++a) {
      const T& coeff = m.at(b, a);
      acc += in.component(a).scaled(coeff);
    }
    r.set_component(b, std::move(acc));
  }
  return r;
}

AlgebraForm AlgebraForm::linear_transform(const Matrix<Rational>& m, Side out_side) const
{
  if (m.cols() != algebra_dim()) throw std::invalid_argument("transform shape mismatch");
  const int out_dim = out_side == Side::G ? cm_->g().dim() : cm_->h().dim();
  if (m.rows() != out_dim) throw std::invalid_argument("transform shape mismatch");
  return linear_transform_impl(*this, m, out_side, cm_, chart_, degree_);
}

AlgebraForm AlgebraForm::linear_transform(const Matrix<Polynomial>& m, Side out_side) const
{
  if (m.cols() != algebra_dim()) throw std::invalid_argument("transform shape mismatch");
  const int out_dim = out_side == Side::G ? cm_->g().dim() : cm_->h().dim();
  if (m.rows() != out_dim) throw std::invalid_argument("transform shape mismatch");
  return linear_transform_impl(*this, m, out_side, cm_, chart_, degree_);
}

std::string AlgebraForm::first_witness(const std::string& prefix) const
{
  for (int i = 0; i < algebra_dim(); ++i)
    if (!comps_[i].is_zero())
      return prefix + algebra().label(i) + " | " + comps_[i].first_witness();
  return "0";
}

AlgebraForm wedge_bracket(const AlgebraForm& u, const AlgebraForm& v)
{
  if (u.module() != v.module()) throw std::invalid_argument("crossed module mismatch");
  if (u.side() != v.side())
    throw std::invalid_argument("wedge_bracket requires forms valued in the same algebra");
  if (u.chart() != v.chart()) throw std::invalid_argument("chart mismatch");
  const auto& alg = u.algebra();
  AlgebraForm r(u.module(), u.side(), u.chart(), u.degree() + v.degree());
  for (int a = 0; a < alg.dim(); ++a) {
    if (u.component(a).is_zero()) continue;
    for (int b = 0; b < alg.dim(); ++b) {
      if (v.component(b).is_zero()) continue;
      ScalarForm prod = u.component(a).wedge(v.component(b));
      if (prod.is_zero()) continue;
      for (int k = 0; k < alg.dim(); ++k) {
        const Rational& c = alg.c(a, b, k);
        if (c != 0) r.set_component(k, r.component(k) + prod.scaled(c));
      }
    }
  }
  return r;
}

AlgebraForm wedge_action(const AlgebraForm& u, const AlgebraForm& v)
{
  if (u.module() != v.module()) throw std::invalid_argument("crossed module mismatch");
  if (u.side() != Side::G || v.side() != Side::H)
    throw std::invalid_argument("wedge_action requires a g-valued and an h-valued form");
  if (u.chart() != v.chart()) throw std::invalid_argument("chart mismatch");
  const auto& cm = *u.module();
  AlgebraForm r(u.module(), Side::H, u.chart(), u.degree() + v.degree());
  for (int a = 0; a < cm.g().dim(); ++a) {
    if (u.component(a).is_zero()) continue;
    for (int c = 0; c < cm.h().dim(); ++c) {
      if (v.component(c).is_zero()) continue;
      ScalarForm prod = u.component(a).wedge(v.component(c));
      if (prod.is_zero()) continue;
      for (int b = 0; b < cm.h().dim(); ++b) {
        const Rational& rr = cm.act(a, c, b);
        if (rr != 0) r.set_component(b, r.component(b) + prod.scaled(rr));
      }
    }
  }
  return r;
}

AlgebraForm alpha_lift(const AlgebraForm& v)
{
  if (v.side() != Side::H) throw std::invalid_argument("alpha_lift expects an h-valued form");
  return v.linear_transform(v.module()->alpha(), Side::G);
}

AlgebraForm covariant_d(const AlgebraForm& connection, const AlgebraForm& w)
{
  if (connection.side() != Side::G || connection.degree() != 1)
    throw std::invalid_argument("connection must be a g-valued 1-form");
  if (w.side() == Side::G) return w.d() + wedge_bracket(connection, w);
  return w.d() + wedge_action(connection, w);
}

} // namespace gauge2
