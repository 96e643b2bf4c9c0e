#include "gauge2/crossed_module.hpp"

#include <stdexcept>

namespace gauge2 {

CrossedModule::CrossedModule(std::string name, LieAlgebra g, LieAlgebra h, RatMatrix alpha)
    : name_(std::move(name)),
      g_(std::move(g)),
      h_(std::move(h)),
      alpha_(std::move(alpha)),
      act_(static_cast<std::size_t>(g_.dim()) * h_.dim() * h_.dim(), Rational(0))
{
  if (alpha_.rows() != g_.dim() || alpha_.cols() != h_.dim())
    throw std::invalid_argument("alpha matrix must be dim(g) x dim(h)");
}

std::size_t CrossedModule::aidx(int a, int c, int b) const
{
  if (a < 0 || a >= g_.dim() || c < 0 || c >= h_.dim() || b < 0 || b >= h_.dim())
    throw std::out_of_range("action tensor index out of range");
  return (static_cast<std::size_t>(a) * h_.dim() + c) * h_.dim() + b;
}

void CrossedModule::set_action(int a, int c, int b, const Rational& value)
{
  if (finalized_) throw std::logic_error("crossed module already finalized");
  act_[aidx(a, c, b)] = value;
}

const Rational& CrossedModule::act(int a, int c, int b) const { return act_[aidx(a, c, b)]; }

void CrossedModule::finalize()
{
  action_mats_.clear();
  action_mats_.reserve(g_.dim());
  for (int a = 0; a < g_.dim(); ++a) {
    RatMatrix m(h_.dim(), h_.dim());
    for (int c = 0; c < h_.dim(); ++c)
      for (int b = 0; b < h_.dim(); ++b) m.at(b, c) = act(a, c, b);
    action_mats_.push_back(std::move(m));
  }
  finalized_ = true;
}

const RatMatrix& CrossedModule::action_matrix(int a) const
{
  if (!finalized_) throw std::logic_error("crossed module not finalized");
  return action_mats_.at(a);
}

AlgVector CrossedModule::act_vec(const AlgVector& x, const AlgVector& y) const
{
  if (static_cast<int>(x.size()) != g_.dim() || static_cast<int>(y.size()) != h_.dim())
    throw std::invalid_argument("action operand dimension mismatch in " + name_);
  AlgVector r(h_.dim(), Rational(0));
  for (int a = 0; a < g_.dim(); ++a) {
    if (x[a] == 0) continue;
    for (int c = 0; c < h_.dim(); ++c) {
      if (y[c] == 0) continue;
      const Rational xy = x[a] * y[c];
      for (int b = 0; b < h_.dim(); ++b) {
        const Rational& v = act(a, c, b);
        if (v != 0) r[b] += v * xy;
      }
    }
  }
  return r;
}

AlgVector CrossedModule::alpha_vec(const AlgVector& y) const
{
  if (static_cast<int>(y.size()) != h_.dim())
    throw std::invalid_argument("alpha operand dimension mismatch in " + name_);
  AlgVector r(g_.dim(), Rational(0));
  for (int a = 0; a < g_.dim(); ++a)
    for (int b = 0; b < h_.dim(); ++b)
      if (alpha_.at(a, b) != 0) r[a] += alpha_.at(a, b) * y[b];
  return r;
}

RatMatrix CrossedModule::rep_alpha(int b) const
{
  const auto& rho = g_.representation();
  const int d = g_.rep_size();
  RatMatrix m(d, d);
  for (int a = 0; a < g_.dim(); ++a) {
    const Rational& v = alpha_.at(a, b);
    if (v == 0) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) += v * rho[a].at(i, j);
  }
  return m;
}

const RatMatrix& CrossedModule::rep_left_inverse() const
{
  if (!rep_left_inverse_) {
    const auto& rho = g_.representation();
    const int d = g_.rep_size();
    RatMatrix v(d * d, g_.dim());
    for (int a = 0; a < g_.dim(); ++a)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v.at(i * d + j, a) = rho[a].at(i, j);
    rep_left_inverse_ = left_inverse(v);
  }
  return *rep_left_inverse_;
}

ValidationReport CrossedModule::validate() const
{
  ValidationReport report;
  for (auto& c : g_.validate().checks) report.checks.push_back(std::move(c));
  for (auto& c : h_.validate().checks) report.checks.push_back(std::move(c));

  const int dg = g_.dim(), dh = h_.dim();

  AxiomCheck alpha_hom{"alpha_homomorphism"};
  for (int c = 0; c < dh; ++c)
    for (int d = 0; d < dh; ++d)
      for (int a = 0; a < dg; ++a) {
        Rational lhs = 0;
        for (int e = 0; e < dh; ++e) lhs += h_.c(c, d, e) * alpha_.at(a, e);
        Rational rhs = 0;
        for (int p = 0; p < dg; ++p)
          for (int q = 0; q < dg; ++q) rhs += alpha_.at(p, c) * alpha_.at(q, d) * g_.c(p, q, a);
        if (lhs != rhs) alpha_hom.residuals.push_back({{c, d, a}, lhs - rhs});
      }
  alpha_hom.pass = alpha_hom.residuals.empty();
  report.checks.push_back(std::move(alpha_hom));

  AxiomCheck action_hom{"action_homomorphism"};
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dg; ++b) {
      // [X_a, X_b] |> Y = X_a |> (X_b |> Y) - X_b |> (X_a |> Y)
      for (int c = 0; c < dh; ++c)
        for (int e = 0; e < dh; ++e) {
          Rational lhs = 0;
          for (int k = 0; k < dg; ++k) lhs += g_.c(a, b, k) * act(k, c, e);
          Rational rhs = 0;
          for (int f = 0; f < dh; ++f)
            rhs += act(b, c, f) * act(a, f, e) - act(a, c, f) * act(b, f, e);
          if (lhs != rhs) action_hom.residuals.push_back({{a, b, c, e}, lhs - rhs});
        }
    }
  action_hom.pass = action_hom.residuals.empty();
  report.checks.push_back(std::move(action_hom));

  AxiomCheck derivation{"action_derivation"};
  for (int a = 0; a < dg; ++a)
    for (int c = 0; c < dh; ++c)
      for (int d = 0; d < dh; ++d)
        for (int e = 0; e < dh; ++e) {
          Rational lhs = 0;
          for (int f = 0; f < dh; ++f) lhs += h_.c(c, d, f) * act(a, f, e);
          Rational rhs = 0;
          for (int f = 0; f < dh; ++f)
            rhs += act(a, c, f) * h_.c(f, d, e) + act(a, d, f) * h_.c(c, f, e);
          if (lhs != rhs) derivation.residuals.push_back({{a, c, d, e}, lhs - rhs});
        }
  derivation.pass = derivation.residuals.empty();
  report.checks.push_back(std::move(derivation));

  AxiomCheck equivariance{"alpha_equivariance"};
  for (int a = 0; a < dg; ++a)
    for (int c = 0; c < dh; ++c)
      for (int p = 0; p < dg; ++p) {
        Rational lhs = 0;
        for (int b = 0; b < dh; ++b) lhs += act(a, c, b) * alpha_.at(p, b);
        Rational rhs = 0;
        for (int q = 0; q < dg; ++q) rhs += alpha_.at(q, c) * g_.c(a, q, p);
        if (lhs != rhs) equivariance.residuals.push_back({{a, c, p}, lhs - rhs});
      }
  equivariance.pass = equivariance.residuals.empty();
  report.checks.push_back(std::move(equivariance));

  AxiomCheck peiffer{"peiffer"};
  for (int c = 0; c < dh; ++c)
    for (int d = 0; d < dh; ++d)
      for (int b = 0; b < dh; ++b) {
        Rational lhs = 0;
        for (int a = 0; a < dg; ++a) lhs += alpha_.at(a, c) * act(a, d, b);
        const Rational rhs = h_.c(c, d, b);
        if (lhs != rhs) peiffer.residuals.push_back({{c, d, b}, lhs - rhs});
      }
  peiffer.pass = peiffer.residuals.empty();
  report.checks.push_back(std::move(peiffer));

  return report;
}

} // namespace gauge2
