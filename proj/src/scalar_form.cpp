#include "gauge2/scalar_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gauge2 {

int sort_index_tuple(ScalarForm::IndexTuple& idx)
{
  int sign = 1;
  // Insertion sort; counts transpositions and detects repeats exactly.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return 0;
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  return sign;
}

ScalarForm::ScalarForm(Chart chart, int degree) : chart_(chart), degree_(degree)
{
  if (degree_ < 0) throw std::invalid_argument("negative form degree");
}

ScalarForm ScalarForm::constant(Chart chart, const Rational& c)
{
  ScalarForm f(chart, 0);
  f.add_term({}, Polynomial::constant(chart.dim, c));
  return f;
}

ScalarForm ScalarForm::covector(Chart chart, int i)
{
  ScalarForm f(chart, 1);
  f.add_term({i}, Polynomial::constant(chart.dim, 1));
  return f;
}

ScalarForm ScalarForm::from_function(Chart chart, const Polynomial& p)
{
  ScalarForm f(chart, 0);
  f.add_term({}, p);
  return f;
}

void ScalarForm::add_term(IndexTuple idx, const Polynomial& coeff)
{
  if (coeff.is_zero()) return;
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("index tuple length does not match form degree");
  if (degree_ > chart_.dim) return; // identically zero in this degree
  for (int i : idx)
    if (i < 0 || i >= chart_.dim) throw std::invalid_argument("covector index out of range");
  const int sign = sort_index_tuple(idx);
  if (sign == 0) return;
  const Polynomial add = (sign > 0) ? coeff : coeff.scaled(-1);
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(std::move(idx), add);
  } else {
    it->second += add;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

const Polynomial& ScalarForm::component(const IndexTuple& sorted_idx) const
{
  static const Polynomial zero;
  auto it = comps_.find(sorted_idx);
  return it == comps_.end() ? zero : it->second;
}

void ScalarForm::check_same_shape(const ScalarForm& o) const
{
  if (chart_ != o.chart_) throw std::invalid_argument("chart mismatch");
  if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
}

ScalarForm ScalarForm::operator-() const
{
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) r.comps_.emplace(idx, -p);
  return r;
}

ScalarForm ScalarForm::operator+(const ScalarForm& o) const
{
  ScalarForm r = *this;
  r += o;
  return r;
}

ScalarForm ScalarForm::operator-(const ScalarForm& o) const
{
  ScalarForm r = *this;
  r -= o;
  return r;
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& o)
{
  check_same_shape(o);
  for (const auto& [idx, p] : o.comps_) {
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
      comps_.emplace(idx, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }
  return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& o)
{
  *this += -o;
  return *this;
}

bool ScalarForm::operator==(const ScalarForm& o) const
{
  return chart_ == o.chart_ && degree_ == o.degree_ && comps_ == o.comps_;
}

ScalarForm ScalarForm::scaled(const Rational& c) const
{
  ScalarForm r(chart_, degree_);
  if (c == 0) return r;
  for (const auto& [idx, p] : comps_) r.comps_.emplace(idx, p.scaled(c));
  return r;
}

ScalarForm ScalarForm::scaled(const Polynomial& q) const
{
  ScalarForm r(chart_, degree_);
  if (q.is_zero()) return r;
  for (const auto& [idx, p] : comps_) {
    Polynomial prod = p * q;
    if (!prod.is_zero()) r.comps_.emplace(idx, std::move(prod));
  }
  return r;
}

ScalarForm ScalarForm::wedge(const ScalarForm& o) const
{
  if (chart_ != o.chart_) throw std::invalid_argument("chart mismatch");
  ScalarForm r(chart_, degree_ + o.degree_);
  for (const auto& [ia, pa] : comps_) {
    for (const auto& [ib, pb] : o.comps_) {
      IndexTuple merged;
      merged.reserve(ia.size() + ib.size());
      merged.insert(merged.end(), ia.begin(), ia.end());
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add_term(std::move(merged), pa * pb);
    }
  }
  return r;
}

ScalarForm ScalarForm::d() const
{
  ScalarForm r(chart_, degree_ + 1);
  for (const auto& [idx, p] : comps_) {
    for (int v = 0; v < chart_.dim; ++v) {
      Polynomial dp = p.derivative_x(v);
      if (dp.is_zero()) continue;
      IndexTuple nidx;
      nidx.reserve(idx.size() + 1);
      nidx.push_back(v);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      r.add_term(std::move(nidx), dp);
    }
  }
  return r;
}

ScalarForm ScalarForm::derivative_t() const
{
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) {
    Polynomial dp = p.derivative_t();
    if (!dp.is_zero()) r.comps_.emplace(idx, std::move(dp));
  }
  return r;
}

ScalarForm ScalarForm::substitute_t(const Rational& value) const
{
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) {
    Polynomial q = p.substitute_t(value);
    if (!q.is_zero()) r.comps_.emplace(idx, std::move(q));
  }
  return r;
}

ScalarForm ScalarForm::integrate_t01() const
{
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) {
    Polynomial q = p.integrate_t01();
    if (!q.is_zero()) r.comps_.emplace(idx, std::move(q));
  }
  return r;
}

ScalarForm ScalarForm::coefficient_of_s(unsigned k) const
{
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) {
    Polynomial q = p.coefficient_of_s(k);
    if (!q.is_zero()) r.comps_.emplace(idx, std::move(q));
  }
  return r;
}

ScalarForm ScalarForm::restrict_face(int i, const Rational& value) const
{
  if (i < 0 || i >= chart_.dim) throw std::invalid_argument("face coordinate out of range");
  ScalarForm r(chart_, degree_);
  for (const auto& [idx, p] : comps_) {
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
    Polynomial q = p.substitute_x(i, value);
    if (!q.is_zero()) r.comps_.emplace(idx, std::move(q));
  }
  return r;
}

Rational ScalarForm::evaluate(std::span<const Rational> point, IndexTuple frame) const
{
  if (static_cast<int>(frame.size()) != degree_)
    throw std::invalid_argument("frame length does not match form degree");
  if (static_cast<int>(point.size()) != chart_.dim)
    throw std::invalid_argument("point dimension mismatch");
  if (depends_on_t() || depends_on_s())
    throw std::domain_error("cannot evaluate a form depending on t or s");
  const int sign = sort_index_tuple(frame);
  if (sign == 0) return 0;
  auto it = comps_.find(frame);
  if (it == comps_.end()) return 0;
  return it->second.evaluate(point) * sign;
}

Rational ScalarForm::integrate_box(std::span<const std::pair<Rational, Rational>> box) const
{
  if (degree_ != chart_.dim)
    throw std::invalid_argument("integrate_box requires a top-degree form");
  if (static_cast<int>(box.size()) != chart_.dim)
    throw std::invalid_argument("box dimension mismatch");
  if (depends_on_t() || depends_on_s())
    throw std::domain_error("cannot integrate a form depending on t or s");
  IndexTuple top(chart_.dim);
  for (int i = 0; i < chart_.dim; ++i) top[i] = i;
  auto it = comps_.find(top);
  if (it == comps_.end()) return 0;
  Polynomial p = it->second;
  for (int i = 0; i < chart_.dim; ++i) p = p.integrate_x(i, box[i].first, box[i].second);
  Polynomial::Key k(chart_.dim + 2, 0);
  const auto& terms = p.terms();
  if (terms.empty()) return 0;
  return terms.begin()->second;
}

bool ScalarForm::depends_on_t() const
{
  for (const auto& [idx, p] : comps_)
    if (p.depends_on_t()) return true;
  return false;
}

bool ScalarForm::depends_on_s() const
{
  for (const auto& [idx, p] : comps_)
    if (p.depends_on_s()) return true;
  return false;
}

std::size_t ScalarForm::term_count() const
{
  std::size_t n = 0;
  for (const auto& [idx, p] : comps_) n += p.term_count();
  return n;
}

std::string ScalarForm::first_witness() const
{
  if (comps_.empty()) return "0";
  const auto& [idx, p] = *comps_.begin();
  std::ostringstream out;
  if (idx.empty()) {
    out << "1";
  } else {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out << "^";
      out << "dx" << (idx[i] + 1);
    }
  }
  out << " : " << p.str();
  return out.str();
}

} // namespace gauge2
