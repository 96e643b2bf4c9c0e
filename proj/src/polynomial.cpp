#include "gauge2/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gauge2 {

namespace {

Polynomial::Key zero_key(int nx) { return Polynomial::Key(nx + 2, 0); }

} // namespace

Polynomial Polynomial::constant(int nx, const Rational& c)
{
  Polynomial p(nx);
  p.add_term(zero_key(nx), c);
  return p;
}

Polynomial Polynomial::variable(int nx, int i, unsigned exp)
{
  if (i < 0 || i >= nx) throw std::invalid_argument("variable index out of range");
  Key k = zero_key(nx);
  k[i] = static_cast<unsigned char>(exp);
  Polynomial p(nx);
  p.add_term(k, 1);
  return p;
}

Polynomial Polynomial::t(int nx, unsigned exp)
{
  Key k = zero_key(nx);
  k[nx] = static_cast<unsigned char>(exp);
  Polynomial p(nx);
  p.add_term(k, 1);
  return p;
}

Polynomial Polynomial::s(int nx, unsigned exp)
{
  Key k = zero_key(nx);
  k[nx + 1] = static_cast<unsigned char>(exp);
  Polynomial p(nx);
  p.add_term(k, 1);
  return p;
}

Polynomial Polynomial::monomial(int nx, const Key& key, const Rational& c)
{
  if (static_cast<int>(key.size()) != nx + 2)
    throw std::invalid_argument("monomial key length mismatch");
  Polynomial p(nx);
  p.add_term(key, c);
  return p;
}

void Polynomial::add_term(const Key& key, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const
{
  // A zero polynomial is compatible with any variable count.
  if (is_zero() || o.is_zero()) return;
  if (nx_ != o.nx_) throw std::invalid_argument("polynomial variable count mismatch");
}

Polynomial Polynomial::operator-() const
{
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  check_compatible(o);
  if (is_zero()) nx_ = o.nx_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  check_compatible(o);
  if (is_zero()) nx_ = o.nx_;
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
  check_compatible(o);
  Polynomial r(is_zero() ? o.nx_ : nx_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<unsigned char>(k[i] + kb[i]);
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
  if (is_zero() && o.is_zero()) return true;
  return nx_ == o.nx_ && terms_ == o.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
  Polynomial r(nx_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Polynomial Polynomial::derivative_x(int i) const
{
  if (i < 0 || i >= nx_) throw std::invalid_argument("variable index out of range");
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    if (k[i] == 0) continue;
    Key nk = k;
    nk[i] -= 1;
    r.add_term(nk, c * k[i]);
  }
  return r;
}

Polynomial Polynomial::derivative_t() const
{
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    if (k[nx_] == 0) continue;
    Key nk = k;
    nk[nx_] -= 1;
    r.add_term(nk, c * k[nx_]);
  }
  return r;
}

Polynomial Polynomial::integrate_t01() const
{
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    const unsigned p = nk[nx_];
    nk[nx_] = 0;
    r.add_term(nk, c / Rational(p + 1));
  }
  return r;
}

Polynomial Polynomial::substitute_t(const Rational& value) const
{
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    const unsigned p = nk[nx_];
    nk[nx_] = 0;
    r.add_term(nk, c * rational_pow(value, p));
  }
  return r;
}

Polynomial Polynomial::substitute_x(int i, const Rational& value) const
{
  if (i < 0 || i >= nx_) throw std::invalid_argument("variable index out of range");
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    const unsigned p = nk[i];
    nk[i] = 0;
    r.add_term(nk, c * rational_pow(value, p));
  }
  return r;
}

Polynomial Polynomial::coefficient_of_s(unsigned k) const
{
  Polynomial r(nx_);
  for (const auto& [key, c] : terms_) {
    if (key[nx_ + 1] != k) continue;
    Key nk = key;
    nk[nx_ + 1] = 0;
    r.add_term(nk, c);
  }
  return r;
}

Polynomial Polynomial::integrate_x(int i, const Rational& lo, const Rational& hi) const
{
  if (i < 0 || i >= nx_) throw std::invalid_argument("variable index out of range");
  Polynomial r(nx_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    const unsigned p = nk[i];
    nk[i] = 0;
    const Rational anti = c / Rational(p + 1);
    r.add_term(nk, anti * (rational_pow(hi, p + 1) - rational_pow(lo, p + 1)));
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
  if (static_cast<int>(point.size()) != nx_ && !is_zero())
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [k, c] : terms_) {
    if (k[nx_] != 0 || k[nx_ + 1] != 0)
      throw std::domain_error("cannot evaluate a polynomial depending on t or s");
    Rational m = c;
    for (int i = 0; i < nx_; ++i)
      if (k[i]) m *= rational_pow(point[i], k[i]);
    total += m;
  }
  return total;
}

unsigned Polynomial::degree_x() const
{
  unsigned best = 0;
  for (const auto& [k, c] : terms_) {
    unsigned d = 0;
    for (int i = 0; i < nx_; ++i) d += k[i];
    best = std::max(best, d);
  }
  return best;
}

unsigned Polynomial::degree_t() const
{
  unsigned best = 0;
  for (const auto& [k, c] : terms_) best = std::max<unsigned>(best, k[nx_]);
  return best;
}

unsigned Polynomial::degree_s() const
{
  unsigned best = 0;
  for (const auto& [k, c] : terms_) best = std::max<unsigned>(best, k[nx_ + 1]);
  return best;
}

std::string Polynomial::str() const
{
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int i = 0; i < nx_; ++i) {
      if (!k[i]) continue;
      out << "*x" << (i + 1);
      if (k[i] > 1) out << "^" << int(k[i]);
    }
    if (k[nx_]) {
      out << "*t";
      if (k[nx_] > 1) out << "^" << int(k[nx_]);
    }
    if (k[nx_ + 1]) {
      out << "*s";
      if (k[nx_ + 1] > 1) out << "^" << int(k[nx_ + 1]);
    }
  }
  return out.str();
}

} // namespace gauge2
