#ifndef GAUGE2_POLYNOMIAL_HPP
#define GAUGE2_POLYNOMIAL_HPP

#include "gauge2/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace gauge2 {

/// Multivariate polynomial with exact rational coefficients over the chart
/// coordinates x1..x_nx plus two formal parameters: t (the family parameter
/// of the interpolation/rescaling integrals) and s (a variation parameter
/// used to extract first-order terms exactly).
///
/// Exponent keys have length nx+2; slot nx is t, slot nx+1 is s. No zero
/// coefficients are ever stored, so equality is map equality.
class Polynomial {
public:
  using Key = std::vector<unsigned char>;

  Polynomial() : nx_(0) {}
  explicit Polynomial(int nx) : nx_(nx) {}

  static Polynomial constant(int nx, const Rational& c);
  static Polynomial variable(int nx, int i, unsigned exp = 1);
  static Polynomial t(int nx, unsigned exp = 1);
  static Polynomial s(int nx, unsigned exp = 1);
  static Polynomial monomial(int nx, const Key& key, const Rational& c);

  int nx() const { return nx_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add_term(const Key& key, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Rational& c) const;

  Polynomial derivative_x(int i) const;
  Polynomial derivative_t() const;

  /// Exact \int_0^1 dt: each monomial t^p q(x,s) becomes q(x,s)/(p+1).
  Polynomial integrate_t01() const;

  Polynomial substitute_t(const Rational& value) const;
  Polynomial substitute_x(int i, const Rational& value) const;

  /// Coefficient of s^k, with the s slot cleared in the result.
  Polynomial coefficient_of_s(unsigned k) const;

  /// Antiderivative in x_i evaluated between lo and hi.
  Polynomial integrate_x(int i, const Rational& lo, const Rational& hi) const;

  Rational evaluate(std::span<const Rational> point) const;

  unsigned degree_x() const;
  unsigned degree_t() const;
  unsigned degree_s() const;
  bool depends_on_t() const { return degree_t() > 0; }
  bool depends_on_s() const { return degree_s() > 0; }

  std::string str() const;

private:
  int nx_;
  std::map<Key, Rational> terms_;

  void check_compatible(const Polynomial& o) const;
};

} // namespace gauge2

#endif
