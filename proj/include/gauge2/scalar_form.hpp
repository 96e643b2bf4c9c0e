#ifndef GAUGE2_SCALAR_FORM_HPP
#define GAUGE2_SCALAR_FORM_HPP

#include "gauge2/chart.hpp"
#include "gauge2/polynomial.hpp"

#include <map>
#include <span>
#include <vector>

namespace gauge2 {

/// Exterior form on a chart with Polynomial coefficients. Components are
/// keyed by strictly increasing 0-based covector tuples; a term supplied in
/// arbitrary order is sign-normalized (parity of the sorting permutation)
/// at insertion. Degrees above the chart dimension are legal and simply
/// carry no components.
class ScalarForm {
public:
  using IndexTuple = std::vector<int>;

  ScalarForm(Chart chart, int degree);

  static ScalarForm zero(Chart chart, int degree) { return ScalarForm(chart, degree); }
  static ScalarForm unit(Chart chart) { return constant(chart, 1); }
  static ScalarForm constant(Chart chart, const Rational& c);
  /// dx_i (0-based i).
  static ScalarForm covector(Chart chart, int i);
  static ScalarForm from_function(Chart chart, const Polynomial& p);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IndexTuple, Polynomial>& components() const { return comps_; }

  /// Adds coeff * dx_{idx[0]} ^ ... ^ dx_{idx[k-1]}; repeated indices drop
  /// the term, unsorted tuples contribute the permutation sign.
  void add_term(IndexTuple idx, const Polynomial& coeff);

  const Polynomial& component(const IndexTuple& sorted_idx) const;

  ScalarForm operator-() const;
  ScalarForm operator+(const ScalarForm& o) const;
  ScalarForm operator-(const ScalarForm& o) const;
  ScalarForm& operator+=(const ScalarForm& o);
  ScalarForm& operator-=(const ScalarForm& o);
  bool operator==(const ScalarForm& o) const;
  bool operator!=(const ScalarForm& o) const { return !(*this == o); }

  ScalarForm scaled(const Rational& c) const;
  ScalarForm scaled(const Polynomial& p) const;

  ScalarForm wedge(const ScalarForm& o) const;

  /// Exterior derivative in the chart coordinates; t and s are inert.
  ScalarForm d() const;

  ScalarForm derivative_t() const;
  ScalarForm substitute_t(const Rational& value) const;
  ScalarForm integrate_t01() const;
  ScalarForm coefficient_of_s(unsigned k) const;

  /// Pullback to the face x_i = value: substitutes the coordinate and drops
  /// every component containing dx_i.
  ScalarForm restrict_face(int i, const Rational& value) const;

  /// Coefficient polynomial of the given frame tuple evaluated at a point;
  /// requires a t- and s-free form and |frame| == degree.
  Rational evaluate(std::span<const Rational> point, IndexTuple frame) const;

  /// Exact iterated integral of the single top component over a box, with
  /// dx1^...^dxm positive orientation. Requires degree == chart dim.
  Rational integrate_box(std::span<const std::pair<Rational, Rational>> box) const;

  bool depends_on_t() const;
  bool depends_on_s() const;
  std::size_t term_count() const;

  /// "dx1^dx3 : (3/2)*x1" for the first stored component; "0" if empty.
  std::string first_witness() const;

private:
  Chart chart_;
  int degree_;
  std::map<IndexTuple, Polynomial> comps_;

  void check_same_shape(const ScalarForm& o) const;
};

/// Sign of the permutation sorting idx; 0 if idx has repeats. Sorts in place.
int sort_index_tuple(ScalarForm::IndexTuple& idx);

} // namespace gauge2

#endif
