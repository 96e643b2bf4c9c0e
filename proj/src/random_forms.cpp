#include "gauge2/random_forms.hpp"

namespace gauge2 {

std::uint64_t fnv1a(const std::string& text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rational random_coefficient(SplitMix64& rng)
{
  const int num = static_cast<int>(rng.below(5)) - 2;
  const int den = 1 + static_cast<int>(rng.below(2));
  return Rational(num, den);
}

Polynomial random_polynomial(const Chart& chart, SplitMix64& rng, unsigned max_degree, int terms)
{
  Polynomial p(chart.dim);
  for (int k = 0; k < terms; ++k) {
    const Rational c = random_coefficient(rng);
    Polynomial::Key key(chart.dim + 2, 0);
    const unsigned deg = rng.below(max_degree + 1);
    for (unsigned d = 0; d < deg; ++d) key[rng.below(chart.dim)] += 1;
    if (c != 0) p.add_term(key, c);
  }
  return p;
}

ScalarForm random_scalar_form(const Chart& chart, int degree, SplitMix64& rng,
                              unsigned max_degree, int terms)
{
  ScalarForm f(chart, degree);
  if (degree > chart.dim) return f;
  for (int k = 0; k < terms; ++k) {
    ScalarForm::IndexTuple idx;
    // Distinct indices via rejection on the tiny chart range.
    while (static_cast<int>(idx.size()) < degree) {
      const int i = static_cast<int>(rng.below(chart.dim));
      bool dup = false;
      for (int j : idx) dup = dup || (j == i);
      if (!dup) idx.push_back(i);
    }
    f.add_term(std::move(idx), random_polynomial(chart, rng, max_degree, 1));
  }
  return f;
}

AlgebraForm random_algebra_form(const CrossedModulePtr& cm, Side side, const Chart& chart,
                                int degree, SplitMix64& rng, unsigned max_degree)
{
  AlgebraForm f(cm, side, chart, degree);
  const int dim = side == Side::G ? cm->g().dim() : cm->h().dim();
  for (int i = 0; i < dim; ++i)
    f.set_component(i, random_scalar_form(chart, degree, rng, max_degree, 2));
  return f;
}

TwoConnection random_connection(const CrossedModulePtr& cm, const Chart& chart, SplitMix64& rng,
                                unsigned max_degree)
{
  AlgebraForm A = random_algebra_form(cm, Side::G, chart, 1, rng, max_degree);
  AlgebraForm B = random_algebra_form(cm, Side::H, chart, 2, rng, max_degree);
  return TwoConnection(std::move(A), std::move(B));
}

} // namespace gauge2
