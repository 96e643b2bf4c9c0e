#ifndef GAUGE2_RANDOM_FORMS_HPP
#define GAUGE2_RANDOM_FORMS_HPP

#include "gauge2/connection.hpp"

#include <cstdint>

namespace gauge2 {

/// SplitMix64: a fixed named generator so that seeded suites are bit-exact
/// across platforms and standard libraries.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

std::uint64_t fnv1a(const std::string& text);

/// Coefficients are drawn from {-2,-1,0,1,2} over {1,2}: small exact
/// rationals keep polynomial growth bounded across wedge chains.
Rational random_coefficient(SplitMix64& rng);

/// Sparse polynomial in the chart variables with total degree <= max_degree.
Polynomial random_polynomial(const Chart& chart, SplitMix64& rng, unsigned max_degree = 2,
                             int terms = 2);

ScalarForm random_scalar_form(const Chart& chart, int degree, SplitMix64& rng,
                              unsigned max_degree = 2, int terms = 2);

AlgebraForm random_algebra_form(const CrossedModulePtr& cm, Side side, const Chart& chart,
                                int degree, SplitMix64& rng, unsigned max_degree = 2);

TwoConnection random_connection(const CrossedModulePtr& cm, const Chart& chart, SplitMix64& rng,
                                unsigned max_degree = 2);

} // namespace gauge2

#endif
