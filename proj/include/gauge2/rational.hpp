#ifndef GAUGE2_RATIONAL_HPP
#define GAUGE2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace gauge2 {

/// Exact arbitrary-precision rational scalar. Every identity the engine
/// checks is required to reduce to a literal zero, so there is no floating
/// point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
/// Returns nullopt on malformed input (including zero denominators).
std::optional<Rational> parse_rational(const std::string& text);

Rational rational_pow(const Rational& base, unsigned exp);

} // namespace gauge2

#endif
