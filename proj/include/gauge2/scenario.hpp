#ifndef GAUGE2_SCENARIO_HPP
#define GAUGE2_SCENARIO_HPP

#include "gauge2/builtins.hpp"
#include "gauge2/tgft.hpp"

#include <functional>
#include <optional>

namespace gauge2 {

/// Parse diagnostic with a 1-based source location.
class ScenarioError : public std::runtime_error {
public:
  ScenarioError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column)
  {
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

/// Fully resolved verification scenario.
struct Scenario {
  std::string module_name;
  CrossedModulePtr cm;
  std::optional<InvariantPairing> pairing;
  Chart chart{1};
  int n = 1;
  std::uint64_t seed = 0;
  int trials = 25;
  std::optional<TwoConnection> conn1;
  std::optional<TwoConnection> conn0;
  std::optional<GaugeData> gauge;
  std::optional<VariationData> variation;
  std::optional<Box> box;

  Box box_or_unit() const;
};

/// Single term of the scenario grammar: `<rational> [x<i>^<e>]* [dx<i>]*`.
/// `allow_covectors = false` restricts to polynomial entries.
struct ParsedTerm {
  Rational coefficient;
  Polynomial::Key exponents; // nx+2 slots, t and s always zero
  std::vector<int> covectors;
};

/// Custom algebra definition: sections [g], [h], [alpha], [action],
/// [pairing n=<int>]; tensor entries `indices... = p/q` with 1-based
/// indices; omitted entries are zero.
struct AlgebraFile {
  CrossedModulePtr cm;
  std::vector<std::pair<int, InvariantPairing>> pairings;
};

AlgebraFile parse_algebra_file(const std::string& text);

using FileLoader = std::function<std::string(const std::string&)>;

/// Parses a scenario document. Custom algebra files are resolved through
/// `loader` (defaults to reading relative paths from the filesystem).
Scenario parse_scenario(const std::string& text, const FileLoader& loader = {});

Scenario load_scenario_file(const std::string& path);

} // namespace gauge2

#endif
