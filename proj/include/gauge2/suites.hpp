#ifndef GAUGE2_SUITES_HPP
#define GAUGE2_SUITES_HPP

#include "gauge2/report.hpp"
#include "gauge2/scenario.hpp"

namespace gauge2 {

/// Raised when a named suite's inputs are missing from the scenario
/// (e.g. chern-weil without conn0); maps to a usage error in the CLI.
class SuiteError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names(); // includes "all"

/// Deterministic given (scenario, seed); entries in fixed declaration order.
Report run_suite(const Scenario& scenario, const std::string& suite);

} // namespace gauge2

#endif
