#ifndef GAUGE2_VALIDATION_HPP
#define GAUGE2_VALIDATION_HPP

#include "gauge2/rational.hpp"

#include <string>
#include <vector>

namespace gauge2 {

/// One nonzero entry of an exact residual tensor.
struct AxiomResidual {
  std::vector<int> indices;
  Rational value;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<AxiomResidual> residuals;

  AxiomCheck() = default;
  explicit AxiomCheck(std::string name) : axiom(std::move(name)) {}

  std::string witness() const;
};

/// Axiom-by-axiom validation outcome; failures are entries, not errors.
struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool pass() const;
  const AxiomCheck* find(const std::string& axiom) const;
  std::string summary() const;
};

} // namespace gauge2

#endif
