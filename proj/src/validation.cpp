#include "gauge2/validation.hpp"

#include <sstream>

namespace gauge2 {

std::string AxiomCheck::witness() const
{
  if (residuals.empty()) return "";
  std::ostringstream out;
  out << "indices(";
  for (std::size_t i = 0; i < residuals.front().indices.size(); ++i) {
    if (i) out << ",";
    out << residuals.front().indices[i];
  }
  out << ")=" << residuals.front().value.str();
  return out.str();
}

bool ValidationReport::pass() const
{
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* ValidationReport::find(const std::string& axiom) const
{
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const
{
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.axiom << ": " << (c.pass ? "ok" : "FAIL");
    if (!c.pass) out << " [" << c.residuals.size() << " nonzero, first " << c.witness() << "]";
    out << "\n";
  }
  return out.str();
}

} // namespace gauge2
