#ifndef GAUGE2_REPORT_HPP
#define GAUGE2_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gauge2 {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckEntry {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::Pass;
  long residual_terms = 0;
  std::string witness;
  std::vector<std::string> details; // text format only
  double ms = 0.0;                  // text format only

  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

struct Report {
  std::vector<CheckEntry> checks;

  bool overall_pass() const;
  std::size_t failed() const;
  std::size_t skipped() const;
};

/// Human-readable: one CHECK line per entry plus detail lines and timing.
std::string emit_text(const Report& r);

/// Machine-readable: one key=value;... line per check with a stable field
/// order; bit-exact across runs with the same scenario and seed (no timing).
std::string emit_records(const Report& r);

/// Inverse of emit_records up to the fields records carry.
Report parse_records(const std::string& text);

std::string status_name(CheckStatus s);

} // namespace gauge2

#endif
