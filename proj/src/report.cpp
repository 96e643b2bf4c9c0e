#include "gauge2/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gauge2 {

bool Report::overall_pass() const
{
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckEntry& c) { return c.status == CheckStatus::Fail; });
}

std::size_t Report::failed() const
{
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckEntry& c) { return c.status == CheckStatus::Fail; });
}

std::size_t Report::skipped() const
{
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckEntry& c) { return c.status == CheckStatus::Skip; });
}

std::string status_name(CheckStatus s)
{
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

std::string sanitize(const std::string& text)
{
  std::string out = text;
  for (char& c : out)
    if (c == ';' || c == '\n') c = ',';
  return out;
}

} // namespace

std::string emit_text(const Report& r)
{
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << "CHECK " << c.name;
    for (const auto& [k, v] : c.params) out << " " << k << "=" << v;
    out << " : " << status_name(c.status) << " residual_terms=" << c.residual_terms;
    if (!c.witness.empty()) out << " witness[" << c.witness << "]";
    out << " (" << c.ms << " ms)";
    out << "\n";
    for (const auto& d : c.details) out << "  " << d << "\n";
  }
  out << "OVERALL " << (r.overall_pass() ? "PASS" : "FAIL") << " (" << r.checks.size()
      << " checks";
  if (r.failed()) out << ", " << r.failed() << " failed";
  if (r.skipped()) out << ", " << r.skipped() << " skipped";
  out << ")\n";
  return out.str();
}

std::string emit_records(const Report& r)
{
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << "check=" << sanitize(c.name);
    for (const auto& [k, v] : c.params) out << ";" << sanitize(k) << "=" << sanitize(v);
    out << ";status=" << status_name(c.status);
    out << ";residual_terms=" << c.residual_terms;
    out << ";witness=" << sanitize(c.witness);
    out << "\n";
  }
  out << "overall=" << (r.overall_pass() ? "PASS" : "FAIL") << ";checks=" << r.checks.size()
      << ";failed=" << r.failed() << ";skipped=" << r.skipped() << "\n";
  return out.str();
}

Report parse_records(const std::string& text)
{
  Report report;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("overall=", 0) == 0) continue;
    CheckEntry entry;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ';')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw std::runtime_error("malformed records field: " + field);
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "check") {
        entry.name = value;
      } else if (key == "status") {
        if (value == "PASS")
          entry.status = CheckStatus::Pass;
        else if (value == "FAIL")
          entry.status = CheckStatus::Fail;
        else if (value == "SKIP")
          entry.status = CheckStatus::Skip;
        else
          throw std::runtime_error("unknown status: " + value);
      } else if (key == "residual_terms") {
        entry.residual_terms = std::stol(value);
      } else if (key == "witness") {
        entry.witness = value;
      } else {
        entry.param(key, value);
      }
    }
    report.checks.push_back(std::move(entry));
  }
  return report;
}

} // namespace gauge2
