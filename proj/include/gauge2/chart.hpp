#ifndef GAUGE2_CHART_HPP
#define GAUGE2_CHART_HPP

#include <stdexcept>
#include <string>

namespace gauge2 {

/// A single global coordinate chart x1..xm. Desk-scale cap m <= 9 keeps the
/// wedge combinatorics well under a second per operation.
struct Chart {
  int dim = 0;

  static constexpr int max_dim = 9;

  explicit Chart(int m) : dim(m)
  {
    if (m < 1 || m > max_dim)
      throw std::invalid_argument("chart dimension must be in 1.." +
                                  std::to_string(max_dim));
  }

  bool operator==(const Chart& o) const { return dim == o.dim; }
  bool operator!=(const Chart& o) const { return dim != o.dim; }

  std::string coordinate(int i) const { return "x" + std::to_string(i + 1); }
};

} // namespace gauge2

#endif
