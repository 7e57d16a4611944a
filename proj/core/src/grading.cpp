#include "whitmod/grading.hpp"

namespace whitmod {

std::string Degree::to_string() const {
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  s += "]";
  return s;
}

Ordering compare(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank())
    throw DimensionError("cannot compare degrees of rank " + std::to_string(a.rank()) +
                         " and " + std::to_string(b.rank()));
  auto o = a <=> b;
  if (o < 0) return Ordering::Less;
  if (o > 0) return Ordering::Greater;
  return Ordering::Equal;
}

GradingReport validate_grading_map(const GradingMap& pi, const std::vector<Degree>& window) {
  GradingReport report;
  bool all_zero = true;
  for (const auto& d : window)
    if (pi.level(d) != 0) all_zero = false;
  report.degenerate = all_zero && !window.empty();
  for (const auto& a : window) {
    for (const auto& b : window) {
      if (!(a <= b)) continue;
      std::int64_t pa = pi.level(a), pb = pi.level(b);
      if (pa > pb) report.violations.push_back({a, b, pa, pb});
    }
  }
  return report;
}

}  // namespace whitmod
