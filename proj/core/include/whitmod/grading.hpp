#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "whitmod/errors.hpp"

namespace whitmod {

// Element of the grading group Q = Z^k, totally ordered lexicographically.
struct Degree {
  std::vector<std::int64_t> c;

  Degree() = default;
  explicit Degree(std::vector<std::int64_t> coords) : c(std::move(coords)) {}
  Degree(std::initializer_list<std::int64_t> coords) : c(coords) {}

  static Degree zero(int rank) { return Degree(std::vector<std::int64_t>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }

  friend Degree operator+(const Degree& a, const Degree& b) {
    Degree r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Degree operator-(const Degree& a, const Degree& b) {
    Degree r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  Degree operator-() const {
    Degree r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }

  // Lexicographic: the first differing coordinate decides.
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) { return a.c <=> b.c; }
  friend bool operator==(const Degree& a, const Degree& b) { return a.c == b.c; }

  // "[-2,1]" in general, bare integer for rank 1.
  std::string to_string() const;
};

enum class Ordering { Less, Equal, Greater };

// Total lexicographic comparison; rejects mixed ranks.
Ordering compare(const Degree& a, const Degree& b);

// The level functional pi : Q -> Z, an order-preserving group homomorphism
// realized as an integer weight vector.
struct GradingMap {
  std::vector<std::int64_t> weights;

  GradingMap() = default;
  explicit GradingMap(std::vector<std::int64_t> w) : weights(std::move(w)) {}

  std::int64_t level(const Degree& d) const {
    if (d.c.size() != weights.size())
      throw DimensionError("grading map of rank " + std::to_string(weights.size()) +
                           " applied to degree of rank " + std::to_string(d.c.size()));
    std::int64_t s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * d.c[i];
    return s;
  }
};

struct GradingViolation {
  Degree a, b;               // a <= b in the lex order
  std::int64_t pa, pb;       // but pi(a) > pi(b)
};

struct GradingReport {
  std::vector<GradingViolation> violations;
  bool degenerate = false;   // pi identically zero on the window
  bool pass() const { return violations.empty(); }
};

// Scans every ordered pair of the window for order-preservation failures.
// Violations are report entries, not exceptions.
GradingReport validate_grading_map(const GradingMap& pi, const std::vector<Degree>& window);

}  // namespace whitmod
