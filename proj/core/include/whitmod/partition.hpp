#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "whitmod/grading.hpp"

namespace whitmod {

// A nondecreasing multiset of letter degrees; the index of one PBW monomial.
// The empty partition indexes the identity monomial.
class Partition {
 public:
  Partition() = default;
  // Sorts unless the caller promises sortedness.
  explicit Partition(std::vector<Degree> parts, bool presorted = false);

  static const Partition& null() {
    static const Partition p;
    return p;
  }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const std::vector<Degree>& parts() const { return parts_; }
  const Degree& part(std::size_t i) const { return parts_[i]; }

  // |lambda|, the degree sum; the null partition sums to zero of the given rank.
  Degree weight(int rank) const;
  // Multiplicity of alpha among the parts.
  int multiplicity(const Degree& alpha) const;

  // First i parts.
  Partition prefix(std::size_t i) const;
  // Parts after the first j.
  Partition suffix(std::size_t j) const;
  // All parts except the one at position i (0-based).
  Partition erased(std::size_t i) const;
  // Insert keeping sortedness.
  Partition with_part(const Degree& d) const;
  Partition concat_sorted(const Partition& o) const;

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Degree> parts_;
};

}  // namespace whitmod
