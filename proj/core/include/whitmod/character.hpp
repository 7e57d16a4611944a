#pragma once

#include <map>
#include <optional>
#include <vector>

#include "whitmod/algebra.hpp"
#include "whitmod/partition.hpp"

namespace whitmod {

// A Lie algebra homomorphism from the positive-level part into the scalars,
// stored on every positive-level window letter.  Values on composite degrees
// are forced to zero by the bracket relations; positive central letters
// always carry zero.
class Character {
 public:
  Character() = default;
  Character(std::map<Degree, Rational> values, std::vector<Degree> support,
            std::optional<Degree> alpha_phi)
      : values_(std::move(values)), support_(std::move(support)), alpha_phi_(std::move(alpha_phi)) {}

  // Value on the letter at positive degree d; zero for central letters and
  // degrees beyond the stored window.
  Rational of_letter(const Degree& d) const {
    auto it = values_.find(d);
    return it == values_.end() ? Rational(0) : it->second;
  }
  // Multiplicative extension to a monomial of positive-level letters.
  Rational of_partition(const Partition& n_parts) const {
    Rational r(1);
    for (const auto& p : n_parts.parts()) {
      r *= of_letter(p);
      if (r == 0) return r;
    }
    return r;
  }

  const std::map<Degree, Rational>& values() const { return values_; }
  const std::vector<Degree>& support() const { return support_; }
  const std::optional<Degree>& alpha_phi() const { return alpha_phi_; }
  bool trivial() const { return support_.empty(); }

 private:
  std::map<Degree, Rational> values_;
  std::vector<Degree> support_;  // ascending
  std::optional<Degree> alpha_phi_;
};

// Completes assignments on a generating set to the whole positive window:
// degrees reachable as brackets are forced to zero, unassigned unforced
// degrees default to zero.  Rejects assignments that contradict a bracket
// relation or sit on a central generator with a nonzero value.
Character make_character(const GradedLieAlgebra& alg,
                         const std::vector<std::pair<GeneratorId, Rational>>& assignments);

struct NonsingularityRow {
  Degree beta;            // a b_minus letter degree
  Degree witness_degree;  // alpha_phi - beta
  bool witness_exists = false;
  bool window_limited = false;  // custom algebra could not evaluate the bracket
  Rational phi_of_bracket;
  bool pass = false;
};

struct NonsingularityReport {
  bool support_nonempty = false;
  std::optional<Degree> alpha_phi;
  std::vector<NonsingularityRow> rows;  // one per window b_minus letter
  bool nonsingular = false;             // condition 1 and every checkable row
  std::size_t window_limited_rows = 0;
  // Built-in families' per-family condition (all listed generator values
  // nonzero); unset for custom algebras.
  std::optional<bool> family_nonsingular;
};

NonsingularityReport nonsingularity_report(const GradedLieAlgebra& alg, const Character& phi);

}  // namespace whitmod
