#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whitmod/central_poly.hpp"
#include "whitmod/grading.hpp"
#include "whitmod/rational.hpp"

namespace whitmod {

// Either the chosen non-central basis vector x_alpha of g_alpha, or a named
// central generator.
struct GeneratorId {
  enum class Kind { X, Central };
  Kind kind = Kind::X;
  Degree degree;
  std::string name;  // set for central generators

  static GeneratorId x(Degree d) { return {Kind::X, std::move(d), {}}; }
  static GeneratorId central(std::string n, Degree d) {
    return {Kind::Central, std::move(d), std::move(n)};
  }
  bool is_central() const { return kind == Kind::Central; }
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

// A finitely supported element of g, split into x-generator coordinates and
// central-generator coordinates.  Homogeneous values of the bracket keep all
// terms concentrated on one degree.
struct LieElement {
  std::map<Degree, Rational> x_terms;
  std::map<std::string, Rational> central_terms;

  bool is_zero() const { return x_terms.empty() && central_terms.empty(); }
  void add_x(const Degree& d, const Rational& c);
  void add_central(const std::string& n, const Rational& c);
  LieElement& operator+=(const LieElement& o);
  LieElement operator*(const Rational& s) const;
  LieElement operator-() const { return *this * Rational(-1); }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

struct CentralGen {
  std::string name;
  Degree degree;
};

struct DegreeEntry {
  bool has_x = false;
  std::vector<int> centrals;  // indices into centrals()
};

struct BracketTableEntry {
  Rational x_coeff;                              // coefficient of x_{a+b}
  std::map<std::string, Rational> central_coeffs;
};

// A Q-good graded Lie algebra restricted to a finite validated window
// [-N, N] of pi-levels.  Built-in families carry closed-form bracket rules
// valid at any level; custom algebras carry an explicit table.
class GradedLieAlgebra {
 public:
  enum class Family { Virasoro, W22, Custom };

  static GradedLieAlgebra virasoro(std::int64_t level);
  static GradedLieAlgebra w22(std::int64_t level);
  // Parses the algebra-spec document (JSON).  Schema violations and Q-good
  // duplicates are rejected here; the Lie axioms are checked by
  // validate_algebra, not at load time.
  static GradedLieAlgebra from_spec_text(const std::string& json_text);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const GradingMap& grading() const { return pi_; }
  std::int64_t level_bound() const { return level_bound_; }
  std::int64_t level(const Degree& d) const { return pi_.level(d); }
  bool in_window(const Degree& d) const {
    std::int64_t l = pi_.level(d);
    return -level_bound_ <= l && l <= level_bound_;
  }

  const std::vector<CentralGen>& centrals() const { return centrals_; }
  // The coefficient-ring generators: centrals of nonpositive level, in
  // declaration order.  Their polynomial ring is the ring of module
  // coefficients.
  const std::vector<CentralGen>& coefficient_centrals() const { return coeff_centrals_; }
  int coefficient_var_count() const { return static_cast<int>(coeff_centrals_.size()); }
  std::optional<int> coefficient_var(const std::string& name) const;
  std::optional<int> central_index(const std::string& name) const;
  std::vector<std::string> coefficient_var_names() const;

  const std::map<Degree, DegreeEntry>& roster() const { return roster_; }
  bool degree_present(const Degree& d) const { return roster_.count(d) != 0; }

  // PBW letters: degrees of K \ R'' — every degree carrying an x-generator,
  // plus fully-central degrees of positive level (whose letter is the central
  // generator itself).
  bool is_letter(const Degree& d) const;
  bool letter_is_central(const Degree& d) const;
  std::vector<Degree> letters(std::int64_t min_level, std::int64_t max_level) const;
  std::vector<Degree> letters() const { return letters(-level_bound_, level_bound_); }

  // Raw bracket of the letters at degrees a and b.  Built-in rules evaluate at
  // any degree; custom tables throw WindowError outside their coverage.
  LieElement bracket_letters(const Degree& a, const Degree& b) const;

  // The spec'd bracket operation: central arguments always allowed (zero);
  // otherwise both degrees and their sum must lie inside the window.
  LieElement bracket(const GeneratorId& a, const GeneratorId& b) const;

  // Generator naming for text I/O ("L-2", "W3", "X[-2,0]", central names).
  std::string letter_name(const Degree& d) const;
  std::string generator_name(const GeneratorId& g) const;
  std::optional<GeneratorId> parse_generator(std::string_view token) const;

 private:
  Family family_ = Family::Custom;
  std::string name_;
  int rank_ = 1;
  GradingMap pi_;
  std::int64_t level_bound_ = 0;
  std::vector<CentralGen> centrals_;
  std::vector<CentralGen> coeff_centrals_;
  std::map<Degree, DegreeEntry> roster_;
  // Custom brackets, keyed by (a, b) with a < b (x-generator degrees).
  std::map<std::pair<Degree, Degree>, BracketTableEntry> table_;

  void build_roster_builtin();
  LieElement table_bracket(const Degree& a, const Degree& b) const;
};

// Single factory for the built-in families; throws on unknown names.
GradedLieAlgebra builtin(const std::string& name, std::int64_t level);

struct ValidationReport {
  std::vector<std::string> qgood;
  std::vector<std::string> antisymmetry;
  std::vector<std::string> jacobi;
  std::vector<std::string> grading;  // grade-additivity failures
  std::size_t checked_pairs = 0;
  std::size_t checked_triples = 0;
  bool pass() const {
    return qgood.empty() && antisymmetry.empty() && jacobi.empty() && grading.empty();
  }
  std::size_t total() const {
    return qgood.size() + antisymmetry.size() + jacobi.size() + grading.size();
  }
};

// Q-good dimension bounds, antisymmetry, Jacobi on all in-window triples whose
// brackets stay inside the window, and grade-additivity of bracket values.
// `level` restricts the scan to a sub-window of the algebra's roster.
ValidationReport validate_algebra(const GradedLieAlgebra& alg, std::int64_t level);
inline ValidationReport validate_algebra(const GradedLieAlgebra& alg) {
  return validate_algebra(alg, alg.level_bound());
}

enum class Sector { N, H, BMinusNeg };  // positive / zero / negative level

struct SectorTable {
  std::vector<Degree> k_set, k_prime, k_second;        // K, K', K''
  std::vector<Degree> r_set, r_prime, r_second;        // fully central degrees
  std::vector<Degree> letters_positive, letters_bminus;  // K'\R''-ish rosters
  std::vector<std::string> z_second;                   // Z'' generator names
  std::vector<std::pair<std::string, Sector>> generator_sectors;
};

SectorTable classify_degrees(const GradedLieAlgebra& alg, std::int64_t level);
inline SectorTable classify_degrees(const GradedLieAlgebra& alg) {
  return classify_degrees(alg, alg.level_bound());
}

}  // namespace whitmod
