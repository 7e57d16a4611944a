#pragma once

#include <map>
#include <string>
#include <vector>

#include "whitmod/rational.hpp"

namespace whitmod {

// Exponent vector over the coefficient-ring generators (the nonpositive-level
// central generators, in declaration order).
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded lex: total degree first, then earlier generators weigh more.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients, canonical:
// no zero terms, monomials ordered graded-lex.
class CentralPoly {
 public:
  CentralPoly() : nvars_(0) {}
  explicit CentralPoly(int nvars) : nvars_(nvars) {}

  static CentralPoly constant(int nvars, const Rational& value);
  static CentralPoly variable(int nvars, int index);
  static CentralPoly monomial(int nvars, Monomial m, const Rational& coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the constant monomial (zero if absent).
  Rational constant_term() const;
  // Max total degree over the support, -1 for the zero polynomial.
  int degree() const;

  const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& coeff);

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
  CentralPoly operator*(const Rational& s) const;
  CentralPoly operator-() const { return *this * Rational(-1); }
  CentralPoly pow(int e) const;

  friend bool operator==(const CentralPoly& a, const CentralPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Sorted monomial sum, leading (graded-lex greatest) term first.
  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Monomial, Rational, MonomialLess> terms_;
};

// Ideal of the coefficient ring: either the zero ideal or a substitution
// ideal sending each eliminated generator to an affine combination of the
// surviving generators and constants.  All eliminated generators distinct,
// right-hand sides supported on survivors only (no cycles).
struct IdealSpec {
  struct Substitution {
    int var;            // eliminated generator index
    CentralPoly value;  // affine, supported on surviving generators
  };
  std::vector<Substitution> subs;

  static IdealSpec zero() { return {}; }

  bool is_zero() const { return subs.empty(); }
  bool eliminates(int var) const;
  const CentralPoly* value_of(int var) const;
  // Maximal ideal: every generator eliminated (hence all values constant).
  bool is_maximal(int nvars) const;
  std::vector<int> survivors(int nvars) const;

  // Checks the structural invariants above; throws IdealError on failure.
  void validate(int nvars) const;
};

// Substitutes eliminated generators; the result is canonical in the
// surviving generators.  reduce_poly is a ring homomorphism A -> A/I.
CentralPoly reduce_poly(const CentralPoly& p, const IdealSpec& ideal);

}  // namespace whitmod
