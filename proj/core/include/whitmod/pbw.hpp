#pragma once

#include <map>
#include <vector>

#include "whitmod/algebra.hpp"
#include "whitmod/character.hpp"
#include "whitmod/central_poly.hpp"
#include "whitmod/partition.hpp"

namespace whitmod {

// An element of the enveloping algebra over the coefficient ring, stored in
// PBW normal form: partition -> coefficient polynomial, no zero entries.
class UElement {
 public:
  UElement() = default;

  static UElement identity(int nvars) {
    return monomial(Partition::null(), CentralPoly::constant(nvars, Rational(1)));
  }
  static UElement monomial(Partition p, CentralPoly coeff) {
    UElement u;
    u.add_term(std::move(p), std::move(coeff));
    return u;
  }
  static UElement letter(const Degree& d, int nvars) {
    return monomial(Partition({d}), CentralPoly::constant(nvars, Rational(1)));
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, CentralPoly>& terms() const { return terms_; }

  // Height counts x-factors only; coefficient polynomials do not contribute.
  std::size_t height() const;

  void add_term(const Partition& p, const CentralPoly& coeff);
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  UElement operator*(const Rational& s) const;
  UElement scaled(const CentralPoly& p) const;
  UElement operator-() const { return *this * Rational(-1); }
  friend bool operator==(const UElement&, const UElement&) = default;

  std::string to_string(const GradedLieAlgebra& alg) const;

 private:
  std::map<Partition, CentralPoly> terms_;
};

// Product in PBW normal form, associative and bilinear over the coefficient
// ring.  Adjacent out-of-order letters are transposed one at a time, each
// transposition emitting its commutator terms; reordered pairs are memoized
// per call.  Throws WindowError if a rewriting step needs a letter outside
// the window.
UElement multiply(const GradedLieAlgebra& alg, const UElement& u, const UElement& v);

// [x_sigma, x_lambda] in PBW normal form, expanded as the sum of
// prefix * [x_sigma, part] * suffix over the parts of lambda.  sigma must be
// a letter degree; central letters commute and give zero.
UElement commutator_monomial(const GradedLieAlgebra& alg, const Degree& sigma,
                             const Partition& lambda);

// Projection onto the nonpositive-level part along the phi-kernel ideal:
// each monomial splits at the level boundary and the positive tail collapses
// to the product of its character values.
UElement phi_component(const GradedLieAlgebra& alg, const UElement& u, const Character& phi);

enum class BasisSector { BMinus, Full };

// All partitions of the sector letters with the given level depth and height,
// in a deterministic order: level descending, then parts compared
// elementwise largest-first with prefixes preceding their extensions.
std::vector<Partition> enumerate_basis(const GradedLieAlgebra& alg, BasisSector sector,
                                       std::int64_t depth, std::int64_t height);

// The deterministic basis order used above, exposed for report assembly.
bool basis_order_less(const GradedLieAlgebra& alg, const Partition& a, const Partition& b);

// pi-level of |lambda|.
std::int64_t partition_level(const GradedLieAlgebra& alg, const Partition& p);

// Q-degree decomposition of a normal-form element; central factors contribute
// their declared degrees.
std::map<Degree, UElement> q_components(const GradedLieAlgebra& alg, const UElement& u);

}  // namespace whitmod
