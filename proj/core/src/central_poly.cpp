#include "whitmod/central_poly.hpp"

#include <algorithm>

#include "whitmod/errors.hpp"

namespace whitmod {

CentralPoly CentralPoly::constant(int nvars, const Rational& value) {
  CentralPoly p(nvars);
  p.add_term(Monomial(nvars, 0), value);
  return p;
}

CentralPoly CentralPoly::variable(int nvars, int index) {
  CentralPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

CentralPoly CentralPoly::monomial(int nvars, Monomial m, const Rational& coeff) {
  CentralPoly p(nvars);
  p.add_term(m, coeff);
  return p;
}

bool CentralPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational CentralPoly::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int CentralPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

void CentralPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

CentralPoly CentralPoly::operator*(const Rational& s) const {
  CentralPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

CentralPoly CentralPoly::pow(int e) const {
  CentralPoly r = CentralPoly::constant(nvars_, Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string CentralPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string coeff = whitmod::to_string(a);
    std::string piece;
    if (mono.empty())
      piece = coeff;
    else if (a == 1)
      piece = mono;
    else
      piece = coeff + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

bool IdealSpec::eliminates(int var) const {
  for (const auto& s : subs)
    if (s.var == var) return true;
  return false;
}

const CentralPoly* IdealSpec::value_of(int var) const {
  for (const auto& s : subs)
    if (s.var == var) return &s.value;
  return nullptr;
}

bool IdealSpec::is_maximal(int nvars) const {
  // Every generator eliminated; triangularity then forces constant values.
  return static_cast<int>(subs.size()) == nvars;
}

std::vector<int> IdealSpec::survivors(int nvars) const {
  std::vector<int> out;
  for (int v = 0; v < nvars; ++v)
    if (!eliminates(v)) out.push_back(v);
  return out;
}

void IdealSpec::validate(int nvars) const {
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& s = subs[i];
    if (s.var < 0 || s.var >= nvars) throw IdealError("substitution eliminates unknown generator");
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (subs[j].var == s.var) throw IdealError("generator eliminated twice");
    if (s.value.degree() > 1) throw IdealError("substitution value is not affine");
    for (const auto& [m, c] : s.value.terms()) {
      (void)c;
      for (int v = 0; v < nvars; ++v)
        if (m[v] > 0 && eliminates(v))
          throw IdealError("substitution value uses an eliminated generator");
    }
  }
}

CentralPoly reduce_poly(const CentralPoly& p, const IdealSpec& ideal) {
  if (ideal.is_zero()) return p;
  int n = p.nvars();
  CentralPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    CentralPoly term = CentralPoly::constant(n, c);
    Monomial kept(n, 0);
    for (int v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      if (const CentralPoly* val = ideal.value_of(v))
        term = term * val->pow(m[v]);
      else
        kept[v] = m[v];
    }
    out += term * CentralPoly::monomial(n, kept, Rational(1));
  }
  return out;
}

}  // namespace whitmod
