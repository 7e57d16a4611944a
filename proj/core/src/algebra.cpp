#include "whitmod/algebra.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

#include "whitmod/errors.hpp"

namespace whitmod {

using nlohmann::json;

void LieElement::add_x(const Degree& d, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = x_terms.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) x_terms.erase(it);
  }
}

void LieElement::add_central(const std::string& n, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = central_terms.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) central_terms.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [d, c] : o.x_terms) add_x(d, c);
  for (const auto& [n, c] : o.central_terms) add_central(n, c);
  return *this;
}

LieElement LieElement::operator*(const Rational& s) const {
  LieElement r;
  if (s == 0) return r;
  for (const auto& [d, c] : x_terms) r.x_terms.emplace(d, c * s);
  for (const auto& [n, c] : central_terms) r.central_terms.emplace(n, c * s);
  return r;
}

namespace {

// (n^3 - n)/12, the Virasoro cocycle value at [L_n, L_-n].
Rational cocycle(std::int64_t n) {
  BigInt nn(n);
  return Rational(nn * nn * nn - nn, 12);
}

}  // namespace

void GradedLieAlgebra::build_roster_builtin() {
  for (std::int64_t n = -level_bound_; n <= level_bound_; ++n) {
    if (family_ == Family::Virasoro) {
      roster_[Degree{n}].has_x = true;
    } else {
      roster_[Degree{n, 0}].has_x = true;
      roster_[Degree{n, 1}].has_x = true;
    }
  }
  for (int i = 0; i < static_cast<int>(centrals_.size()); ++i)
    roster_[centrals_[i].degree].centrals.push_back(i);
  coeff_centrals_.clear();
  for (const auto& cg : centrals_)
    if (pi_.level(cg.degree) <= 0) coeff_centrals_.push_back(cg);
}

GradedLieAlgebra GradedLieAlgebra::virasoro(std::int64_t level) {
  GradedLieAlgebra a;
  a.family_ = Family::Virasoro;
  a.name_ = "virasoro";
  a.rank_ = 1;
  a.pi_ = GradingMap({1});
  a.level_bound_ = level;
  a.centrals_ = {{"c", Degree{0}}};
  a.build_roster_builtin();
  return a;
}

GradedLieAlgebra GradedLieAlgebra::w22(std::int64_t level) {
  GradedLieAlgebra a;
  a.family_ = Family::W22;
  a.name_ = "w22";
  a.rank_ = 2;
  a.pi_ = GradingMap({1, 0});
  a.level_bound_ = level;
  // c pairs with the L family at (0,0); z pairs with the W family at (0,1),
  // keeping every bracket value homogeneous of the summed degree.
  a.centrals_ = {{"c", Degree{0, 0}}, {"z", Degree{0, 1}}};
  a.build_roster_builtin();
  return a;
}

GradedLieAlgebra builtin(const std::string& name, std::int64_t level) {
  if (name == "virasoro") return GradedLieAlgebra::virasoro(level);
  if (name == "w22") return GradedLieAlgebra::w22(level);
  throw Error("unknown builtin algebra '" + name + "' (expected virasoro or w22)");
}

std::optional<int> GradedLieAlgebra::coefficient_var(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(coeff_centrals_.size()); ++i)
    if (coeff_centrals_[i].name == name) return i;
  return std::nullopt;
}

std::optional<int> GradedLieAlgebra::central_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(centrals_.size()); ++i)
    if (centrals_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> GradedLieAlgebra::coefficient_var_names() const {
  std::vector<std::string> out;
  for (const auto& cg : coeff_centrals_) out.push_back(cg.name);
  return out;
}

bool GradedLieAlgebra::is_letter(const Degree& d) const {
  auto it = roster_.find(d);
  if (it == roster_.end()) return false;
  if (it->second.has_x) return true;
  return pi_.level(d) > 0 && !it->second.centrals.empty();
}

bool GradedLieAlgebra::letter_is_central(const Degree& d) const {
  auto it = roster_.find(d);
  return it != roster_.end() && !it->second.has_x && !it->second.centrals.empty() &&
         pi_.level(d) > 0;
}

std::vector<Degree> GradedLieAlgebra::letters(std::int64_t min_level,
                                              std::int64_t max_level) const {
  std::vector<Degree> out;
  for (const auto& [d, entry] : roster_) {
    (void)entry;
    std::int64_t l = pi_.level(d);
    if (l < min_level || l > max_level) continue;
    if (is_letter(d)) out.push_back(d);
  }
  return out;
}

LieElement GradedLieAlgebra::table_bracket(const Degree& a, const Degree& b) const {
  if (!in_window(a) || !in_window(b) || !in_window(a + b))
    throw WindowError("bracket [" + letter_name(a) + ", " + letter_name(b) +
                      "] leaves the level window " + std::to_string(level_bound_));
  bool flip = b < a;
  auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
  auto it = table_.find(key);
  LieElement out;
  if (it == table_.end()) return out;  // unlisted pairs bracket to zero
  const auto& entry = it->second;
  Rational sign(flip ? -1 : 1);
  out.add_x(a + b, entry.x_coeff * sign);
  for (const auto& [n, c] : entry.central_coeffs) out.add_central(n, c * sign);
  return out;
}

LieElement GradedLieAlgebra::bracket_letters(const Degree& a, const Degree& b) const {
  LieElement out;
  if (letter_is_central(a) || letter_is_central(b)) return out;
  switch (family_) {
    case Family::Virasoro: {
      std::int64_t n = a.c[0], m = b.c[0];
      out.add_x(Degree{n + m}, Rational(m - n));
      if (n + m == 0) out.add_central("c", cocycle(n));
      return out;
    }
    case Family::W22: {
      std::int64_t n = a.c[0], m = b.c[0];
      int i = static_cast<int>(a.c[1]), j = static_cast<int>(b.c[1]);
      if (i == 1 && j == 1) return out;  // [W_n, W_m] = 0
      if (i == 1) return -bracket_letters(b, a);
      // [L_n, L_m] or [L_n, W_m]
      out.add_x(Degree{n + m, j}, Rational(m - n));
      if (n + m == 0) out.add_central(j == 0 ? "c" : "z", cocycle(n));
      return out;
    }
    case Family::Custom:
      return table_bracket(a, b);
  }
  return out;
}

LieElement GradedLieAlgebra::bracket(const GeneratorId& a, const GeneratorId& b) const {
  if (a.is_central() || b.is_central()) return {};
  for (const Degree* d : {&a.degree, &b.degree}) {
    if (!is_letter(*d))
      throw WindowError("no generator at degree " + d->to_string());
    if (!in_window(*d))
      throw WindowError("degree " + d->to_string() + " outside level window");
  }
  Degree sum = a.degree + b.degree;
  if (!in_window(sum))
    throw WindowError("bracket degree " + sum.to_string() + " outside level window " +
                      std::to_string(level_bound_));
  return bracket_letters(a.degree, b.degree);
}

std::string GradedLieAlgebra::letter_name(const Degree& d) const {
  if (family_ == Family::Virasoro) return "L" + std::to_string(d.c[0]);
  if (family_ == Family::W22)
    return (d.c[1] == 0 ? "L" : "W") + std::to_string(d.c[0]);
  auto it = roster_.find(d);
  if (it != roster_.end() && !it->second.has_x && !it->second.centrals.empty())
    return centrals_[it->second.centrals.front()].name;
  std::string s = "X[";
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.c[i]);
  }
  return s + "]";
}

std::string GradedLieAlgebra::generator_name(const GeneratorId& g) const {
  return g.is_central() ? g.name : letter_name(g.degree);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<GeneratorId> GradedLieAlgebra::parse_generator(std::string_view token) const {
  for (const auto& cg : centrals_)
    if (token == cg.name) return GeneratorId::central(cg.name, cg.degree);
  if (family_ == Family::Virasoro || family_ == Family::W22) {
    if (token.size() < 2) return std::nullopt;
    char fam = token[0];
    auto n = parse_int(token.substr(1));
    if (!n) return std::nullopt;
    if (family_ == Family::Virasoro) {
      if (fam != 'L') return std::nullopt;
      return GeneratorId::x(Degree{*n});
    }
    if (fam == 'L') return GeneratorId::x(Degree{*n, 0});
    if (fam == 'W') return GeneratorId::x(Degree{*n, 1});
    return std::nullopt;
  }
  // custom: X[a,b,...]
  if (token.size() >= 3 && token.substr(0, 2) == "X[" && token.back() == ']') {
    std::vector<std::int64_t> coords;
    std::string_view body = token.substr(2, token.size() - 3);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto piece = comma == std::string_view::npos ? body : body.substr(0, comma);
      auto v = parse_int(piece);
      if (!v) return std::nullopt;
      coords.push_back(*v);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    if (static_cast<int>(coords.size()) != rank_) return std::nullopt;
    return GeneratorId::x(Degree(std::move(coords)));
  }
  return std::nullopt;
}

// ---- algebra-spec document loading ----------------------------------------

namespace {

Degree degree_from_json(const json& j, int rank, const char* what) {
  std::vector<std::int64_t> coords;
  if (j.is_number_integer()) {
    coords.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw SpecError(std::string(what) + ": degree entries must be integers");
      coords.push_back(v.get<std::int64_t>());
    }
  } else {
    throw SpecError(std::string(what) + ": degree must be an integer or integer array");
  }
  if (static_cast<int>(coords.size()) != rank)
    throw SpecError(std::string(what) + ": degree rank mismatch");
  return Degree(std::move(coords));
}

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SpecError(std::string(what) + ": rationals must be integers or \"p/q\" strings");
}

}  // namespace

GradedLieAlgebra GradedLieAlgebra::from_spec_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("algebra spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("algebra spec must be a JSON object");
  for (const char* field : {"rank", "pi_weights", "window_level", "generators"})
    if (!doc.contains(field)) throw SpecError(std::string("algebra spec missing field '") + field + "'");

  GradedLieAlgebra a;
  a.family_ = Family::Custom;
  a.name_ = doc.value("name", std::string("custom"));
  a.rank_ = doc.at("rank").get<int>();
  if (a.rank_ < 1) throw SpecError("rank must be >= 1");
  {
    std::vector<std::int64_t> w;
    for (const auto& v : doc.at("pi_weights")) w.push_back(v.get<std::int64_t>());
    if (static_cast<int>(w.size()) != a.rank_) throw SpecError("pi_weights length must equal rank");
    a.pi_ = GradingMap(std::move(w));
  }
  a.level_bound_ = doc.at("window_level").get<std::int64_t>();
  if (a.level_bound_ < 0) throw SpecError("window_level must be >= 0");

  for (const auto& g : doc.at("generators")) {
    Degree d = degree_from_json(g, a.rank_, "generators");
    if (!a.in_window(d))
      throw SpecError("generator degree " + d.to_string() + " outside the level window");
    auto& entry = a.roster_[d];
    if (entry.has_x)
      throw SpecError("two non-central generators at degree " + d.to_string() +
                      " violate the Q-good bound");
    entry.has_x = true;
  }

  if (doc.contains("centrals")) {
    for (const auto& cj : doc.at("centrals")) {
      if (!cj.is_object() || !cj.contains("name") || !cj.contains("degree"))
        throw SpecError("centrals entries must be {name, degree} objects");
      CentralGen cg{cj.at("name").get<std::string>(),
                    degree_from_json(cj.at("degree"), a.rank_, "centrals")};
      if (cg.name.empty()) throw SpecError("central generator with empty name");
      for (const auto& prev : a.centrals_)
        if (prev.name == cg.name) throw SpecError("duplicate central name '" + cg.name + "'");
      if (!a.in_window(cg.degree))
        throw SpecError("central degree " + cg.degree.to_string() + " outside the level window");
      a.centrals_.push_back(cg);
    }
  }
  for (int i = 0; i < static_cast<int>(a.centrals_.size()); ++i)
    a.roster_[a.centrals_[i].degree].centrals.push_back(i);
  for (const auto& cg : a.centrals_)
    if (a.pi_.level(cg.degree) <= 0) a.coeff_centrals_.push_back(cg);

  if (doc.contains("brackets")) {
    for (const auto& bj : doc.at("brackets")) {
      if (!bj.is_object() || !bj.contains("a") || !bj.contains("b"))
        throw SpecError("brackets entries must be {a, b, ...} objects");
      Degree da = degree_from_json(bj.at("a"), a.rank_, "brackets");
      Degree db = degree_from_json(bj.at("b"), a.rank_, "brackets");
      if (db < da) throw SpecError("bracket pairs must be listed with a <= b");
      for (const Degree* d : {&da, &db}) {
        auto it = a.roster_.find(*d);
        if (it == a.roster_.end() || !it->second.has_x)
          throw SpecError("bracket references missing generator at degree " + d->to_string());
      }
      if (!a.in_window(da + db))
        throw SpecError("bracket of " + da.to_string() + ", " + db.to_string() +
                        " has degree outside the level window");
      BracketTableEntry entry;
      if (bj.contains("x_coeff_degree_sum"))
        entry.x_coeff = rational_from_json(bj.at("x_coeff_degree_sum"), "brackets");
      if (bj.contains("central_coeffs")) {
        for (const auto& [name, cv] : bj.at("central_coeffs").items()) {
          if (!a.central_index(name))
            throw SpecError("bracket references unknown central '" + name + "'");
          Rational r = rational_from_json(cv, "brackets");
          if (r != 0) entry.central_coeffs.emplace(name, r);
        }
      }
      auto key = std::make_pair(da, db);
      if (a.table_.count(key))
        throw SpecError("duplicate bracket entry for (" + da.to_string() + ", " +
                        db.to_string() + ")");
      if (entry.x_coeff != 0 || !entry.central_coeffs.empty()) a.table_.emplace(key, entry);
    }
  }
  return a;
}

// ---- validation ------------------------------------------------------------

namespace {

// [x_a, v] extended linearly; central terms of v are killed.
LieElement ad_letter(const GradedLieAlgebra& alg, const Degree& a, const LieElement& v) {
  LieElement out;
  for (const auto& [d, c] : v.x_terms) out += alg.bracket_letters(a, d) * c;
  return out;
}

std::string pair_label(const GradedLieAlgebra& alg, const Degree& a, const Degree& b) {
  return "[" + alg.letter_name(a) + ", " + alg.letter_name(b) + "]";
}

}  // namespace

ValidationReport validate_algebra(const GradedLieAlgebra& alg, std::int64_t level) {
  ValidationReport rep;
  const auto& pi = alg.grading();

  std::vector<Degree> xdegs;
  for (const auto& [d, entry] : alg.roster()) {
    std::int64_t l = pi.level(d);
    if (l < -level || l > level) continue;
    int dim_noncentral = entry.has_x ? 1 : 0;
    if (l > 0 && dim_noncentral + static_cast<int>(entry.centrals.size()) > 1)
      rep.qgood.push_back("degree " + d.to_string() +
                          " has dimension > 1 at positive level");
    if (entry.has_x) xdegs.push_back(d);
  }

  auto in = [&](const Degree& d) {
    std::int64_t l = pi.level(d);
    return -level <= l && l <= level;
  };

  for (std::size_t i = 0; i < xdegs.size(); ++i) {
    for (std::size_t j = i; j < xdegs.size(); ++j) {
      const Degree &a = xdegs[i], &b = xdegs[j];
      if (!in(a + b)) continue;
      ++rep.checked_pairs;
      LieElement ab = alg.bracket_letters(a, b);
      LieElement ba = alg.bracket_letters(b, a);
      LieElement sum = ab;
      sum += ba;
      if (!sum.is_zero())
        rep.antisymmetry.push_back(pair_label(alg, a, b) + " + " + pair_label(alg, b, a) +
                                   " != 0");
      // grade-additivity of the bracket value
      for (const auto& [d, c] : ab.x_terms) {
        (void)c;
        if (!(d == a + b))
          rep.grading.push_back(pair_label(alg, a, b) + " has x-term at degree " +
                                d.to_string() + " != " + (a + b).to_string());
        auto it = alg.roster().find(d);
        if (it == alg.roster().end() || !it->second.has_x)
          rep.grading.push_back(pair_label(alg, a, b) + " targets missing generator at " +
                                d.to_string());
      }
      for (const auto& [n, c] : ab.central_terms) {
        (void)c;
        auto idx = alg.central_index(n);
        if (!idx || !(alg.centrals()[*idx].degree == a + b))
          rep.grading.push_back(pair_label(alg, a, b) + " has central term '" + n +
                                "' of degree != " + (a + b).to_string());
      }
    }
  }

  for (std::size_t i = 0; i < xdegs.size(); ++i) {
    for (std::size_t j = i; j < xdegs.size(); ++j) {
      for (std::size_t k = j; k < xdegs.size(); ++k) {
        const Degree &a = xdegs[i], &b = xdegs[j], &c = xdegs[k];
        if (!in(a + b) || !in(b + c) || !in(a + c) || !in(a + b + c)) continue;
        ++rep.checked_triples;
        LieElement jac = ad_letter(alg, a, alg.bracket_letters(b, c));
        jac += ad_letter(alg, b, alg.bracket_letters(c, a));
        jac += ad_letter(alg, c, alg.bracket_letters(a, b));
        if (!jac.is_zero())
          rep.jacobi.push_back("Jacobi fails on (" + alg.letter_name(a) + ", " +
                               alg.letter_name(b) + ", " + alg.letter_name(c) + ")");
      }
    }
  }
  return rep;
}

SectorTable classify_degrees(const GradedLieAlgebra& alg, std::int64_t level) {
  SectorTable t;
  const auto& pi = alg.grading();
  for (const auto& [d, entry] : alg.roster()) {
    std::int64_t l = pi.level(d);
    if (l < -level || l > level) continue;
    bool fully_central = !entry.has_x && !entry.centrals.empty();
    bool present = entry.has_x || !entry.centrals.empty();
    if (!present) continue;
    t.k_set.push_back(d);
    (l > 0 ? t.k_prime : t.k_second).push_back(d);
    if (fully_central) {
      t.r_set.push_back(d);
      (l > 0 ? t.r_prime : t.r_second).push_back(d);
    }
    if (l > 0 && (entry.has_x || fully_central)) t.letters_positive.push_back(d);
    if (l <= 0 && entry.has_x) t.letters_bminus.push_back(d);
  }
  for (const auto& cg : alg.coefficient_centrals()) t.z_second.push_back(cg.name);
  for (const auto& [d, entry] : alg.roster()) {
    std::int64_t l = pi.level(d);
    if (l < -level || l > level) continue;
    Sector s = l > 0 ? Sector::N : (l == 0 ? Sector::H : Sector::BMinusNeg);
    if (entry.has_x) t.generator_sectors.emplace_back(alg.letter_name(d), s);
    for (int ci : entry.centrals)
      t.generator_sectors.emplace_back(alg.centrals()[ci].name, s);
  }
  return t;
}

}  // namespace whitmod
