#include "whitmod/character.hpp"

#include <algorithm>

#include "whitmod/errors.hpp"

namespace whitmod {

Character make_character(const GradedLieAlgebra& alg,
                         const std::vector<std::pair<GeneratorId, Rational>>& assignments) {
  std::vector<Degree> positive = alg.letters(1, alg.level_bound());

  // Degrees forced to zero: targets of a nonvanishing bracket of two
  // positive letters.  phi kills every commutator, and brackets of
  // homogeneous elements are homogeneous, so the forced value is always 0.
  std::map<Degree, std::pair<Degree, Degree>> forced;  // target -> witnessing pair
  for (std::size_t i = 0; i < positive.size(); ++i) {
    for (std::size_t j = i; j < positive.size(); ++j) {
      Degree sum = positive[i] + positive[j];
      if (!alg.in_window(sum)) continue;
      LieElement br = alg.bracket_letters(positive[i], positive[j]);
      auto it = br.x_terms.find(sum);
      if (it != br.x_terms.end() && it->second != 0)
        forced.emplace(sum, std::make_pair(positive[i], positive[j]));
    }
  }

  std::map<Degree, Rational> values;
  for (const auto& d : positive) values.emplace(d, Rational(0));

  for (const auto& [gen, value] : assignments) {
    if (gen.is_central()) {
      if (value != 0)
        throw CharacterError("character must vanish on central generator '" + gen.name + "'");
      continue;
    }
    const Degree& d = gen.degree;
    if (alg.level(d) <= 0)
      throw CharacterError("character assignments must sit at positive level, got " +
                           alg.letter_name(d));
    auto it = values.find(d);
    if (it == values.end() || alg.letter_is_central(d)) {
      if (alg.letter_is_central(d)) {
        if (value != 0)
          throw CharacterError("character must vanish on the central letter " +
                               alg.letter_name(d));
        continue;
      }
      throw CharacterError("no generator at degree " + d.to_string() + " in the window");
    }
    auto forced_it = forced.find(d);
    if (forced_it != forced.end() && value != 0)
      throw CharacterError("phi(" + alg.letter_name(d) + ") is forced to 0 by [" +
                           alg.letter_name(forced_it->second.first) + ", " +
                           alg.letter_name(forced_it->second.second) + "]");
    it->second = value;
  }

  std::vector<Degree> support;
  for (const auto& [d, v] : values)
    if (v != 0) support.push_back(d);
  std::optional<Degree> alpha;
  if (!support.empty()) alpha = *std::max_element(support.begin(), support.end());
  return Character(std::move(values), std::move(support), std::move(alpha));
}

NonsingularityReport nonsingularity_report(const GradedLieAlgebra& alg, const Character& phi) {
  NonsingularityReport rep;
  rep.support_nonempty = !phi.support().empty();
  rep.alpha_phi = phi.alpha_phi();

  if (alg.family() == GradedLieAlgebra::Family::Virasoro) {
    rep.family_nonsingular =
        phi.of_letter(Degree{1}) != 0 && phi.of_letter(Degree{2}) != 0;
  } else if (alg.family() == GradedLieAlgebra::Family::W22) {
    rep.family_nonsingular = phi.of_letter(Degree{1, 0}) != 0 &&
                             phi.of_letter(Degree{2, 0}) != 0 &&
                             phi.of_letter(Degree{1, 1}) != 0 &&
                             phi.of_letter(Degree{2, 1}) != 0;
  }

  if (!rep.support_nonempty) {
    rep.nonsingular = false;
    return rep;
  }
  const Degree& alpha = *rep.alpha_phi;

  bool all_pass = true;
  // Rows ordered from level 0 downward, matching the basis enumeration order.
  std::vector<Degree> betas = alg.letters(-alg.level_bound(), 0);
  std::sort(betas.begin(), betas.end(), [&](const Degree& a, const Degree& b) {
    std::int64_t la = alg.level(a), lb = alg.level(b);
    if (la != lb) return la > lb;
    return a > b;
  });
  for (const Degree& beta : betas) {
    NonsingularityRow row;
    row.beta = beta;
    row.witness_degree = alpha - beta;
    bool closed_form = alg.family() != GradedLieAlgebra::Family::Custom;
    bool witness_in_roster = alg.is_letter(row.witness_degree);
    if (closed_form) {
      // Built-in rosters are uniform in the level, so the witness space is
      // nonzero at any level; the closed-form rule evaluates anywhere.
      row.witness_exists = true;
      LieElement br = alg.bracket_letters(row.witness_degree, beta);
      auto it = br.x_terms.find(alpha);
      row.phi_of_bracket = it == br.x_terms.end() ? Rational(0) : it->second * phi.of_letter(alpha);
      row.pass = row.phi_of_bracket != 0;
    } else if (witness_in_roster && alg.in_window(row.witness_degree)) {
      row.witness_exists = !alg.letter_is_central(row.witness_degree);
      if (row.witness_exists) {
        LieElement br = alg.bracket_letters(row.witness_degree, beta);
        auto it = br.x_terms.find(alpha);
        row.phi_of_bracket =
            it == br.x_terms.end() ? Rational(0) : it->second * phi.of_letter(alpha);
        row.pass = row.phi_of_bracket != 0;
      }
    } else if (!alg.in_window(row.witness_degree)) {
      row.window_limited = true;
      ++rep.window_limited_rows;
    }
    if (!row.window_limited && !row.pass) all_pass = false;
    rep.rows.push_back(std::move(row));
  }
  rep.nonsingular = all_pass;
  return rep;
}

}  // namespace whitmod
