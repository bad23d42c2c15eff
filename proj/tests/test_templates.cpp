#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "finalg/catalogue.hpp"
#include "finalg/templates.hpp"

using namespace finalg;

namespace {

int label_index(const FiniteMonoid& m, const std::string& label) {
  for (int i = 0; i < m.size; ++i)
    if (m.labels[i] == label) return i;
  return -1;
}

FiniteGroup group_of(const FiniteMonoid& m) { return as_group(m).group.value(); }

// Free-product-preserving perturbation: split syllables and sprinkle zeros.
std::vector<std::pair<int, int>> perturb(const std::vector<std::pair<int, int>>& word,
                                         std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> out;
  for (auto [k, l] : word) {
    if (rng() % 2) out.emplace_back(0, 0);
    if (k != 0 && rng() % 2) {
      int cut = 1 + static_cast<int>(rng() % std::max(1, std::abs(k)));
      int sign = k > 0 ? 1 : -1;
      out.emplace_back(sign * cut, 0);
      out.emplace_back(k - sign * cut, 0);
    } else {
      out.emplace_back(k, 0);
    }
    if (l != 0 && rng() % 2) {
      out.emplace_back(0, l);
      out.emplace_back(0, 0);
    } else {
      out.emplace_back(0, l);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("normalize merges, strips zeros, and keeps canonical words fixed") {
  CHECK(normalize({{1, 0}, {0, 1}}).word == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(normalize({{-1, 1}, {2, 0}}).word ==
        std::vector<std::pair<int, int>>{{-1, 1}, {2, 0}});
  CHECK(normalize({{1, 1}, {-1, -1}, {1, 1}}).word ==
        std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}, {1, 1}});
  // Cancellation cascades collapse to the direct word.
  CHECK(normalize({{1, 0}, {2, 0}, {-2, 0}, {0, 1}}).word ==
        std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("normalize rejects words whose exponent sums are not (1,1)") {
  try {
    normalize({{2, 0}, {0, 1}});
    FAIL("expected BadSumsError");
  } catch (const BadSumsError& e) {
    CHECK(e.k_sum == 2);
    CHECK(e.l_sum == 1);
  }
  CHECK_THROWS_AS(normalize({}), BadSumsError);
}

TEST_CASE("normalize is idempotent and invariant under free-product perturbations") {
  std::mt19937_64 rng(20240502);
  auto templates = enumerate_templates(4, 2);
  REQUIRE(!templates.empty());
  for (const auto& t : templates) {
    CHECK(normalize(t.word).word == t.word);
    for (int trial = 0; trial < 4; ++trial)
      CHECK(normalize(perturb(t.word, rng)).word == t.word);
  }
}

TEST_CASE("template literals round-trip through the parser") {
  CHECK(format_template(simple_template()) == "x^-1 y x^2");
  CHECK(parse_template("x^-1 y x^2") == simple_template());
  CHECK(parse_template("x y") == direct_template());
  CHECK(format_template(parse_template("y^2 x y^-1")) == "y^2 x y^-1");
  for (const auto& t : enumerate_templates(4, 2))
    CHECK(parse_template(format_template(t)) == t);
  CHECK_THROWS_AS(parse_template("z"), AlgebraError);
  CHECK_THROWS_AS(parse_template("x"), BadSumsError);
}

TEST_CASE("distinct normal forms have distinct serializations") {
  auto templates = enumerate_templates(4, 2);
  std::vector<std::string> seen;
  for (const auto& t : templates) seen.push_back(format_template(t));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("enumeration counts: small cases by hand, defaults frozen") {
  CHECK(enumerate_templates(2, 1).size() == 2);    // x y and y x
  CHECK(enumerate_templates(3, 2).size() == 6);    // plus 4 three-syllable words
  CHECK(enumerate_templates(6, 3).size() == 1092);
}

TEST_CASE("induced operation on an abelian group is plain multiplication") {
  FiniteGroup c6 = group_of(cyclic_group(6));
  for (const auto& t : enumerate_templates(4, 2)) {
    InducedOperation op = induced_op(c6, t);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) CHECK(op.at(x, y) == c6.at(x, y));
  }
}

TEST_CASE("the direct template is multiplication on any group") {
  FiniteGroup s3 = group_of(symmetric3());
  InducedOperation op = induced_op(s3, direct_template());
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(op.at(x, y) == s3.at(x, y));
}

TEST_CASE("simple template on D10: a*b = a2b and the table is a Latin square") {
  FiniteMonoid d10m = dihedral_group(5);
  FiniteGroup d10 = group_of(d10m);
  InducedOperation op = induced_op(d10, simple_template());
  int a = label_index(d10m, "a"), b = label_index(d10m, "b");
  // Oracle: evaluate a^-1 b a^2 through the table.
  int expected = d10.at(d10.at(d10.inverse[a], b), d10.at(a, a));
  CHECK(expected == label_index(d10m, "a2b"));
  CHECK(op.at(a, b) == expected);
  CHECK(is_latin_square(op.star, 10));
  TemplateSpecialVerdict v = special_wrt(d10, simple_template());
  CHECK(v.special);
  CHECK(v.iss1);
  CHECK(v.iss2);
  CHECK(v.iss3);
  CHECK(v.iss4);
}

TEST_CASE("the commutator-squared word induces [x,y]^2 x y on D10 and Q8") {
  for (const FiniteMonoid& m : {dihedral_group(5), quaternion_group()}) {
    FiniteGroup g = group_of(m);
    InducedOperation op = induced_op(g, commutator_squared_template());
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        int c = commutator(g, x, y);
        CHECK(op.at(x, y) == g.at(g.at(g.at(c, c), x), y));
      }
  }
}

TEST_CASE("D10 is not special for the commutator-squared operation: five candidates") {
  FiniteMonoid d10m = dihedral_group(5);
  FiniteGroup d10 = group_of(d10m);
  InducedOperation op = induced_op(d10, commutator_squared_template());
  TemplateSpecialVerdict v = special_wrt_table(d10, op.star);
  CHECK_FALSE(v.special);
  std::vector<int> cands = q_candidates(d10, op.star, d10m.identity, label_index(d10m, "b"));
  std::vector<int> reflections = {label_index(d10m, "b"), label_index(d10m, "ab"),
                                  label_index(d10m, "a2b"), label_index(d10m, "a3b"),
                                  label_index(d10m, "a4b")};
  CHECK(cands == reflections);
}

TEST_CASE("abelian groups are special for every template with q = x y^-1") {
  FiniteGroup c4 = group_of(cyclic_group(4));
  for (const auto& t : enumerate_templates(4, 2)) {
    TemplateSpecialVerdict v = special_wrt(c4, t);
    REQUIRE(v.special);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        CHECK(v.q[static_cast<size_t>(x) * 4 + y] == c4.at(x, c4.inverse[y]));
  }
}

TEST_CASE("2-Engel classification over the catalogue with agreeing conditions") {
  for (const auto& nm : builtin_monoids()) {
    GroupCheck gc = as_group(nm.monoid);
    if (!gc.ok()) continue;
    CAPTURE(nm.name);
    EngelReport e = is_2engel(*gc.group);
    CHECK(e.verdicts_agree());
    bool expected = nm.name != "S3" && nm.name != "D10";
    CHECK(e.is_2engel() == expected);
  }
}

TEST_CASE("D10 witness pair: the commutator a2 fails to commute with ab") {
  FiniteMonoid d10m = dihedral_group(5);
  FiniteGroup d10 = group_of(d10m);
  int a = label_index(d10m, "a"), ab = label_index(d10m, "ab");
  int c = commutator(d10, a, ab);
  CHECK(c == label_index(d10m, "a2"));
  CHECK(d10.at(c, ab) == label_index(d10m, "a3b"));
  CHECK(d10.at(ab, c) == label_index(d10m, "a4b"));
  CHECK(d10.at(c, ab) != d10.at(ab, c));
}

TEST_CASE("binary commutators distribute inside two-generated subgroups of 2-Engel groups") {
  for (const FiniteMonoid& m : {quaternion_group(), dihedral_group(4)}) {
    FiniteGroup g = group_of(m);
    REQUIRE(is_2engel(g).is_2engel());
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        Submonoid h = generated_submonoid(m, {x, y});
        for (int ap : h.elements)
          for (int bp : h.elements) {
            CHECK(commutator(g, g.inverse[ap], bp) == g.inverse[commutator(g, ap, bp)]);
            for (int cp : h.elements) {
              CHECK(commutator(g, commutator(g, ap, bp), cp) == g.identity());
              CHECK(commutator(g, g.at(ap, bp), cp) ==
                    g.at(commutator(g, bp, cp), commutator(g, ap, cp)));
            }
          }
      }
  }
}

TEST_CASE("engel star coefficient: abelian zero, Q8 matches the brute-force oracle") {
  FiniteGroup c6 = group_of(cyclic_group(6));
  StarCoefficient sc6 = engel_star_coefficient(c6, simple_template());
  CHECK(sc6.found);
  CHECK(sc6.k == 0);

  FiniteGroup q8 = group_of(quaternion_group());
  InducedOperation op = induced_op(q8, simple_template());
  // Oracle: scan k = 0..exponent-1 for a uniform match, independently.
  long long oracle_k = -1;
  for (long long k = 0; k < exponent(q8) && oracle_k < 0; ++k) {
    bool all = true;
    for (int x = 0; x < 8 && all; ++x)
      for (int y = 0; y < 8 && all; ++y)
        if (q8.at(pow_group(q8, commutator(q8, x, y), k), q8.at(x, y)) != op.at(x, y))
          all = false;
    if (all) oracle_k = k;
  }
  REQUIRE(oracle_k >= 0);
  StarCoefficient sc = engel_star_coefficient(q8, simple_template());
  CHECK(sc.found);
  CHECK(sc.k == oracle_k);
}

TEST_CASE("D10 has no uniform star coefficient for the simple template") {
  FiniteGroup d10 = group_of(dihedral_group(5));
  StarCoefficient sc = engel_star_coefficient(d10, simple_template());
  CHECK_FALSE(sc.found);
  CHECK(sc.witness.first >= 0);
}

TEST_CASE("template sweeps: complete cover for 2-Engel groups, honest labels otherwise") {
  FiniteGroup q8 = group_of(quaternion_group());
  TemplateSweep sq8 = special_for_all_templates(q8, 4, 2);
  CHECK(sq8.group_is_2engel);
  CHECK(sq8.complete_cover);
  CHECK(sq8.all_bounded_special);
  CHECK(sq8.all_k_special);
  CHECK(sq8.k_cases.size() == 2);   // commutator subgroup {1,-1}

  FiniteGroup d10 = group_of(dihedral_group(5));
  TemplateSweep sd10 = special_for_all_templates(d10, 6, 3);
  CHECK_FALSE(sd10.group_is_2engel);
  CHECK_FALSE(sd10.complete_cover);
  CHECK_FALSE(sd10.all_bounded_special);
  bool simple_ok = false;
  for (const auto& [t, special] : sd10.bounded)
    if (t == simple_template()) simple_ok = special;
  CHECK(simple_ok);
  // The ten-syllable [x,y]^2xy word sits outside the default bounds; its
  // failure is checked directly.
  CHECK_FALSE(special_wrt(d10, commutator_squared_template()).special);

  FiniteGroup c2 = group_of(cyclic_group(2));
  TemplateSweep sc2 = special_for_all_templates(c2, 4, 2);
  CHECK(sc2.all_bounded_special);
  CHECK(sc2.complete_cover);
}

TEST_CASE("engel star coefficient succeeds for every enumerated template on Q8") {
  FiniteGroup q8 = group_of(quaternion_group());
  for (const auto& t : enumerate_templates(4, 2)) {
    StarCoefficient sc = engel_star_coefficient(q8, t);
    CAPTURE(format_template(t));
    CHECK(sc.found);
  }
}

TEST_CASE("simple-template subtraction identity is equivalent to 2-Engel") {
  for (const auto& nm : builtin_monoids()) {
    GroupCheck gc = as_group(nm.monoid);
    if (!gc.ok()) continue;
    CAPTURE(nm.name);
    SimpleTemplateEquivalence eq = simple_t_engel_equivalence(*gc.group);
    CHECK(eq.equivalent());
    if (nm.name == "Q8") {
      CHECK(eq.two_engel);
      CHECK(eq.subtraction_identity);
    }
    if (nm.name == "D10") {
      CHECK_FALSE(eq.two_engel);
      CHECK_FALSE(eq.subtraction_identity);
      CHECK(eq.witness.first >= 0);
    }
  }
}

TEST_CASE("counterexample search reproduces the D10 findings") {
  std::vector<NamedGroup> groups;
  for (const auto& nm : builtin_monoids()) {
    if (nm.name == "S3" || nm.name == "D8" || nm.name == "D10" || nm.name == "Q8" ||
        nm.name == "C2xC4")
      groups.push_back({nm.name, group_of(nm.monoid)});
  }
  auto templates = enumerate_templates(4, 3);
  auto findings = search_counterexamples(groups, templates);
  CHECK(findings.size() == groups.size() * templates.size());
  CHECK(std::is_sorted(findings.begin(), findings.end(),
                       [](const Finding& a, const Finding& b) {
                         return std::tie(a.group, a.tmpl.word) < std::tie(b.group, b.tmpl.word);
                       }));
  bool d10_simple = false, d10_failure = false;
  for (const auto& f : findings) {
    if (f.group == "D8" || f.group == "Q8" || f.group == "C2xC4") CHECK(f.special);
    if (f.group == "D10" && f.tmpl == simple_template()) d10_simple = f.special;
    if (f.group == "D10" && !f.special) {
      d10_failure = true;
      CHECK(f.witness_y >= 0);
    }
  }
  CHECK(d10_simple);
  CHECK(d10_failure);
  CHECK(search_counterexamples({}, templates).empty());
}
