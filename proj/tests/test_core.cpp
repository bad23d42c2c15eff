#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finalg/catalogue.hpp"
#include "finalg/core.hpp"
#include "finalg/presentation.hpp"

using namespace finalg;

namespace {

// Independent oracle: scan all triples for an associativity failure.
bool associative_by_scan(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rows[rows[i][j]][k] != rows[i][rows[j][k]]) return false;
  return true;
}

// Independent oracle: every left and right translation is a bijection.
bool translations_bijective(const FiniteMonoid& m) {
  for (int a = 0; a < m.size; ++a) {
    std::vector<int> lhit(m.size, 0), rhit(m.size, 0);
    for (int x = 0; x < m.size; ++x) {
      ++lhit[m.at(a, x)];
      ++rhit[m.at(x, a)];
    }
    for (int v = 0; v < m.size; ++v)
      if (lhit[v] != 1 || rhit[v] != 1) return false;
  }
  return true;
}

int label_index(const FiniteMonoid& m, const std::string& label) {
  for (int i = 0; i < m.size; ++i)
    if (m.labels[i] == label) return i;
  return -1;
}

}  // namespace

TEST_CASE("validate accepts the trivial monoid and the two-element semilattice") {
  FiniteMonoid one = validate_monoid({{0}}, 0);
  CHECK(one.size == 1);
  FiniteMonoid sl = validate_monoid({{0, 1}, {1, 1}}, 0);
  CHECK(sl.at(1, 1) == 1);
}

TEST_CASE("every two-element magma with an identity is associative") {
  // The only free entry is a*a, and both completions are associative, so the
  // smallest NotAssociative witness needs three elements.
  for (int aa : {0, 1}) {
    std::vector<std::vector<int>> rows = {{0, 1}, {1, aa}};
    CHECK(associative_by_scan(rows));
    CHECK_NOTHROW(validate_monoid(rows, 0));
  }
}

TEST_CASE("validate rejects a non-associative three-element table with a witness") {
  std::vector<std::vector<int>> rows = {{0, 1, 2}, {1, 2, 2}, {2, 1, 1}};
  REQUIRE_FALSE(associative_by_scan(rows));
  try {
    validate_monoid(rows, 0);
    FAIL("expected NotAssociativeError");
  } catch (const NotAssociativeError& e) {
    CHECK(rows[rows[e.i][e.j]][e.k] != rows[e.i][rows[e.j][e.k]]);
  }
}

TEST_CASE("validate rejects identity violations and malformed tables") {
  CHECK_THROWS_AS(validate_monoid({{1, 1}, {1, 1}}, 0), NoIdentityError);
  CHECK_THROWS_AS(validate_monoid({{0, 1}, {1, 5}}, 0), BadTableError);
  CHECK_THROWS_AS(validate_monoid({{0, 1}}, 0), BadTableError);
  CHECK_THROWS_AS(validate_monoid({{0, 1}, {1, 0}}, 7), BadTableError);
}

TEST_CASE("as_group on C2, the semilattice, and D10 from its presentation") {
  CHECK(as_group(cyclic_group(2)).ok());

  GroupCheck sl = as_group(semilattice2());
  CHECK_FALSE(sl.ok());
  CHECK(sl.non_invertible == 1);   // the idempotent a

  Presentation p{{"a", "b"}, {parse_relator("a^5", {"a", "b"}), parse_relator("b^2", {"a", "b"}),
                              parse_relator("abab", {"a", "b"})}};
  FiniteMonoid d10 = group_from_presentation(p);
  CHECK(d10.size == 10);
  GroupCheck gc = as_group(d10);
  REQUIRE(gc.ok());
  CHECK_FALSE(is_abelian(d10));
  bool has5 = false, has2 = false;
  for (int x = 0; x < 10; ++x) {
    int o = element_order(*gc.group, x);
    has5 |= o == 5;
    has2 |= o == 2;
  }
  CHECK(has5);
  CHECK(has2);
}

TEST_CASE("as_group agrees with the translation-bijectivity oracle on the catalogue") {
  for (const auto& nm : builtin_monoids())
    CHECK(as_group(nm.monoid).ok() == translations_bijective(nm.monoid));
  CHECK_FALSE(translations_bijective(chain_semilattice(3)));
  CHECK_FALSE(as_group(flat3_monoid()).ok());
}

TEST_CASE("hom validation catches identity and multiplicativity failures") {
  FiniteMonoid c2 = cyclic_group(2), c4 = cyclic_group(4);
  CHECK_NOTHROW(hom(c2, c4, {0, 2}));
  CHECK_THROWS_AS(hom(c2, c4, {0, 1}), NotAHomError);   // 1+1 -> 2 != 0
  CHECK_THROWS_AS(hom(c2, c4, {1, 0}), NotAHomError);   // identity not preserved
  CHECK_THROWS_AS(hom(c2, c4, {0}), NotAHomError);      // partial map rejected
}

TEST_CASE("kernel of the identity hom is trivial") {
  FiniteMonoid s3 = symmetric3();
  Submonoid k = kernel(identity_hom(s3));
  CHECK(k.elements == std::vector<int>{s3.identity});
}

TEST_CASE("kernel of the sign hom is A3, matching the preimage oracle") {
  FiniteMonoid s3 = symmetric3();
  FiniteMonoid c2 = cyclic_group(2);
  MonoidHom sign = hom(s3, c2, {0, 1, 1, 1, 0, 0});

  std::vector<int> preimage;   // oracle: enumerate f^-1(identity)
  for (int x = 0; x < s3.size; ++x)
    if (sign.map[x] == c2.identity) preimage.push_back(x);
  REQUIRE(preimage.size() == 3);

  Submonoid k = kernel(sign);
  CHECK(k.elements == preimage);
  CHECK(k.elements == std::vector<int>{label_index(s3, "e"), label_index(s3, "(123)"),
                                       label_index(s3, "(132)")});
  FiniteMonoid a3 = k.monoid();
  CHECK(a3.size == 3);
  CHECK(as_group(a3).ok());
  // Inclusion is a hom landing on the original elements.
  MonoidHom inc = k.inclusion();
  for (int a = 0; a < 3; ++a) CHECK(inc.map[a] == k.elements[a]);
}

TEST_CASE("generated submonoid: empty set, abelian commutators, S3 commutator") {
  FiniteMonoid s3 = symmetric3();
  CHECK(generated_submonoid(s3, {}).elements == std::vector<int>{0});

  FiniteGroup c6 = as_group(cyclic_group(6)).group.value();
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(commutator(c6, x, y) == c6.identity());

  FiniteGroup g3 = as_group(s3).group.value();
  int c = commutator(g3, label_index(s3, "(12)"), label_index(s3, "(13)"));
  CHECK(c == label_index(s3, "(123)"));
  CHECK(element_order(g3, c) == 3);
  CHECK(generated_submonoid(s3, {c}).size() == 3);
}

TEST_CASE("conjugation and powers in Q8") {
  FiniteMonoid q8m = quaternion_group();
  FiniteGroup q8 = as_group(q8m).group.value();
  int i = label_index(q8m, "i"), j = label_index(q8m, "j"), mi = label_index(q8m, "-i");
  CHECK(conjugate(q8, j, i) == mi);                   // j i j^-1 = -i
  CHECK(pow_group(q8, i, 2) == label_index(q8m, "-1"));
  CHECK(pow_group(q8, i, -1) == mi);
  CHECK(element_order(q8, i) == 4);
  CHECK(element_order(q8, label_index(q8m, "-1")) == 2);
  CHECK(exponent(q8) == 4);
}

TEST_CASE("submonoid closure is enforced") {
  FiniteMonoid c4 = cyclic_group(4);
  Submonoid bad{c4, {0, 1}};   // 1+1 = 2 escapes
  CHECK_THROWS_AS(bad.monoid(), BadTableError);
  Submonoid good = generated_submonoid(c4, {2});
  CHECK(good.elements == std::vector<int>{0, 2});
  CHECK(as_group(good.monoid()).ok());
}
