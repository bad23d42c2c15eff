#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finalg/catalogue.hpp"
#include "finalg/schreier.hpp"
#include "finalg/special.hpp"
#include "finalg/sweeps.hpp"

using namespace finalg;

namespace {

// Independent decomposition oracle: counts a in K with x = k(a) * s(f(x)).
std::vector<int> decomposition_counts(const SplitExtension& e) {
  std::vector<int> counts(e.X().size, 0);
  for (int x = 0; x < e.X().size; ++x) {
    int sfx = e.point.s.map[e.point.f.map[x]];
    for (int a : e.K.elements)
      if (e.X().at(a, sfx) == x) ++counts[x];
  }
  return counts;
}

int label_index(const FiniteMonoid& m, const std::string& label) {
  for (int i = 0; i < m.size; ++i)
    if (m.labels[i] == label) return i;
  return -1;
}

}  // namespace

TEST_CASE("product projection decomposes uniquely with q the kernel projection") {
  FiniteMonoid c3 = cyclic_group(3), c2 = cyclic_group(2);
  SplitExtension e = product_projection(c3, c2);
  SchreierAnalysis a = analyze(e);
  CHECK(a.is_schreier);
  CHECK(a.is_left_homogeneous);
  CHECK(a.properties.all());
  // q recovers the first component.
  for (int k = 0; k < 3; ++k)
    for (int y = 0; y < 2; ++y) {
      int pair = k * 2 + y;
      CHECK(e.K.elements[a.q[pair]] == k * 2 + 0);
    }
}

TEST_CASE("points with a group as middle object are Schreier") {
  SplitExtension sign = sign_extension();
  SchreierAnalysis a = analyze(sign);
  CHECK(a.is_schreier);
  CHECK(a.properties.all());
  // Desk formula: the kernel part is x * (sf(x))^-1.
  FiniteGroup s3 = as_group(sign.X()).group.value();
  for (int x = 0; x < 6; ++x) {
    int sfx = sign.point.s.map[sign.point.f.map[x]];
    CHECK(sign.K.elements[a.q[x]] == s3.at(x, s3.inverse[sfx]));
  }
}

TEST_CASE("the semilattice diagonal point is not Schreier: multiplicity witness") {
  FiniteMonoid sl = semilattice2();
  SplitExtension e = special_point(sl);
  std::vector<int> oracle = decomposition_counts(e);

  SchreierAnalysis a = analyze(e);
  CHECK(a.multiplicity == oracle);
  CHECK_FALSE(a.is_schreier);
  CHECK_FALSE(a.is_left_homogeneous);

  // (a,a) decomposes through both kernel elements; (1,a) through none.
  int aa = 1 * sl.size + 1, one_a = 0 * sl.size + 1;
  CHECK(a.multiplicity[aa] == 2);
  CHECK(a.multiplicity[one_a] == 0);
  int u_count = 0;
  for (int u : e.K.elements)
    if (e.X().at(u, e.point.s.map[1]) == aa) ++u_count;
  CHECK(u_count == 2);
}

TEST_CASE("D10 diagonal point: q is x * y^-1 and all properties hold") {
  FiniteMonoid d10m = dihedral_group(5);
  FiniteGroup d10 = as_group(d10m).group.value();
  SplitExtension e = special_point(d10m);
  SchreierAnalysis a = analyze(e);
  REQUIRE(a.is_schreier);
  CHECK(a.properties.all());
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) {
      int pair = x * 10 + y;
      int expected = d10.at(x, d10.inverse[y]);   // kernel element (x y^-1, 1)
      CHECK(e.K.elements[a.q[pair]] == expected * 10 + 0);
    }
}

TEST_CASE("verify_properties matches the analyze report on the sign extension") {
  SplitExtension e = sign_extension();
  SchreierAnalysis a = analyze(e);
  PropertyReport r = verify_properties(e, a.q);
  CHECK(r.all());
}

TEST_CASE("Schreier implies strong across the generated catalogue") {
  for (const auto& ne : schreier_catalogue(36)) {
    CAPTURE(ne.name);
    CHECK(analyze(ne.ext).is_schreier);
    CHECK(is_strong(ne.ext.point));
  }
}

TEST_CASE("a point whose middle object has an unreachable element is not strong") {
  FiniteMonoid flat = flat3_monoid();
  FiniteMonoid sl = semilattice2();
  MonoidHom f = hom(flat, sl, {0, 1, 1});
  MonoidHom s = hom(sl, flat, {0, 1});
  Point p = make_point(f, s);
  CHECK_FALSE(is_strong(p));
  // Oracle: the closure of im k and im s misses b.
  Submonoid k = kernel(f);
  std::vector<int> gens = k.elements;
  gens.insert(gens.end(), s.map.begin(), s.map.end());
  CHECK(generated_submonoid(flat, gens).size() == 2);
  SchreierAnalysis a = analyze(make_extension(f, s));
  CHECK_FALSE(a.is_schreier);
}

TEST_CASE("pullback along the identity preserves the analysis") {
  SplitExtension e = sign_extension();
  SplitExtension pulled = pullback_point(e, identity_hom(e.Y()));
  CHECK(pulled.X().size == e.X().size);
  CHECK(analyze(pulled).is_schreier == analyze(e).is_schreier);
}

TEST_CASE("pullbacks of Schreier extensions along catalogue homs stay Schreier") {
  auto homs = hom_catalogue(6, 6);
  int checked = 0;
  for (const auto& ne : {NamedExtension{"sign", sign_extension()},
                         NamedExtension{"prod", product_projection(cyclic_group(3),
                                                                   cyclic_group(2))}}) {
    for (const auto& nh : homs) {
      if (!same_structure(nh.h.codomain, ne.ext.Y())) continue;
      CAPTURE(ne.name);
      CAPTURE(nh.name);
      CHECK(analyze(pullback_point(ne.ext, nh.h)).is_schreier);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("pulling the semilattice point back along the trivial algebra is Schreier") {
  SplitExtension e = special_point(semilattice2());
  REQUIRE_FALSE(analyze(e).is_schreier);
  MonoidHom g = trivial_hom(cyclic_group(1), e.Y());
  SplitExtension pulled = pullback_point(e, g);
  CHECK(pulled.Y().size == 1);
  CHECK(analyze(pulled).is_schreier);
}

TEST_CASE("composing product projections gives the product projection") {
  FiniteMonoid k = cyclic_group(2), l = cyclic_group(3), z = cyclic_group(4);
  Product lz = product(l, z);
  SplitExtension inner = product_projection(k, lz.object);   // K x (L x Z) -> L x Z
  SplitExtension outer = product_projection(l, z);           // L x Z -> Z
  SplitExtension composite = compose_points(inner, outer);
  CHECK(composite.Y().size == z.size);
  CHECK(composite.K.size() == k.size * l.size);
  SchreierAnalysis a = analyze(composite);
  CHECK(a.is_schreier);
  CHECK(a.properties.all());
}

TEST_CASE("composites of Schreier points over group data are Schreier") {
  SplitExtension inner = sign_extension();                    // S3 -> C2
  SplitExtension outer = make_extension(trivial_hom(cyclic_group(2), cyclic_group(1)),
                                        trivial_hom(cyclic_group(1), cyclic_group(2)));
  SplitExtension composite = compose_points(inner, outer);
  CHECK(analyze(composite).is_schreier);
}

TEST_CASE("(gf, st) Schreier implies (g, t) Schreier on generated composable pairs") {
  std::vector<std::pair<SplitExtension, SplitExtension>> pairs;
  FiniteMonoid c2 = cyclic_group(2), c3 = cyclic_group(3), one = cyclic_group(1);
  pairs.emplace_back(product_projection(c3, c2),
                     make_extension(trivial_hom(c2, one), trivial_hom(one, c2)));
  pairs.emplace_back(sign_extension(),
                     make_extension(identity_hom(c2), identity_hom(c2)));
  pairs.emplace_back(product_projection(c2, product(c3, c2).object),
                     product_projection(c3, c2));
  for (const auto& [inner, outer] : pairs) {
    SplitExtension composite = compose_points(inner, outer);
    if (analyze(composite).is_schreier) CHECK(analyze(outer).is_schreier);
  }
}

TEST_CASE("extension morphism validation rejects non-commuting squares") {
  SplitExtension e = product_projection(cyclic_group(2), cyclic_group(2));
  std::vector<int> id4 = {0, 1, 2, 3};
  std::vector<int> gamma = {0, 1};
  CHECK_NOTHROW(make_extension_morphism(e, e, gamma, id4, {0, 1}));
  CHECK_THROWS_AS(make_extension_morphism(e, e, gamma, id4, {0, 0}), NotAHomError);
}

TEST_CASE("split short five implications hold on the morphism catalogue") {
  auto morphisms = morphism_catalogue();
  CHECK(morphisms.size() >= 20);
  bool saw_epi = false, saw_mono = false;
  for (const auto& nm : morphisms) {
    CAPTURE(nm.name);
    SsflReport r = ssfl_check(nm.m);
    CHECK(r.rows_schreier);
    CHECK(r.all_ok());
    CHECK(r.certificate.empty());
    saw_epi |= r.g_surjective && !r.g_injective;
    saw_mono |= r.g_injective && !r.g_surjective;
  }
  CHECK(saw_epi);
  CHECK(saw_mono);
}

TEST_CASE("quotient morphism from the sign extension is surjective on all layers") {
  auto morphisms = morphism_catalogue();
  bool found = false;
  for (const auto& nm : morphisms) {
    if (nm.name != "morph:quot:sign") continue;
    found = true;
    SsflReport r = ssfl_check(nm.m);
    CHECK(r.g_surjective);
    CHECK(r.gamma_surjective);
    CHECK(r.h_surjective);
    CHECK_FALSE(r.g_injective);
  }
  CHECK(found);
}

TEST_CASE("Schreier special morphisms: surjective group homs and the identity") {
  CHECK(is_schreier_special_morphism(sign_hom()));
  CHECK(is_schreier_special_morphism(identity_hom(symmetric3())));
  FiniteMonoid d8 = dihedral_group(4);
  std::vector<int> refl(d8.size);
  for (int i = 0; i < d8.size; ++i) refl[i] = i < 4 ? 0 : 1;
  CHECK(is_schreier_special_morphism(hom(d8, cyclic_group(2), refl)));
}

TEST_CASE("the semilattice fold is not a Schreier special morphism") {
  // Coproduct of two copies of the two-element semilattice: 1 > x, y with
  // meet m; the fold sends all three non-units to a.
  FiniteMonoid t = validate_monoid(
      {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}, 0, {"1", "x", "y", "m"});
  FiniteMonoid s = semilattice2();
  MonoidHom fold = hom(t, s, {0, 1, 1, 1});
  CHECK_FALSE(is_schreier_special_morphism(fold));
  // Oracle: the kernel of the first kernel-pair projection is trivial, so
  // only diagonal pairs can decompose; Eq(fold) is strictly larger.
  KernelPair kp = kernel_pair(fold);
  CHECK(kp.eq.object.size == 10);
  Submonoid k = kernel(kp.f1());
  CHECK(k.size() == 1);
}

TEST_CASE("non-Schreier catalogue instances all carry a multiplicity witness") {
  auto bad = non_schreier_catalogue();
  CHECK(bad.size() >= 10);
  for (const auto& ne : bad) {
    CAPTURE(ne.name);
    SchreierAnalysis a = analyze(ne.ext);
    CHECK_FALSE(a.is_schreier);
    int w = a.multiplicity_witness();
    REQUIRE(w >= 0);
    CHECK(a.multiplicity[w] == decomposition_counts(ne.ext)[w]);
  }
}

TEST_CASE("catalogue extension analyses agree with the decomposition oracle") {
  for (const auto& ne : schreier_catalogue(25)) {
    CAPTURE(ne.name);
    SchreierAnalysis a = analyze(ne.ext);
    CHECK(a.multiplicity == decomposition_counts(ne.ext));
  }
}

TEST_CASE("uniqueness: the Schreier retraction is pinned by the multiplicity count") {
  SplitExtension e = sign_extension();
  SchreierAnalysis a = analyze(e);
  // Any q' satisfying S1 must agree with q: scan all kernel choices.
  for (int x = 0; x < e.X().size; ++x) {
    int sfx = e.point.s.map[e.point.f.map[x]];
    for (int b = 0; b < e.K.size(); ++b)
      if (e.X().at(e.K.elements[b], sfx) == x) CHECK(b == a.q[x]);
  }
}

TEST_CASE("labels survive into D10 witnesses") {
  FiniteMonoid d10 = dihedral_group(5);
  CHECK(label_index(d10, "a2b") == 7);
  CHECK(d10.label(0) == "1");
}
