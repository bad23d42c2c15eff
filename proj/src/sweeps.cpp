#include "finalg/sweeps.hpp"

#include <algorithm>

namespace finalg {

SplitExtension product_projection(const FiniteMonoid& k, const FiniteMonoid& y) {
  Product p = product(k, y);
  MonoidHom section = p.pair_into(trivial_hom(y, k), identity_hom(y));
  return make_extension(p.p2, std::move(section));
}

SplitExtension extension_product(const SplitExtension& a, const SplitExtension& b) {
  Product px = product(a.X(), b.X());
  Product py = product(a.Y(), b.Y());
  MonoidHom f = py.pair_into(compose(a.point.f, px.p1), compose(b.point.f, px.p2));
  MonoidHom s = px.pair_into(compose(a.point.s, py.p1), compose(b.point.s, py.p2));
  return make_extension(std::move(f), std::move(s));
}

std::vector<NamedExtension> product_projection_extensions(int max_middle) {
  std::vector<NamedExtension> out;
  auto monoids = builtin_monoids();
  for (const auto& k : monoids)
    for (const auto& y : monoids) {
      if (k.monoid.size * y.monoid.size > max_middle) continue;
      if (k.monoid.size == 1 && y.monoid.size == 1) continue;
      out.push_back({"prod:" + k.name + "*" + y.name, product_projection(k.monoid, y.monoid)});
    }
  return out;
}

MonoidHom sign_hom() {
  FiniteMonoid s3 = symmetric3();
  FiniteMonoid c2 = cyclic_group(2);
  // Transpositions map to 1, even permutations to 0.
  return hom(s3, c2, {0, 1, 1, 1, 0, 0});
}

SplitExtension sign_extension() {
  MonoidHom f = sign_hom();
  MonoidHom s = hom(f.codomain, f.domain, {0, 1});   // 1 -> (12)
  return make_extension(std::move(f), std::move(s));
}

std::vector<NamedExtension> group_point_extensions() {
  std::vector<NamedExtension> out;
  out.push_back({"point:sign:S3->C2", sign_extension()});

  FiniteMonoid c2 = cyclic_group(2);
  // Dihedral groups onto C2 by the reflection bit, section b.
  for (int n : {4, 5}) {
    FiniteMonoid d = dihedral_group(n);
    std::vector<int> fm(d.size);
    for (int i = 0; i < d.size; ++i) fm[i] = i < n ? 0 : 1;
    MonoidHom f = hom(d, c2, std::move(fm));
    MonoidHom s = hom(c2, d, {0, n});
    out.push_back({"point:refl:D" + std::to_string(2 * n) + "->C2",
                   make_extension(std::move(f), std::move(s))});
  }
  // D8 onto C2 by rotation parity, section ab.
  {
    FiniteMonoid d = dihedral_group(4);
    std::vector<int> fm(d.size);
    for (int i = 0; i < d.size; ++i) fm[i] = i % 4 % 2;
    MonoidHom f = hom(d, c2, std::move(fm));
    MonoidHom s = hom(c2, d, {0, 4 + 1});
    out.push_back({"point:rot:D8->C2", make_extension(std::move(f), std::move(s))});
  }
  // Identity and terminal points over a few groups.
  for (const auto& nm : builtin_monoids()) {
    if (nm.monoid.size > 10) continue;
    out.push_back({"point:id:" + nm.name,
                   make_extension(identity_hom(nm.monoid), identity_hom(nm.monoid))});
    FiniteMonoid one = cyclic_group(1);
    out.push_back({"point:terminal:" + nm.name,
                   make_extension(trivial_hom(nm.monoid, one), trivial_hom(one, nm.monoid))});
  }
  return out;
}

std::vector<NamedExtension> schreier_catalogue(int max_middle) {
  std::vector<NamedExtension> out = product_projection_extensions(max_middle);
  auto points = group_point_extensions();
  out.insert(out.end(), points.begin(), points.end());

  // Pullbacks of a few base instances along catalogue homs into their bases.
  auto homs = hom_catalogue();
  std::vector<NamedExtension> pulled;
  int budget = 24;
  for (const auto& ne : out) {
    if (budget == 0) break;
    for (const auto& nh : homs) {
      if (!same_structure(nh.h.codomain, ne.ext.Y())) continue;
      if (nh.h.domain.size * ne.ext.X().size > 4 * max_middle) continue;
      pulled.push_back({"pull:" + ne.name + ":" + nh.name, pullback_point(ne.ext, nh.h)});
      if (--budget == 0) break;
    }
  }
  out.insert(out.end(), pulled.begin(), pulled.end());
  std::sort(out.begin(), out.end(),
            [](const NamedExtension& a, const NamedExtension& b) { return a.name < b.name; });
  return out;
}

std::vector<NamedExtension> non_schreier_catalogue() {
  std::vector<NamedExtension> out;
  FiniteMonoid sl = semilattice2();
  Product slsl = product(sl, sl);
  SplitExtension base = make_extension(slsl.p2, diagonal(slsl));
  out.push_back({"nons:sl2-diag", base});
  for (int n : {3, 4}) {
    FiniteMonoid chain = chain_semilattice(n);
    Product cc = product(chain, chain);
    out.push_back({"nons:chain" + std::to_string(n) + "-diag",
                   make_extension(cc.p2, diagonal(cc))});
  }
  // Products of the failing semilattice point with small Schreier points.
  std::vector<std::pair<std::string, FiniteMonoid>> factors = {
      {"C1", cyclic_group(1)}, {"C2", cyclic_group(2)}, {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)}, {"S3", symmetric3()},    {"C2xC2", product(cyclic_group(2), cyclic_group(2)).object},
      {"C5", cyclic_group(5)}, {"C6", cyclic_group(6)}, {"D8", dihedral_group(4)},
  };
  for (const auto& [name, m] : factors) {
    if (base.X().size * m.size * m.size > 72) continue;
    SplitExtension proj = product_projection(m, m);
    out.push_back({"nons:sl2-diag*prod:" + name, extension_product(base, proj)});
    out.push_back({"nons:sl2-diag*id:" + name,
                   extension_product(base, make_extension(identity_hom(m), identity_hom(m)))});
  }
  std::sort(out.begin(), out.end(),
            [](const NamedExtension& a, const NamedExtension& b) { return a.name < b.name; });
  return out;
}

std::vector<NamedHom> hom_catalogue(int max_size, int per_pair) {
  std::vector<NamedHom> out;
  auto monoids = builtin_monoids();
  for (const auto& a : monoids) {
    if (a.monoid.size > max_size) continue;
    for (const auto& b : monoids) {
      if (b.monoid.size > max_size) continue;
      if (a.monoid.size > 6 && b.monoid.size > 6 && a.name != b.name) continue;
      auto homs = all_homs(a.monoid, b.monoid, per_pair);
      for (size_t i = 0; i < homs.size(); ++i)
        out.push_back(
            {a.name + "->" + b.name + "#" + std::to_string(i), std::move(homs[i])});
    }
  }
  // The sign hom is a canonical surjective member.
  out.push_back({"S3->C2#sign", sign_hom()});
  return out;
}

std::vector<NamedMorphism> morphism_catalogue() {
  std::vector<NamedMorphism> out;

  auto identity_morphism = [](const std::string& name, const SplitExtension& e) {
    std::vector<int> gamma(e.K.size()), g(e.X().size), h(e.Y().size);
    for (int i = 0; i < e.K.size(); ++i) gamma[i] = i;
    for (int i = 0; i < e.X().size; ++i) g[i] = i;
    for (int i = 0; i < e.Y().size; ++i) h[i] = i;
    return NamedMorphism{"morph:id:" + name,
                         make_extension_morphism(e, e, gamma, g, h)};
  };

  for (const auto& ne : group_point_extensions())
    out.push_back(identity_morphism(ne.name, ne.ext));

  // Functorial morphisms between product projections: (u, v) acts
  // componentwise on K' x Y' -> K x Y.
  struct PairSpec {
    std::string name;
    MonoidHom u, v;
  };
  FiniteMonoid c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3),
               c4 = cyclic_group(4), c6 = cyclic_group(6);
  std::vector<PairSpec> specs;
  specs.push_back({"C2c4xC3c6", hom(c2, c4, {0, 2}), hom(c3, c6, {0, 2, 4})});
  specs.push_back({"C4qC2xC2id", hom(c4, c2, {0, 1, 0, 1}), identity_hom(c2)});
  specs.push_back({"C1inC3xC2id", trivial_hom(c1, c3), identity_hom(c2)});
  specs.push_back({"C6qC3xC6qC2", hom(c6, c3, {0, 1, 2, 0, 1, 2}), hom(c6, c2, {0, 1, 0, 1, 0, 1})});
  specs.push_back({"S3signxC3id", sign_hom(), identity_hom(c3)});
  specs.push_back({"C2inC4xC1inC2", hom(c2, c4, {0, 2}), trivial_hom(c1, c2)});

  for (const auto& sp : specs) {
    SplitExtension from = product_projection(sp.u.domain, sp.v.domain);
    SplitExtension to = product_projection(sp.u.codomain, sp.v.codomain);
    const int ny_from = sp.v.domain.size;
    std::vector<int> g(from.X().size);
    for (int i = 0; i < sp.u.domain.size; ++i)
      for (int j = 0; j < ny_from; ++j)
        g[i * ny_from + j] = sp.u.map[i] * sp.v.codomain.size + sp.v.map[j];
    // Kernel elements are (a, 1); gamma follows u.
    std::vector<int> gamma(from.K.size());
    for (int a = 0; a < from.K.size(); ++a) {
      int parent = from.K.elements[a];
      int k_from = parent / ny_from;
      gamma[a] = to.K.local_of(sp.u.map[k_from] * sp.v.codomain.size + sp.v.codomain.identity);
    }
    out.push_back({"morph:prod:" + sp.name,
                   make_extension_morphism(from, to, gamma, g, sp.v.map)});
  }

  // Quotient morphism: sign extension onto the identity point of C2.
  {
    SplitExtension from = sign_extension();
    SplitExtension to = make_extension(identity_hom(c2), identity_hom(c2));
    std::vector<int> gamma(from.K.size(), 0);
    std::vector<int> g = sign_hom().map;
    std::vector<int> h = {0, 1};
    out.push_back({"morph:quot:sign", make_extension_morphism(from, to, gamma, g, h)});
  }

  // Injective morphism: identity point of C2 into the product point over C2.
  {
    SplitExtension from = make_extension(identity_hom(c2), identity_hom(c2));
    SplitExtension to = product_projection(c2, c2);
    std::vector<int> gamma = {to.K.local_of(0)};
    std::vector<int> g = {0, 1};   // y -> (1, y)
    std::vector<int> h = {0, 1};
    out.push_back({"morph:mono:C2", make_extension_morphism(from, to, gamma, g, h)});
  }

  std::sort(out.begin(), out.end(),
            [](const NamedMorphism& a, const NamedMorphism& b) { return a.name < b.name; });
  return out;
}

}  // namespace finalg
