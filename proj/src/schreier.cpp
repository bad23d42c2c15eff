#include "finalg/schreier.hpp"

namespace finalg {

Point make_point(MonoidHom f, MonoidHom s) {
  if (!same_structure(f.domain, s.codomain) || !same_structure(f.codomain, s.domain))
    throw NotAHomError("point: f and s do not match", -1, -1);
  for (int y = 0; y < f.codomain.size; ++y)
    if (f.map[s.map[y]] != y)
      throw NotAHomError("point: f(s(y)) != y at y=" + std::to_string(y), y, y);
  return Point{std::move(f), std::move(s)};
}

SplitExtension make_extension(MonoidHom f, MonoidHom s) {
  Point p = make_point(std::move(f), std::move(s));
  Submonoid K = kernel(p.f);
  MonoidHom k = K.inclusion();
  return SplitExtension{std::move(p), std::move(K), std::move(k)};
}

int SchreierAnalysis::multiplicity_witness() const {
  for (size_t x = 0; x < multiplicity.size(); ++x)
    if (multiplicity[x] != 1) return static_cast<int>(x);
  return -1;
}

SchreierAnalysis analyze(const SplitExtension& ext) {
  const FiniteMonoid& X = ext.X();
  const MonoidHom& f = ext.point.f;
  const MonoidHom& s = ext.point.s;
  const auto& kelems = ext.K.elements;
  const int nk = ext.K.size();

  SchreierAnalysis out;
  out.multiplicity.assign(X.size, 0);
  out.q.assign(X.size, -1);
  std::vector<int> left_count(X.size, 0);

  for (int x = 0; x < X.size; ++x) {
    int sfx = s.map[f.map[x]];
    for (int a = 0; a < nk; ++a) {
      if (X.at(kelems[a], sfx) == x) {
        ++out.multiplicity[x];
        out.q[x] = a;
      }
      if (X.at(sfx, kelems[a]) == x) ++left_count[x];
    }
  }
  out.is_schreier = true;
  for (int c : out.multiplicity)
    if (c != 1) out.is_schreier = false;
  out.is_left_homogeneous = true;
  for (int c : left_count)
    if (c != 1) out.is_left_homogeneous = false;

  if (out.is_schreier) {
    out.properties = verify_properties(ext, out.q);
  } else {
    out.q.clear();
    int w = out.multiplicity_witness();
    out.properties.s1 = PropertyCheck{false, {w}};
    out.properties.s2 = PropertyCheck{false, {w}};
  }
  return out;
}

PropertyReport verify_properties(const SplitExtension& ext, const std::vector<int>& q) {
  const FiniteMonoid& X = ext.X();
  const FiniteMonoid& Y = ext.Y();
  const FiniteMonoid K = ext.K.monoid();
  const auto& kel = ext.K.elements;
  const MonoidHom& f = ext.point.f;
  const MonoidHom& s = ext.point.s;

  PropertyReport r;

  // S1: x = k(q(x)) * s(f(x)).
  for (int x = 0; x < X.size && r.s1.holds; ++x)
    if (X.at(kel[q[x]], s.map[f.map[x]]) != x) r.s1 = {false, {x}};

  // S2: q(k(a) * s(y)) = a.
  for (int a = 0; a < K.size && r.s2.holds; ++a)
    for (int y = 0; y < Y.size; ++y)
      if (q[X.at(kel[a], s.map[y])] != a) {
        r.s2 = {false, {a, y}};
        break;
      }

  // S3: q(k(a)) = a.
  for (int a = 0; a < K.size && r.s3.holds; ++a)
    if (q[kel[a]] != a) r.s3 = {false, {a}};

  // S4: q(s(y)) = 1.
  for (int y = 0; y < Y.size && r.s4.holds; ++y)
    if (q[s.map[y]] != K.identity) r.s4 = {false, {y}};

  // S5: q(1) = 1.
  if (q[X.identity] != K.identity) r.s5 = {false, {X.identity}};

  // S6: k(q(s(y) * k(a))) * s(y) = s(y) * k(a).
  for (int a = 0; a < K.size && r.s6.holds; ++a)
    for (int y = 0; y < Y.size; ++y) {
      int sy_ka = X.at(s.map[y], kel[a]);
      if (X.at(kel[q[sy_ka]], s.map[y]) != sy_ka) {
        r.s6 = {false, {a, y}};
        break;
      }
    }

  // S7: q(x x') = q(x) * q(s(f(x)) * k(q(x'))).
  for (int x = 0; x < X.size && r.s7.holds; ++x)
    for (int xp = 0; xp < X.size; ++xp) {
      int lhs = q[X.at(x, xp)];
      int inner = q[X.at(s.map[f.map[x]], kel[q[xp]])];
      if (lhs != K.at(q[x], inner)) {
        r.s7 = {false, {x, xp}};
        break;
      }
    }

  return r;
}

bool is_strong(const Point& p) {
  const FiniteMonoid& X = p.f.domain;
  Submonoid K = kernel(p.f);
  std::vector<int> gens = K.elements;
  gens.insert(gens.end(), p.s.map.begin(), p.s.map.end());
  return generated_submonoid(X, gens).size() == X.size;
}

SplitExtension pullback_point(const SplitExtension& ext, const MonoidHom& g) {
  if (!same_structure(g.codomain, ext.Y()))
    throw NotAHomError("pullback_point: codomain of g is not the base", -1, -1);
  Pullback pb = pullback(ext.point.f, g);

  // Section <s g, 1> : Z -> P.
  const FiniteMonoid& Z = g.domain;
  std::vector<int> smap(Z.size);
  for (int z = 0; z < Z.size; ++z) {
    int p = pb.index_of(ext.point.s.map[g.map[z]], z);
    if (p < 0) throw NotAHomError("pullback_point: section misses the pullback", z, z);
    smap[z] = p;
  }
  SplitExtension out =
      make_extension(pb.p2, MonoidHom{Z, pb.object, std::move(smap)});

  // The kernel must be a canonical copy of K: a -> (k(a), 1).
  if (out.K.size() != ext.K.size())
    throw AlgebraError("pullback_point: kernel is not a copy of K");
  for (int a = 0; a < ext.K.size(); ++a) {
    int p = pb.index_of(ext.K.elements[a], Z.identity);
    if (p < 0 || out.K.local_of(p) < 0)
      throw AlgebraError("pullback_point: kernel is not a copy of K");
  }
  return out;
}

SplitExtension compose_points(const SplitExtension& inner, const SplitExtension& outer) {
  if (!same_structure(inner.Y(), outer.X()))
    throw NotAHomError("compose_points: middle objects differ", -1, -1);
  MonoidHom gf = compose(outer.point.f, inner.point.f);
  MonoidHom st = compose(inner.point.s, outer.point.s);
  return make_extension(std::move(gf), std::move(st));
}

ExtensionMorphism make_extension_morphism(SplitExtension from, SplitExtension to,
                                          std::vector<int> gamma, std::vector<int> g,
                                          std::vector<int> h) {
  // The three maps must be homs and the three squares must commute.
  MonoidHom gh = hom(from.X(), to.X(), g);
  MonoidHom hh = hom(from.Y(), to.Y(), h);
  MonoidHom ch = hom(from.K.monoid(), to.K.monoid(), gamma);

  for (int a = 0; a < from.K.size(); ++a)
    if (to.K.elements[gamma[a]] != g[from.K.elements[a]])
      throw NotAHomError("extension morphism: kernel square does not commute", a, a);
  for (int x = 0; x < from.X().size; ++x)
    if (to.point.f.map[g[x]] != h[from.point.f.map[x]])
      throw NotAHomError("extension morphism: epi square does not commute", x, x);
  for (int y = 0; y < from.Y().size; ++y)
    if (g[from.point.s.map[y]] != to.point.s.map[h[y]])
      throw NotAHomError("extension morphism: section square does not commute", y, y);
  (void)gh;
  (void)hh;
  (void)ch;
  return ExtensionMorphism{std::move(from), std::move(to), std::move(gamma), std::move(g),
                           std::move(h)};
}

namespace {

bool surjective_onto(const std::vector<int>& map, int codomain_size) {
  std::vector<char> seen(codomain_size, 0);
  for (int v : map) seen[v] = 1;
  for (char c : seen)
    if (!c) return false;
  return true;
}

bool injective_map(const std::vector<int>& map, int codomain_size) {
  std::vector<char> seen(codomain_size, 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

SsflReport ssfl_check(const ExtensionMorphism& m) {
  SsflReport r;
  r.rows_schreier = analyze(m.from).is_schreier && analyze(m.to).is_schreier;

  r.gamma_surjective = surjective_onto(m.gamma, m.to.K.size());
  r.gamma_injective = injective_map(m.gamma, m.to.K.size());
  r.h_surjective = surjective_onto(m.h, m.to.Y().size);
  r.h_injective = injective_map(m.h, m.to.Y().size);
  r.g_surjective = surjective_onto(m.g, m.to.X().size);
  r.g_injective = injective_map(m.g, m.to.X().size);

  r.epi_forward_ok = !(r.gamma_surjective && r.h_surjective) || r.g_surjective;
  r.epi_backward_ok = !r.g_surjective || (r.gamma_surjective && r.h_surjective);
  r.mono_forward_ok = !(r.gamma_injective && r.h_injective) || r.g_injective;
  r.mono_backward_ok = !r.g_injective || (r.gamma_injective && r.h_injective);

  if (!r.epi_forward_ok) r.certificate = "gamma,h surjective but g is not";
  if (!r.epi_backward_ok) r.certificate = "g surjective but gamma or h is not";
  if (!r.mono_forward_ok) r.certificate = "gamma,h injective but g is not";
  if (!r.mono_backward_ok) r.certificate = "g injective but gamma or h is not";
  return r;
}

bool is_schreier_special_morphism(const MonoidHom& f) {
  KernelPair kp = kernel_pair(f);
  SplitExtension ext = make_extension(kp.eq.p1, kp.e);
  return analyze(ext).is_schreier;
}

}  // namespace finalg
