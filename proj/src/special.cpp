#include "finalg/special.hpp"

namespace finalg {

namespace {

int oriented(const FiniteMonoid& m, Side side, int u, int v) {
  return side == Side::Right ? m.at(u, v) : m.at(v, u);
}

}  // namespace

bool loop_axioms_hold(const LoopStructure& ls) {
  const FiniteMonoid& m = ls.carrier;
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y) {
      if (oriented(m, ls.side, ls.q_at(x, y), y) != x) return false;            // (x-y)+y = x
      if (ls.q_at(oriented(m, ls.side, x, y), y) != x) return false;            // (x+y)-y = x
    }
  return true;
}

SplitExtension special_point(const FiniteMonoid& m) {
  Product mxm = product(m, m);
  return make_extension(mxm.p2, diagonal(mxm));
}

SpecialObjectVerdict is_schreier_special(const FiniteMonoid& m, Side side) {
  SplitExtension ext = special_point(m);
  SchreierAnalysis a = analyze(ext);
  const FiniteMonoid& X = ext.X();

  // Decomposition part of each pair; for the left side recount on the
  // mirrored decomposition x = sf(x) * k(a).
  std::vector<int> part(X.size, -1);
  std::vector<int> mult(X.size, 0);
  if (side == Side::Right) {
    mult = a.multiplicity;
    if (a.is_schreier) part = a.q;
  } else {
    for (int x = 0; x < X.size; ++x) {
      int sf = ext.point.s.map[ext.point.f.map[x]];
      for (int c = 0; c < ext.K.size(); ++c)
        if (X.at(sf, ext.K.elements[c]) == x) {
          ++mult[x];
          part[x] = c;
        }
    }
  }

  SpecialObjectVerdict out;
  out.special = true;
  for (int x = 0; x < X.size; ++x)
    if (mult[x] != 1) {
      out.special = false;
      out.witness = x;
      return out;
    }

  // K = M x {1}; the kernel part of the decomposition of (x, y) is q(x, y).
  LoopStructure ls{m, side, std::vector<int>(static_cast<size_t>(m.size) * m.size, -1)};
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y) {
      int pair = x * m.size + y;                       // product element (x, y)
      int parent = ext.K.elements[part[pair]];         // pair (q, 1) in M x M
      ls.q[static_cast<size_t>(x) * m.size + y] = parent / m.size;
    }
  out.loop = std::move(ls);
  return out;
}

LoopSearch one_sided_loop(const FiniteMonoid& m, Side side) {
  LoopSearch out;
  std::vector<int> q(static_cast<size_t>(m.size) * m.size, -1);
  for (int y = 0; y < m.size; ++y) {
    std::vector<int> hit(m.size, 0);
    for (int x = 0; x < m.size; ++x) {
      int t = oriented(m, side, x, y);
      ++hit[t];
      q[static_cast<size_t>(t) * m.size + y] = x;
    }
    for (int t = 0; t < m.size; ++t)
      if (hit[t] != 1) {
        out.witness = y;
        return out;
      }
  }
  out.loop = LoopStructure{m, side, std::move(q)};
  return out;
}

ProtomodularVerdict is_protomodular_object_monoid(const FiniteMonoid& m,
                                                  const std::vector<SplitExtension>* points) {
  ProtomodularVerdict out;
  GroupCheck gc = as_group(m);
  out.is_group = gc.ok();
  out.witness = gc.non_invertible;
  if (points) {
    bool all = true;
    for (const auto& e : *points) {
      if (!same_structure(e.Y(), m)) continue;
      if (!is_strong(e.point)) all = false;
    }
    out.catalogue_points_strong = all;
  }
  return out;
}

}  // namespace finalg
