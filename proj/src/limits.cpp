#include "finalg/limits.hpp"

namespace finalg {

namespace {

std::vector<std::string> pair_labels(const FiniteMonoid& m, const FiniteMonoid& n,
                                     const std::vector<int>& xs, const std::vector<int>& ys) {
  if (m.labels.empty() || n.labels.empty()) return {};
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    out.push_back("(" + m.labels[xs[i]] + "," + n.labels[ys[i]] + ")");
  return out;
}

}  // namespace

MonoidHom Product::pair_into(const MonoidHom& u, const MonoidHom& v) const {
  if (!same_structure(u.domain, v.domain))
    throw NotAHomError("pair_into: domains differ", -1, -1);
  std::vector<int> map(u.domain.size);
  for (int w = 0; w < u.domain.size; ++w) map[w] = pair_index(u.map[w], v.map[w]);
  return MonoidHom{u.domain, object, std::move(map)};
}

Product product(const FiniteMonoid& m, const FiniteMonoid& n) {
  const int size = m.size * n.size;
  std::vector<int> table(static_cast<size_t>(size) * size);
  auto idx = [&](int i, int j) { return i * n.size + j; };
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < n.size; ++j)
      for (int k = 0; k < m.size; ++k)
        for (int l = 0; l < n.size; ++l)
          table[static_cast<size_t>(idx(i, j)) * size + idx(k, l)] = idx(m.at(i, k), n.at(j, l));

  std::vector<int> xs(size), ys(size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < n.size; ++j) {
      xs[idx(i, j)] = i;
      ys[idx(i, j)] = j;
    }

  FiniteMonoid obj{size, idx(m.identity, n.identity), std::move(table), pair_labels(m, n, xs, ys)};
  MonoidHom p1{obj, m, xs};
  MonoidHom p2{obj, n, ys};
  return Product{std::move(obj), std::move(p1), std::move(p2)};
}

MonoidHom diagonal(const Product& mxm) {
  const FiniteMonoid& m = mxm.p1.codomain;
  std::vector<int> map(m.size);
  for (int x = 0; x < m.size; ++x) map[x] = mxm.pair_index(x, x);
  return MonoidHom{m, mxm.object, std::move(map)};
}

int Pullback::index_of(int x, int y) const {
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == x && ys[i] == y) return static_cast<int>(i);
  return -1;
}

MonoidHom Pullback::pair_into(const MonoidHom& u, const MonoidHom& v) const {
  if (!same_structure(u.domain, v.domain))
    throw NotAHomError("pair_into: domains differ", -1, -1);
  std::vector<int> map(u.domain.size);
  for (int w = 0; w < u.domain.size; ++w) {
    int p = index_of(u.map[w], v.map[w]);
    if (p < 0) throw NotAHomError("pair_into: image misses the pullback", w, w);
    map[w] = p;
  }
  return MonoidHom{u.domain, object, std::move(map)};
}

Pullback pullback(const MonoidHom& f, const MonoidHom& g) {
  if (!same_structure(f.codomain, g.codomain))
    throw NotAHomError("pullback: codomains differ", -1, -1);
  const FiniteMonoid& x = f.domain;
  const FiniteMonoid& y = g.domain;

  std::vector<int> xs, ys;
  std::vector<int> local(static_cast<size_t>(x.size) * y.size, -1);
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < y.size; ++j)
      if (f.map[i] == g.map[j]) {
        local[static_cast<size_t>(i) * y.size + j] = static_cast<int>(xs.size());
        xs.push_back(i);
        ys.push_back(j);
      }

  const int size = static_cast<int>(xs.size());
  std::vector<int> table(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      int px = x.at(xs[a], xs[b]);
      int py = y.at(ys[a], ys[b]);
      table[static_cast<size_t>(a) * size + b] = local[static_cast<size_t>(px) * y.size + py];
    }

  int id = local[static_cast<size_t>(x.identity) * y.size + y.identity];
  FiniteMonoid obj{size, id, std::move(table), pair_labels(x, y, xs, ys)};
  MonoidHom p1{obj, x, xs};
  MonoidHom p2{obj, y, ys};
  return Pullback{std::move(obj), std::move(xs), std::move(ys), std::move(p1), std::move(p2)};
}

KernelPair kernel_pair(const MonoidHom& f) {
  Pullback eq = pullback(f, f);
  std::vector<int> map(f.domain.size);
  for (int x = 0; x < f.domain.size; ++x) map[x] = eq.index_of(x, x);
  MonoidHom e{f.domain, eq.object, std::move(map)};
  return KernelPair{std::move(eq), std::move(e)};
}

}  // namespace finalg
