#include "finalg/core.hpp"

#include <algorithm>
#include <numeric>

namespace finalg {

std::string FiniteMonoid::label(int i) const {
  if (!labels.empty()) return labels[i];
  return "e" + std::to_string(i);
}

bool same_structure(const FiniteMonoid& a, const FiniteMonoid& b) {
  return a.size == b.size && a.identity == b.identity && a.table == b.table;
}

FiniteMonoid validate_monoid_flat(int size, int identity, std::vector<int> table,
                                  std::vector<std::string> labels) {
  if (size <= 0) throw BadTableError("monoid size must be positive");
  if (table.size() != static_cast<size_t>(size) * size)
    throw BadTableError("table is not size x size");
  for (int v : table)
    if (v < 0 || v >= size) throw BadTableError("table entry out of range");
  if (identity < 0 || identity >= size) throw BadTableError("identity index out of range");
  if (!labels.empty() && labels.size() != static_cast<size_t>(size))
    throw BadTableError("labels length does not match size");

  FiniteMonoid m{size, identity, std::move(table), std::move(labels)};
  for (int j = 0; j < size; ++j) {
    if (m.at(identity, j) != j)
      throw NoIdentityError("identity*x != x at x=" + std::to_string(j), j);
    if (m.at(j, identity) != j)
      throw NoIdentityError("x*identity != x at x=" + std::to_string(j), j);
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (m.at(m.at(i, j), k) != m.at(i, m.at(j, k)))
          throw NotAssociativeError("associativity fails at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")",
                                    i, j, k);
  return m;
}

FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& rows, int identity,
                             std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw BadTableError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_monoid_flat(n, identity, std::move(flat), std::move(labels));
}

GroupCheck as_group(const FiniteMonoid& m) {
  std::vector<int> inv(m.size, -1);
  for (int x = 0; x < m.size; ++x) {
    for (int y = 0; y < m.size; ++y) {
      if (m.at(x, y) == m.identity && m.at(y, x) == m.identity) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) return GroupCheck{std::nullopt, x};
  }
  return GroupCheck{FiniteGroup{m, std::move(inv)}, -1};
}

MonoidHom hom(const FiniteMonoid& domain, const FiniteMonoid& codomain, std::vector<int> map) {
  if (map.size() != static_cast<size_t>(domain.size))
    throw NotAHomError("map length does not match domain size", -1, -1);
  for (int v : map)
    if (v < 0 || v >= codomain.size) throw NotAHomError("map value out of range", -1, -1);
  if (map[domain.identity] != codomain.identity)
    throw NotAHomError("identity not preserved", -1, -1);
  for (int x = 0; x < domain.size; ++x)
    for (int y = 0; y < domain.size; ++y)
      if (map[domain.at(x, y)] != codomain.at(map[x], map[y]))
        throw NotAHomError("map(x*y) != map(x)*map(y) at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")",
                           x, y);
  return MonoidHom{domain, codomain, std::move(map)};
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<int> map(m.size);
  std::iota(map.begin(), map.end(), 0);
  return MonoidHom{m, m, std::move(map)};
}

MonoidHom trivial_hom(const FiniteMonoid& domain, const FiniteMonoid& codomain) {
  return MonoidHom{domain, codomain, std::vector<int>(domain.size, codomain.identity)};
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!same_structure(f.codomain, g.domain))
    throw NotAHomError("compose: middle objects differ", -1, -1);
  std::vector<int> map(f.domain.size);
  for (int x = 0; x < f.domain.size; ++x) map[x] = g.map[f.map[x]];
  return MonoidHom{f.domain, g.codomain, std::move(map)};
}

bool is_injective(const MonoidHom& f) {
  std::vector<char> seen(f.codomain.size, 0);
  for (int v : f.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_surjective(const MonoidHom& f) {
  std::vector<char> seen(f.codomain.size, 0);
  for (int v : f.map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int Submonoid::local_of(int parent_index) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_index);
  if (it == elements.end() || *it != parent_index) return -1;
  return static_cast<int>(it - elements.begin());
}

FiniteMonoid Submonoid::monoid() const {
  const int n = size();
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = parent.at(elements[a], elements[b]);
      int loc = local_of(p);
      if (loc < 0) throw BadTableError("submonoid not closed");
      table[static_cast<size_t>(a) * n + b] = loc;
    }
  std::vector<std::string> labels;
  if (!parent.labels.empty()) {
    labels.reserve(n);
    for (int e : elements) labels.push_back(parent.labels[e]);
  }
  return FiniteMonoid{n, local_of(parent.identity), std::move(table), std::move(labels)};
}

MonoidHom Submonoid::inclusion() const {
  return MonoidHom{monoid(), parent, elements};
}

Submonoid kernel(const MonoidHom& f) {
  std::vector<int> elems;
  for (int x = 0; x < f.domain.size; ++x)
    if (f.map[x] == f.codomain.identity) elems.push_back(x);
  return Submonoid{f.domain, std::move(elems)};
}

Submonoid generated_submonoid(const FiniteMonoid& m, const std::vector<int>& gens) {
  std::vector<char> in(m.size, 0);
  std::vector<int> queue;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  add(m.identity);
  for (int g : gens) add(g);
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t j = 0; j <= i; ++j) {
      add(m.at(x, queue[j]));
      add(m.at(queue[j], x));
    }
  }
  std::vector<int> elems;
  for (int x = 0; x < m.size; ++x)
    if (in[x]) elems.push_back(x);
  return Submonoid{m, std::move(elems)};
}

int commutator(const FiniteGroup& g, int x, int y) {
  int r = g.at(x, y);
  r = g.at(r, g.inverse[x]);
  return g.at(r, g.inverse[y]);
}

int conjugate(const FiniteGroup& g, int y, int x) {
  return g.at(g.at(y, x), g.inverse[y]);
}

int pow_monoid(const FiniteMonoid& m, int x, long long n) {
  int r = m.identity;
  for (long long i = 0; i < n; ++i) r = m.at(r, x);
  return r;
}

int pow_group(const FiniteGroup& g, int x, long long n) {
  if (n < 0) return pow_monoid(g.monoid, g.inverse[x], -n);
  return pow_monoid(g.monoid, x, n);
}

int element_order(const FiniteGroup& g, int x) {
  int r = x;
  int n = 1;
  while (r != g.identity()) {
    r = g.at(r, x);
    ++n;
  }
  return n;
}

long long exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.size(); ++x) e = std::lcm(e, static_cast<long long>(element_order(g, x)));
  return e;
}

bool is_abelian(const FiniteMonoid& m) {
  for (int x = 0; x < m.size; ++x)
    for (int y = x + 1; y < m.size; ++y)
      if (m.at(x, y) != m.at(y, x)) return false;
  return true;
}

}  // namespace finalg
