#include "finalg/catalogue.hpp"

#include <array>

#include "finalg/limits.hpp"

namespace finalg {

FiniteMonoid cyclic_group(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
  return validate_monoid(rows, 0, std::move(labels));
}

FiniteMonoid dihedral_group(int n) {
  // Element a^i b^j at index i + n*j; b a = a^-1 b.
  const int size = 2 * n;
  auto idx = [n](int i, int j) { return i + n * j; };
  std::vector<std::vector<int>> rows(size, std::vector<int>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          rows[idx(i, j)][idx(k, l)] = idx(rot, j ^ l);
        }
  std::vector<std::string> labels(size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string s;
      if (i == 1)
        s = "a";
      else if (i > 1)
        s = "a" + std::to_string(i);
      if (j) s += "b";
      if (s.empty()) s = "1";
      labels[idx(i, j)] = s;
    }
  return validate_monoid(rows, 0, std::move(labels));
}

FiniteMonoid quaternion_group() {
  // Indices: 1,-1,i,-i,j,-j,k,-k.
  auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  // axis 0 = scalar, 1 = i, 2 = j, 3 = k.
  auto mul = [&](int x, int y) {
    int ax = x / 2, sx = x % 2 ? -1 : 1;
    int ay = y / 2, sy = y % 2 ? -1 : 1;
    int sign = sx * sy;
    if (ax == 0) return enc(ay, sign);
    if (ay == 0) return enc(ax, sign);
    if (ax == ay) return enc(0, -sign);
    // i*j = k and cyclic; anti-cyclic flips the sign.
    static constexpr std::array<std::array<int, 4>, 4> axis = {
        {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> sgn = {
        {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}}};
    return enc(axis[ax][ay], sign * sgn[ax][ay]);
  };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) rows[x][y] = mul(x, y);
  return validate_monoid(rows, 0, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteMonoid symmetric3() {
  // Permutations of {0,1,2}; composition (p*q)(x) = p(q(x)).
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  const std::array<const char*, 6> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      rows[i][j] = find(comp);
    }
  return validate_monoid(rows, 0, {names.begin(), names.end()});
}

FiniteMonoid semilattice2() {
  return validate_monoid({{0, 1}, {1, 1}}, 0, {"1", "a"});
}

FiniteMonoid chain_semilattice(int n) {
  // Meet of a chain: x*y = max(x, y) with 0 on top as the unit.
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = std::max(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : "a" + std::to_string(i);
  return validate_monoid(rows, 0, std::move(labels));
}

FiniteMonoid flat3_monoid() {
  return validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0, {"1", "a", "b"});
}

std::vector<NamedMonoid> builtin_monoids() {
  std::vector<NamedMonoid> out;
  for (int n = 1; n <= 8; ++n) out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  out.push_back({"C2xC2", product(cyclic_group(2), cyclic_group(2)).object});
  out.push_back({"C2xC4", product(cyclic_group(2), cyclic_group(4)).object});
  out.push_back({"S3", symmetric3()});
  out.push_back({"D8", dihedral_group(4)});
  out.push_back({"D10", dihedral_group(5)});
  out.push_back({"Q8", quaternion_group()});
  out.push_back({"semilattice2", semilattice2()});
  return out;
}

std::vector<NamedLie> builtin_lie() {
  return {
      {"ab3", abelian_lie(3)},
      {"h3", heisenberg3()},
      {"sl2", sl2()},
      {"free2", free_class2(2)},
      {"free3", free_class2(3)},
  };
}

std::vector<MonoidHom> all_homs(const FiniteMonoid& m, const FiniteMonoid& n, int limit) {
  std::vector<MonoidHom> out;
  std::vector<int> map(m.size, -1);
  map[m.identity] = n.identity;

  // Assign values in element order; check every product whose three
  // participants are already assigned.
  auto consistent = [&](int just) {
    for (int x = 0; x < m.size; ++x) {
      if (map[x] < 0) continue;
      for (int y = 0; y < m.size; ++y) {
        if (map[y] < 0) continue;
        if (x != just && y != just && m.at(x, y) != just) continue;
        int p = m.at(x, y);
        if (map[p] < 0) continue;
        if (n.at(map[x], map[y]) != map[p]) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    while (pos < m.size && map[pos] >= 0) ++pos;
    if (pos == m.size) {
      out.push_back(MonoidHom{m, n, map});
      return;
    }
    for (int v = 0; v < n.size; ++v) {
      map[pos] = v;
      if (consistent(pos)) self(self, pos + 1);
      map[pos] = -1;
      if (static_cast<int>(out.size()) >= limit) return;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace finalg
