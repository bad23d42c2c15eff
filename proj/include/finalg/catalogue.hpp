#pragma once

// Built-in algebra catalogue: the groups, monoids and Lie algebras every
// sweep and test suite runs over, plus brute-force hom enumeration between
// small members.

#include "finalg/core.hpp"
#include "finalg/lie.hpp"

namespace finalg {

FiniteMonoid cyclic_group(int n);
/// Dihedral group of order 2n as <a, b | a^n, b^2, abab>; labels a^i b^j.
FiniteMonoid dihedral_group(int n);
FiniteMonoid quaternion_group();          // Q8
FiniteMonoid symmetric3();                // S3, cycle-notation labels
FiniteMonoid semilattice2();              // {1, a} with a*a = a
/// Meet-chain semilattice 1 > a1 > ... > a(n-1).
FiniteMonoid chain_semilattice(int n);
/// {1, a, b} with every non-unit product equal to a.
FiniteMonoid flat3_monoid();

struct NamedMonoid {
  std::string name;
  FiniteMonoid monoid;
};

/// C1..C8, C2xC2, C2xC4, S3, D8, D10, Q8 and the two-element semilattice.
std::vector<NamedMonoid> builtin_monoids();

struct NamedLie {
  std::string name;
  LieAlgebra algebra;
};

/// ab3 (abelian), h3, sl2, free2 and free3 (free class-2 on 2 and 3 gens).
std::vector<NamedLie> builtin_lie();

/// All homs M -> N by backtracking, at most `limit` of them; deterministic
/// order (lexicographic in the map array).
std::vector<MonoidHom> all_homs(const FiniteMonoid& m, const FiniteMonoid& n, int limit = 256);

}  // namespace finalg
