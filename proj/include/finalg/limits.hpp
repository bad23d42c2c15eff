#pragma once

// Finite limit constructions: binary products, pullbacks and kernel pairs,
// with their projections and universal pairings.

#include "finalg/core.hpp"

namespace finalg {

struct Product {
  FiniteMonoid object;   // componentwise table on pairs (i, j) -> i*|N|+j
  MonoidHom p1;          // object -> M
  MonoidHom p2;          // object -> N

  int pair_index(int i, int j) const { return i * p2.codomain.size + j; }
  /// Universal pairing <u, v> : W -> M x N for u : W->M, v : W->N.
  MonoidHom pair_into(const MonoidHom& u, const MonoidHom& v) const;
};

Product product(const FiniteMonoid& m, const FiniteMonoid& n);
/// <1, 1> : M -> M x M.
MonoidHom diagonal(const Product& mxm);

struct Pullback {
  FiniteMonoid object;         // submonoid of X x Y on pairs with f(x) = g(y)
  std::vector<int> xs, ys;     // components of each local element
  MonoidHom p1;                // object -> X
  MonoidHom p2;                // object -> Y

  int index_of(int x, int y) const;   // -1 when (x, y) is not in the pullback
  /// Universal pairing for u : W->X, v : W->Y with f u = g v.
  MonoidHom pair_into(const MonoidHom& u, const MonoidHom& v) const;
};

Pullback pullback(const MonoidHom& f, const MonoidHom& g);

struct KernelPair {
  Pullback eq;        // Eq(f) = {(x, x') | f(x) = f(x')}
  MonoidHom e;        // reflexivity section <1,1> : X -> Eq(f)

  const MonoidHom& f1() const { return eq.p1; }
  const MonoidHom& f2() const { return eq.p2; }
};

KernelPair kernel_pair(const MonoidHom& f);

}  // namespace finalg
