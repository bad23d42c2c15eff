#pragma once

// Lie algebras over the rationals as exact structure constants; 2-Engel
// detection and the loop verification for the operation x + y + k[x,y].

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/core.hpp"

namespace finalg {

using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

struct NotAntisymmetricError : AlgebraError {
  int i, j;
  NotAntisymmetricError(const std::string& msg, int i_, int j_)
      : AlgebraError(msg), i(i_), j(j_) {}
};

struct JacobiFailsError : AlgebraError {
  int i, j, k;
  JacobiFailsError(const std::string& msg, int i_, int j_, int k_)
      : AlgebraError(msg), i(i_), j(j_), k(k_) {}
};

struct LieAlgebra {
  int dim = 0;
  // c[i*dim + j] = coordinate vector of [e_i, e_j].
  std::vector<Vec> c;
  std::vector<std::string> labels;

  const Vec& basis_bracket(int i, int j) const { return c[static_cast<size_t>(i) * dim + j]; }
  std::string label(int i) const;

  bool operator==(const LieAlgebra& o) const = default;
};

/// Certifies antisymmetry and the Jacobi identity on all basis triples.
LieAlgebra validate_lie(int dim, std::vector<Vec> constants,
                        std::vector<std::string> labels = {});

Vec zero_vec(int dim);
Vec basis_vec(int dim, int i);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Rat& r, const Vec& a);
bool is_zero(const Vec& a);
std::string format_vec(const LieAlgebra& l, const Vec& v);

Vec bracket(const LieAlgebra& l, const Vec& x, const Vec& y);
/// x*y = x + y + k[x,y].
Vec star(const LieAlgebra& l, const Rat& k, const Vec& x, const Vec& y);

constexpr std::uint64_t kDefaultLieSeed = 20240501;

/// Deterministic sample vectors: all 0/1 vectors for dim <= 6 plus a seeded
/// pseudorandom rational batch.
std::vector<Vec> sample_vectors(int dim, std::uint64_t seed = kDefaultLieSeed);

struct Engel2LieReport {
  bool polarized_ok = false;     // [[ei,ej],ek] + [[ei,ek],ej] = 0 on all triples
  bool sampled_ok = false;       // [[x,y],y] = 0 on the sample pairs
  int wi = -1, wj = -1, wk = -1; // failing basis triple when !polarized_ok
  Vec witness_value;             // value of the failing expression

  bool is_2engel() const { return polarized_ok; }
  bool oracles_agree() const { return polarized_ok == sampled_ok; }
};

Engel2LieReport is_2engel_lie(const LieAlgebra& l, std::uint64_t seed = kDefaultLieSeed);

struct LoopCheckLie {
  bool ansatz_solved = false;    // exact solve of q(x,y) = x + a y + b [x,y]
  Rat alpha, beta;
  bool verified = false;         // both loop identities hold on all sample pairs
  std::optional<std::pair<Vec, Vec>> failure_pair;
};

/// Solves the loop conditions symbolically over the free class-2 algebra on
/// two generators, then verifies the found coefficients on l by sampling.
LoopCheckLie loop_check_lie(const LieAlgebra& l, const Rat& k,
                            std::uint64_t seed = kDefaultLieSeed);

/// Free class-2 nilpotent Lie algebra: g generators plus their pairwise
/// brackets, deeper brackets zero; dimension g + g(g-1)/2.
LieAlgebra free_class2(int generators);

LieAlgebra abelian_lie(int dim);
LieAlgebra heisenberg3();
LieAlgebra sl2();

}  // namespace finalg
