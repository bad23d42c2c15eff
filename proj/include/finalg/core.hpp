#pragma once

// Finite monoids and groups as explicit multiplication tables, plus the
// homomorphism and subobject plumbing every analysis in the tool consumes.
// All values are immutable after validation; operations are pure functions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finalg {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Table is not square, or an entry is out of range.
struct BadTableError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// The claimed identity fails the identity law; `witness` is an element
/// with identity*witness != witness or witness*identity != witness.
struct NoIdentityError : AlgebraError {
  int witness;
  NoIdentityError(const std::string& msg, int w) : AlgebraError(msg), witness(w) {}
};

/// Associativity fails on the triple (i, j, k).
struct NotAssociativeError : AlgebraError {
  int i, j, k;
  NotAssociativeError(const std::string& msg, int i_, int j_, int k_)
      : AlgebraError(msg), i(i_), j(j_), k(k_) {}
};

/// A map fails the homomorphism laws; (x, y) is a violating product pair,
/// or (-1, -1) when the identity is not preserved.
struct NotAHomError : AlgebraError {
  int x, y;
  NotAHomError(const std::string& msg, int x_, int y_) : AlgebraError(msg), x(x_), y(y_) {}
};

struct FiniteMonoid {
  int size = 0;
  int identity = 0;
  std::vector<int> table;            // row-major: table[i*size + j] = i*j
  std::vector<std::string> labels;   // empty, or one display string per element

  int at(int i, int j) const { return table[static_cast<size_t>(i) * size + j]; }
  std::string label(int i) const;

  bool operator==(const FiniteMonoid& o) const = default;
};

/// Structural equality ignoring labels; used when composing maps.
bool same_structure(const FiniteMonoid& a, const FiniteMonoid& b);

/// Checks the identity law and full associativity scan; throws on failure.
FiniteMonoid validate_monoid(const std::vector<std::vector<int>>& rows, int identity,
                             std::vector<std::string> labels = {});
FiniteMonoid validate_monoid_flat(int size, int identity, std::vector<int> table,
                                  std::vector<std::string> labels = {});

struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<int> inverse;

  int size() const { return monoid.size; }
  int identity() const { return monoid.identity; }
  int at(int i, int j) const { return monoid.at(i, j); }
};

/// as_group verdict: either the group, or a witness element with no
/// two-sided inverse.
struct GroupCheck {
  std::optional<FiniteGroup> group;
  int non_invertible = -1;

  bool ok() const { return group.has_value(); }
};
GroupCheck as_group(const FiniteMonoid& m);

struct MonoidHom {
  FiniteMonoid domain;
  FiniteMonoid codomain;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

/// Validates identity preservation and map[x*y] = map[x]*map[y]; throws.
MonoidHom hom(const FiniteMonoid& domain, const FiniteMonoid& codomain, std::vector<int> map);
MonoidHom identity_hom(const FiniteMonoid& m);
MonoidHom trivial_hom(const FiniteMonoid& domain, const FiniteMonoid& codomain);
/// g after f; domains must match structurally.
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

bool is_injective(const MonoidHom& f);
bool is_surjective(const MonoidHom& f);

struct Submonoid {
  FiniteMonoid parent;
  std::vector<int> elements;   // sorted parent indices; contains identity, closed

  int size() const { return static_cast<int>(elements.size()); }
  /// Local index of a parent element, or -1.
  int local_of(int parent_index) const;
  /// The submonoid as a monoid on local indices 0..size-1.
  FiniteMonoid monoid() const;
  /// Inclusion hom monoid() -> parent.
  MonoidHom inclusion() const;
};

/// Kernel = preimage of the codomain identity.
Submonoid kernel(const MonoidHom& f);

/// Closure of S (plus the identity) under the parent multiplication.
Submonoid generated_submonoid(const FiniteMonoid& m, const std::vector<int>& gens);

/// [x,y] = x y x^-1 y^-1.
int commutator(const FiniteGroup& g, int x, int y);
/// Conjugation of x by y: y x y^-1.
int conjugate(const FiniteGroup& g, int y, int x);

int pow_monoid(const FiniteMonoid& m, int x, long long n);       // n >= 0
int pow_group(const FiniteGroup& g, int x, long long n);         // any n
int element_order(const FiniteGroup& g, int x);
long long exponent(const FiniteGroup& g);
bool is_abelian(const FiniteMonoid& m);

}  // namespace finalg
