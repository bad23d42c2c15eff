#pragma once

// Pointed sets with the power-set comonad on the opposite category: split
// monomorphisms, the retraction search for the opposed Schreier equations,
// and the census classifying Schreier instances as product projections.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/core.hpp"

namespace finalg {

struct PointedSet {
  int size = 0;
  int basepoint = 0;
  std::vector<std::string> labels;
};

PointedSet validate_pointed_set(int size, int basepoint, std::vector<std::string> labels = {});

/// P(X) = subsets containing the basepoint, pointed by {x0}; subsets are
/// bitmasks over 0..size-1.
struct PowersetComonad {
  PointedSet base;

  std::uint32_t basepoint_mask() const { return 1u << base.basepoint; }
  /// eta(x) = {x, x0}.
  std::uint32_t eta(int x) const { return (1u << x) | basepoint_mask(); }
  /// mu = union of a collection of subsets.
  std::uint32_t mu(const std::vector<std::uint32_t>& collection) const;
  /// P on a pointed map f: image of the subset under f.
  std::uint32_t map_subset(const std::vector<int>& f, std::uint32_t subset) const;

  std::vector<std::uint32_t> all_subsets() const;   // every mask containing x0
};

PowersetComonad powerset_comonad(const PointedSet& x);

struct ComonadLawReport {
  bool counit_ok = false;          // mu after eta at both levels, exhaustive
  bool coassoc_ok = false;         // union associativity law
  bool coassoc_exhaustive = false; // scan covered every P^3 input
};

/// Counit laws exhaustively for size <= 4; the coassociativity law
/// exhaustively for size <= 3 and on a seeded sample above that.
ComonadLawReport check_comonad_laws(const PointedSet& x, std::uint64_t seed = 7);

/// Split mono of pointed sets: inclusion of the image subset S (containing
/// the basepoint) with a retraction rho fixing S pointwise. The cokernel is
/// K = (X minus S) plus a basepoint.
struct PointedSplitMono {
  PointedSet X;
  std::vector<int> image;        // sorted, contains basepoint; Y = this subset
  std::vector<int> retraction;   // X -> X with values in image, identity on it

  std::vector<int> cokernel_elements() const;   // X indices outside the image
};

PointedSplitMono make_split_mono(PointedSet x, std::vector<int> image,
                                 std::vector<int> retraction);

struct SplitMonoVerdict {
  bool schreier = false;
  // q as masks over X per cokernel element (last entry = the added basepoint).
  std::vector<std::uint32_t> q;
  bool coproduct_shape = false;   // retraction collapses X minus image to x0
};

/// Exhaustive search over pointed maps q : K -> P(X) for the opposed
/// Schreier equations, pruned by the forced membership x in q(x).
SplitMonoVerdict analyze_split_mono(const PointedSplitMono& m);

struct CensusRow {
  int x_size = 0;
  int image_size = 0;
  std::string retraction_key;
  bool schreier = false;
  bool coproduct_shape = false;
};

struct Census {
  std::vector<CensusRow> rows;
  bool verdicts_match_predicate = true;
  // is-special verdict per pointed-set size 1..n: must hold iff size == 1.
  std::vector<std::pair<int, bool>> special_by_size;
  bool special_iff_zero_object = true;
};

/// Enumerates all split monos among pointed sets with |X| <= n (image subset
/// plus retraction, which covers every instance up to isomorphism) and
/// cross-checks each verdict against the coproduct-shape predicate.
Census classify_all(int n = 4);

}  // namespace finalg
