#pragma once

// Schreier special objects of monoids: the canonical point (pi2, <1,1>),
// one-sided loop structures, and the three equivalent characterisations
// (analysis of the canonical point, translation bijectivity, group oracle).

#include <optional>

#include "finalg/schreier.hpp"

namespace finalg {

enum class Side { Right, Left };

/// A subtraction table q paired with the monoid operation: q(x,y)*y = x and
/// q(x*y,y) = x for the right side; mirrored for the left.
struct LoopStructure {
  FiniteMonoid carrier;
  Side side = Side::Right;
  std::vector<int> q;   // row-major size x size

  int q_at(int x, int y) const { return q[static_cast<size_t>(x) * carrier.size + y]; }
};

/// Checks the loop axioms exhaustively.
bool loop_axioms_hold(const LoopStructure& ls);

/// The canonical extension M |> M x M <=> M with f = pi2, s = <1,1>.
SplitExtension special_point(const FiniteMonoid& m);

struct SpecialObjectVerdict {
  bool special = false;
  std::optional<LoopStructure> loop;
  int witness = -1;   // pair index of X = M x M with multiplicity != 1
};

/// Analyzes the canonical point; on success extracts q as a loop structure
/// via the kernel identification K = M x {1}.
SpecialObjectVerdict is_schreier_special(const FiniteMonoid& m, Side side = Side::Right);

struct LoopSearch {
  std::optional<LoopStructure> loop;
  int witness = -1;   // y whose translation is not bijective
};

/// Independent route: q(x,y) exists iff translation by y is bijective.
LoopSearch one_sided_loop(const FiniteMonoid& m, Side side = Side::Right);
inline LoopSearch right_loop_structure(const FiniteMonoid& m) {
  return one_sided_loop(m, Side::Right);
}

struct ProtomodularVerdict {
  bool is_group = false;
  int witness = -1;   // non-invertible element when not a group
  std::optional<bool> catalogue_points_strong;
};

/// Group oracle, plus an optional bounded empirical sweep: every supplied
/// point over m must be strong.
ProtomodularVerdict is_protomodular_object_monoid(
    const FiniteMonoid& m, const std::vector<SplitExtension>* points_over_m = nullptr);

}  // namespace finalg
