#pragma once

// Points and split extensions of finite monoids: the unique-decomposition
// test, retraction computation, the S1-S7 property scan, and the stability
// checks (composition, pullback, split short five lemma, kernel pairs).

#include <optional>

#include "finalg/core.hpp"
#include "finalg/limits.hpp"

namespace finalg {

/// Split epimorphism f with chosen section s: f(s(y)) = y for all y.
struct Point {
  MonoidHom f;   // X -> Y
  MonoidHom s;   // Y -> X
};

Point make_point(MonoidHom f, MonoidHom s);

struct SplitExtension {
  Point point;
  Submonoid K;    // kernel(f)
  MonoidHom k;    // inclusion K.monoid() -> X

  const FiniteMonoid& X() const { return point.f.domain; }
  const FiniteMonoid& Y() const { return point.f.codomain; }
};

SplitExtension make_extension(MonoidHom f, MonoidHom s);

struct PropertyCheck {
  bool holds = true;
  std::vector<int> witness;   // tuple of element indices showing failure
};

struct PropertyReport {
  PropertyCheck s1, s2, s3, s4, s5, s6, s7;
  bool all() const {
    return s1.holds && s2.holds && s3.holds && s4.holds && s5.holds && s6.holds && s7.holds;
  }
};

struct SchreierAnalysis {
  std::vector<int> multiplicity;        // per x: #{a in K : x = k(a) * sf(x)}
  bool is_schreier = false;             // all multiplicities equal 1
  bool is_left_homogeneous = false;     // mirror decomposition x = sf(x) * k(a)
  std::vector<int> q;                   // X -> K (local indices), when Schreier
  PropertyReport properties;            // S1-S7; S3-S7 only filled when Schreier

  /// An x whose multiplicity differs from 1, or -1.
  int multiplicity_witness() const;
};

SchreierAnalysis analyze(const SplitExtension& ext);

/// S3-S7 by exhaustive quantifier scan, for a given retraction table.
PropertyReport verify_properties(const SplitExtension& ext, const std::vector<int>& q);

/// True iff im(k) and im(s) together generate X.
bool is_strong(const Point& p);

/// Pullback of the extension along g : Z -> Y; the new point is
/// (p2 : P -> Z, <s g, 1>) and its kernel is canonically isomorphic to K
/// (verified, error on failure).
SplitExtension pullback_point(const SplitExtension& ext, const MonoidHom& g);

/// The composite point (g f, s t) with its own kernel.
SplitExtension compose_points(const SplitExtension& inner, const SplitExtension& outer);

/// Morphism of split extensions: three commuting squares.
struct ExtensionMorphism {
  SplitExtension from;   // (f', s') with kernel K'
  SplitExtension to;     // (f, s) with kernel K
  std::vector<int> gamma;   // K' -> K, local kernel indices
  std::vector<int> g;       // X' -> X
  std::vector<int> h;       // Y' -> Y
};

ExtensionMorphism make_extension_morphism(SplitExtension from, SplitExtension to,
                                          std::vector<int> gamma, std::vector<int> g,
                                          std::vector<int> h);

/// The four implications of the strong split short five lemma, evaluated on
/// one instance. Failed implications carry a certificate.
struct SsflReport {
  bool rows_schreier = false;
  bool gamma_surjective = false, h_surjective = false, g_surjective = false;
  bool gamma_injective = false, h_injective = false, g_injective = false;
  // (gamma, h surjective) => g surjective, and the converse; same for mono.
  bool epi_forward_ok = true, epi_backward_ok = true;
  bool mono_forward_ok = true, mono_backward_ok = true;
  std::string certificate;   // empty when every implication holds

  bool all_ok() const {
    return epi_forward_ok && epi_backward_ok && mono_forward_ok && mono_backward_ok;
  }
};

SsflReport ssfl_check(const ExtensionMorphism& m);

/// Builds the kernel pair of f and analyzes the point (f1, e_f).
bool is_schreier_special_morphism(const MonoidHom& f);

}  // namespace finalg
