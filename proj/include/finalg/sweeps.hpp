#pragma once

// Generated instance catalogues for the property and stability sweeps:
// product projections, group quotient points, pullbacks, semilattice-based
// non-Schreier points, and morphisms between Schreier extensions.

#include "finalg/catalogue.hpp"
#include "finalg/schreier.hpp"

namespace finalg {

struct NamedExtension {
  std::string name;
  SplitExtension ext;
};

struct NamedHom {
  std::string name;
  MonoidHom h;
};

struct NamedMorphism {
  std::string name;
  ExtensionMorphism m;
};

/// Product projection K |> K x Y <=> Y with section y -> (1, y).
SplitExtension product_projection(const FiniteMonoid& k, const FiniteMonoid& y);

/// Componentwise product of two extensions.
SplitExtension extension_product(const SplitExtension& a, const SplitExtension& b);

std::vector<NamedExtension> product_projection_extensions(int max_middle = 64);
std::vector<NamedExtension> group_point_extensions();

/// Schreier instance catalogue: product projections, group points and a
/// batch of pullbacks of both; >= 50 extensions with |X| <= max_middle.
std::vector<NamedExtension> schreier_catalogue(int max_middle = 64);

/// Semilattice-based points that fail unique decomposition; >= 10.
std::vector<NamedExtension> non_schreier_catalogue();

/// Deterministic hom catalogue between small builtin monoids.
std::vector<NamedHom> hom_catalogue(int max_size = 8, int per_pair = 8);

/// Morphisms of Schreier extensions exercising all four split-short-five
/// implications; >= 20.
std::vector<NamedMorphism> morphism_catalogue();

/// Sign homomorphism S3 -> C2 with its section; A3 is the kernel.
SplitExtension sign_extension();
MonoidHom sign_hom();

}  // namespace finalg
