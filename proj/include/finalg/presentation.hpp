#pragma once

// Finite groups from presentations. The coset table of the trivial subgroup
// is closed under the generators breadth-first (Todd-Coxeter enumeration);
// exceeding the element cap is an error, never silent truncation.

#include "finalg/core.hpp"

namespace finalg {

struct Presentation {
  std::vector<std::string> generators;
  // Relator = word in the generators; entries are signed 1-based generator
  // indices (+g for the generator, -g for its inverse).
  std::vector<std::vector<int>> relators;
};

struct CapExceededError : AlgebraError {
  using AlgebraError::AlgebraError;
};

constexpr int kDefaultPresentationCap = 10000;

/// The presented group as a multiplication table; labels are breadth-first
/// representative words in the generators.
FiniteMonoid group_from_presentation(const Presentation& p, int cap = kDefaultPresentationCap);

/// Parses a relator word: whitespace-separated tokens `name` or `name^int`.
std::vector<int> parse_relator(const std::string& word,
                               const std::vector<std::string>& generators);

}  // namespace finalg
