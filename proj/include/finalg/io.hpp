#pragma once

// Algebra file format (JSON documents with kind monoid|group|lie|pointed_set),
// extension descriptors, and content digests. Round-trip parse -> serialize
// -> parse is the identity on the parsed value.

#include <cstdint>
#include <optional>
#include <string>

#include "finalg/core.hpp"
#include "finalg/lie.hpp"
#include "finalg/presentation.hpp"
#include "finalg/psetop.hpp"
#include "finalg/schreier.hpp"

namespace finalg {

struct ParseError : AlgebraError {
  using AlgebraError::AlgebraError;
};

enum class AlgebraKind { Monoid, Group, Lie, PointedSet };

std::string kind_name(AlgebraKind k);

struct AlgebraDoc {
  AlgebraKind kind = AlgebraKind::Monoid;
  std::string name;
  std::optional<FiniteMonoid> monoid;        // monoid | group
  std::optional<FiniteGroup> group;          // group only
  std::optional<LieAlgebra> lie;             // lie only
  std::optional<PointedSet> pointed_set;     // pointed_set only
  std::optional<Presentation> presentation;  // group metadata / generator

  bool operator==(const AlgebraDoc& o) const;
};

AlgebraDoc parse_algebra_text(const std::string& text);
AlgebraDoc parse_algebra_file(const std::string& path);
std::string serialize_algebra(const AlgebraDoc& doc);

AlgebraDoc doc_from_monoid(std::string name, FiniteMonoid m);
AlgebraDoc doc_from_lie(std::string name, LieAlgebra l);

/// Extension descriptor: kind "extension", paths to the middle and base
/// algebra files (relative to the descriptor) plus the f and s arrays.
SplitExtension parse_extension_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace finalg
