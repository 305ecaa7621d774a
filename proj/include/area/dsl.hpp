#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "area/conjecture.hpp"
#include "area/construction.hpp"
#include "area/prover.hpp"

namespace area {

/// Per-file overrides of prover options (`option <key> = <value>`).
struct FileOptions {
  std::optional<AreaCoordsMode> area_coords;
  std::optional<int> oracle_samples;
  std::optional<std::uint64_t> seed;

  void apply(ProverOptions& opts) const;
  friend bool operator==(const FileOptions&, const FileOptions&) = default;
};

/// The goal as written: a predicate call or a single relation.
struct Goal {
  std::string predicate;              // empty for a relation
  std::vector<std::string> arguments;  // predicate points, in source order
  Clause clause;                      // relation goals

  Conjecture conjecture() const;
  std::string to_string() const;
  friend bool operator==(const Goal&, const Goal&) = default;
};

struct SourceFile {
  std::vector<std::string> parameters;
  Construction construction;
  Goal goal;
  FileOptions options;

  Conjecture conjecture() const { return goal.conjecture(); }
};

/// Throws ParseError for syntax errors, and UnknownPoint or DuplicatePoint
/// (messages prefixed with line:column) for ill-formed constructions.
SourceFile parse(const std::string& text);

/// Canonical source text; parse(print(f)) reproduces f.
std::string print(const SourceFile& file);

/// Parses a standalone expression (no parameter declarations required).
ExprTree parse_expression(const std::string& text);

}  // namespace area
