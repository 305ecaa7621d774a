#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "area/area_coords.hpp"
#include "area/conjecture.hpp"
#include "area/construction.hpp"
#include "area/oracle.hpp"
#include "area/rational_expr.hpp"

namespace area {

enum class AreaCoordsMode { Auto, Never, Always };

const char* area_coords_mode_name(AreaCoordsMode mode);
/// Throws InvalidArgument.
AreaCoordsMode parse_area_coords_mode(const std::string& text);

struct ProverOptions {
  AreaCoordsMode area_coords = AreaCoordsMode::Auto;
  /// Samples for counterexample searches and inequality refutation.
  int oracle_samples = 100;
  /// Samples for the cheap counterexample probe run before area coordinates.
  int probe_samples = 8;
  std::uint64_t seed = 42;
  /// Internal sub-proofs skip ndg validation.
  bool skip_ndg = false;
  /// Wall-clock budget in milliseconds; 0 means unlimited.
  std::int64_t max_ms = 0;
};

enum class VerdictKind { Proved, Disproved, NotReduced, Unknown };

const char* verdict_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<NumericModel> counterexample;  // Disproved
  std::optional<RationalExpr> residual;        // NotReduced
  std::string reason;
};

enum class TraceKind { Uniformize, Eliminate, Simplify, Pythagoras, AreaCoords, ZeroTest, Inequality, Oracle };

const char* trace_kind_name(TraceKind kind);
/// Throws InvalidArgument.
TraceKind parse_trace_kind(const std::string& text);

struct TraceStep {
  TraceKind kind = TraceKind::Uniformize;
  int clause = 0;
  std::string lemma;
  std::string point;
  std::string branch;
  std::string before;
  std::string after;
  std::string detail;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Everything needed to replay the reduction of one clause.
struct ClauseRecord {
  Clause clause;
  /// Uniformized lhs - rhs, or its surd parts (rational part, then
  /// coefficient and radicand of each root) for inequalities.
  std::vector<RationalExpr> initial;
  std::vector<std::map<Atom, RationalExpr>> rounds;
  bool pythagoras = false;
  std::optional<Frame> frame;
  std::vector<RationalExpr> reduced;
  VerdictKind verdict = VerdictKind::Unknown;
};

struct ProofTrace {
  std::vector<NdgCheck> ndgs;
  std::vector<TraceStep> steps;
  std::vector<ClauseRecord> clauses;
  bool used_area_coords = false;
  double wall_ms = 0;

  /// Re-applies the recorded substitutions to the uniformized clause.
  std::vector<RationalExpr> replay(std::size_t clause) const;
};

struct ProofResult {
  Verdict verdict;
  ProofTrace trace;
};

/// Full pipeline: ndg validation, elimination, Pythagorean expansion, area
/// coordinates, zero test or inequality decision. Throws
/// ConstructionInconsistent and DegenerateDenominator.
ProofResult prove(const Construction& c, const Conjecture& conj, const ProverOptions& opts = {});

/// Whether e = 0 is provable over c; the decision used for side conditions
/// and ndg checks.
bool provable_zero(const Construction& c, const RationalExpr& e, const ProverOptions& opts = {});

/// True iff `conj` is not provable over c (area coordinates enabled, ndg
/// validation skipped).
bool prove_negation_unprovable(const Construction& c, const Conjecture& conj, const ProverOptions& opts = {});

}  // namespace area
