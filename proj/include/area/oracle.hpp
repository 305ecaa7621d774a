#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "area/conjecture.hpp"
#include "area/construction.hpp"
#include "area/rational_expr.hpp"
#include "area/surd.hpp"

namespace area {

struct Vec2 {
  Scalar x;
  Scalar y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Exact rational coordinates for every point of a construction, plus values
/// for its parameters.
struct NumericModel {
  std::map<std::string, Vec2> points;
  std::map<std::string, Scalar> parameters;
  std::uint64_t seed = 0;

  const Vec2& at(const std::string& name) const;
  std::string to_string() const;
  friend bool operator==(const NumericModel&, const NumericModel&) = default;
};

/// Values pinned by the caller; everything else is sampled.
struct Assignments {
  std::map<std::string, Vec2> points;
  std::map<std::string, Scalar> parameters;
};

inline constexpr int kMaxResamples = 32;

/// Samples free points and parameters, then computes constructed points.
/// Degenerate draws are redrawn up to kMaxResamples times before
/// DegenerateAfterRetries is thrown.
NumericModel realize(const Construction& c, std::uint64_t seed, const Assignments& fixed = {});

/// Throws NonParallelRatio, DivisionByZero or UnknownPoint.
Scalar eval_atom(const Atom& a, const NumericModel& m);
Scalar evaluate(const RationalExpr& e, const NumericModel& m);
SurdSum<Scalar> evaluate(const ExprTree& e, const NumericModel& m);

/// Exact sign of rational + sum c_i*sqrt(r_i).
int sign_of(const SurdSum<Scalar>& value);

bool check(const Clause& clause, const NumericModel& m);
bool check(const Conjecture& conj, const NumericModel& m);

/// Searches `samples` realizations for one that violates `conj`. Samples on
/// which the conjecture is undefined (zero denominators, non-parallel ratios)
/// are skipped.
std::optional<NumericModel> find_counterexample(const Construction& c, const Conjecture& conj, std::uint64_t seed,
                                                int samples);

/// Deterministic seed derivation used for independent sample streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace area
