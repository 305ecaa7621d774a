#pragma once

#include <functional>
#include <optional>
#include <string>

#include "area/rational_expr.hpp"
#include "area/surd.hpp"

namespace area {

struct InequalityContext {
  /// Area-coordinate form of an expression, or nullopt when no frame can be
  /// installed.
  std::function<std::optional<RationalExpr>(const RationalExpr&)> to_coords;
  /// Receives a line per reasoning step.
  std::function<void(const std::string&)> note;
};

/// Sign-relevant polynomial: num times every odd-exponent denominator factor.
Polynomial sign_polynomial(const RationalExpr& f);

/// Every term has a positive coefficient and even exponents, squared
/// distances excepted; strict additionally requires a positive constant.
bool syntactically_nonnegative(const Polynomial& p, bool strict);

/// Sufficient test for f >= 0 (f > 0 when strict).
bool rational_nonnegative(const RationalExpr& f, bool strict, InequalityContext& ctx);

/// Sufficient test for f >= 0 with up to two rounds of squaring.
bool prove_nonnegative(const SurdSum<RationalExpr>& f, bool strict, InequalityContext& ctx, int depth = 0);

}  // namespace area
