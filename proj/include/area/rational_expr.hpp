#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "area/polynomial.hpp"

namespace area {

/// One factor of a denominator: `base^exponent`, base non-constant with
/// leading coefficient 1 and no monomial content (single atoms excepted).
struct DenFactor {
  Polynomial base;
  int exponent = 1;

  friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

/// num / den over the atom algebra. The denominator is stored as a sorted
/// product of normalized factors, which keeps common factors visible without
/// needing a multivariate gcd. All scalar content lives in the numerator, so
/// the expanded denominator always has leading coefficient 1.
class RationalExpr {
 public:
  RationalExpr() = default;
  RationalExpr(const Scalar& constant);     // NOLINT(google-explicit-constructor)
  RationalExpr(int constant);               // NOLINT(google-explicit-constructor)
  RationalExpr(const Polynomial& numerator);  // NOLINT(google-explicit-constructor)
  explicit RationalExpr(const Atom& atom);
  explicit RationalExpr(const Canonical& quantity);

  /// Throws DegenerateDenominator when `den` is the zero polynomial.
  static RationalExpr quotient(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const noexcept { return num_; }
  std::span<const DenFactor> den_factors() const noexcept { return den_; }
  /// Expanded denominator.
  Polynomial den() const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  std::set<Atom> atoms() const;
  bool mentions(const std::string& point) const;

  RationalExpr pow(int exponent) const;
  RationalExpr inverse() const;

  std::string to_string() const;

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr& operator+=(const RationalExpr& b) { return *this = *this + b; }
  RationalExpr& operator-=(const RationalExpr& b) { return *this = *this - b; }
  RationalExpr& operator*=(const RationalExpr& b) { return *this = *this * b; }

  /// Structural equality of the stored representation. Use rexpr_equal for
  /// mathematical equality.
  friend bool operator==(const RationalExpr&, const RationalExpr&) = default;

  /// Builds num / prod(den) and restores every representation invariant.
  static RationalExpr normalized(Polynomial num, std::vector<DenFactor> den);

 private:
  Polynomial num_;
  std::vector<DenFactor> den_;
};

bool is_zero(const RationalExpr& e);

/// Decided by cross-multiplication: is_zero(a - b).
bool rexpr_equal(const RationalExpr& a, const RationalExpr& b);

RationalExpr substitute(const RationalExpr& e, const Atom& target, const RationalExpr& replacement);

/// Simultaneous substitution of every atom in `replacements`.
RationalExpr substitute(const RationalExpr& e, const std::map<Atom, RationalExpr>& replacements);

/// Evaluates a polynomial under a partial atom assignment; unassigned atoms
/// stay symbolic.
RationalExpr substitute(const Polynomial& p, const std::map<Atom, RationalExpr>& replacements);

/// Replaces every PythDiff atom by d2(a,b) + d2(b,c) - d2(a,c).
RationalExpr expand_pythagoras(const RationalExpr& e);

Scalar evaluate(const RationalExpr& e, const std::function<Scalar(const Atom&)>& value_of);

}  // namespace area
