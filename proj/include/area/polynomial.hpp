#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "area/atom.hpp"
#include "area/scalar.hpp"

namespace area {

/// Product of atoms with positive exponents, kept sorted by atom.
class Monomial {
 public:
  using Factor = std::pair<Atom, int>;

  Monomial() = default;
  explicit Monomial(const Atom& atom, int exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  int exponent_of(const Atom& atom) const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(const Atom& atom) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded lexicographic order, greatest first; the leading term of a
/// polynomial is its first entry.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Scalar(constant)) {}  // NOLINT
  explicit Polynomial(const Atom& atom);
  Polynomial(const Monomial& monomial, const Scalar& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  /// Valid only for non-zero polynomials.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  int total_degree() const;
  int degree_in(const Atom& atom) const;
  std::set<Atom> atoms() const;
  bool mentions(const std::string& point) const;

  /// Gcd of all monomials.
  Monomial monomial_content() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& k);
  void add_term(const Monomial& monomial, const Scalar& coefficient);

  Polynomial pow(int exponent) const;
  Polynomial divide_by_monomial(const Monomial& m) const;

  /// Exact division: the quotient when `divisor` divides *this.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Exact square root up to a nonnegative rational factor: returns q such
  /// that *this == c * q^2 with c > 0 (q normalized to leading coefficient 1).
  std::optional<std::pair<Scalar, Polynomial>> square_root() const;

  Scalar evaluate(const std::function<Scalar(const Atom&)>& value_of) const;

  std::string to_string() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& k) { return a *= k; }
  friend Polynomial operator*(const Scalar& k, Polynomial a) { return a *= k; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  /// Deterministic total order used to sort factor lists.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  Terms terms_;
};

}  // namespace area
