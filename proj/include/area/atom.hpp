#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "area/scalar.hpp"

namespace area {

/// A point as seen by the algebra: its name plus its construction order.
/// Order 0 means "no construction bound"; names then decide the ordering.
struct PointRef {
  std::string name;
  int order = 0;

  friend bool operator==(const PointRef& a, const PointRef& b) {
    return a.order == b.order && a.name == b.name;
  }
  friend std::strong_ordering operator<=>(const PointRef& a, const PointRef& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
  }
};

enum class AtomKind : std::uint8_t {
  SignedArea,  // S[a,b,c]
  PythDiff,    // P[a,b,c]
  QuadDist,    // d2(a,b)
  DistRatio,   // ratio(a,b;c,d) = ab/cd
  Parameter,   // symbolic r
};

/// An atom in argument order as written, before canonicalization.
struct RawAtom {
  AtomKind kind;
  std::vector<PointRef> points;
  std::string parameter;
};

/// Indeterminate of the polynomial algebra. Instances only exist in canonical
/// form; build them through canonicalize_atom() or the helpers below.
class Atom {
 public:
  static Atom parameter(std::string name);

  AtomKind kind() const noexcept { return kind_; }
  std::span<const PointRef> points() const noexcept { return {points_.data(), count_}; }
  const std::string& parameter_name() const noexcept { return points_[0].name; }

  bool mentions(const std::string& point) const;
  int max_order() const;
  RawAtom raw() const;
  std::string to_string() const;

  friend bool operator==(const Atom& a, const Atom& b);
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  friend struct AtomFactory;
  Atom() = default;

  AtomKind kind_ = AtomKind::Parameter;
  std::uint8_t count_ = 0;
  std::array<PointRef, 4> points_{};
};

/// Result of canonicalization: `coefficient * atom`, or just `coefficient`
/// when the quantity is degenerate.
struct Canonical {
  Scalar coefficient;
  std::optional<Atom> atom;

  bool is_constant() const { return !atom.has_value(); }
};

Canonical canonicalize_atom(const RawAtom& raw);

Canonical signed_area(const PointRef& a, const PointRef& b, const PointRef& c);
Canonical pyth_diff(const PointRef& a, const PointRef& b, const PointRef& c);
Canonical quad_dist(const PointRef& a, const PointRef& b);
/// ab/cd. Throws DegenerateDenominator when c == d.
Canonical dist_ratio(const PointRef& a, const PointRef& b, const PointRef& c, const PointRef& d);

}  // namespace area
