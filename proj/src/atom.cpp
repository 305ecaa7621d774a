#include "area/atom.hpp"

#include <algorithm>

#include "area/errors.hpp"

namespace area {

struct AtomFactory {
  static Atom make(AtomKind kind, std::initializer_list<PointRef> pts) {
    Atom a;
    a.kind_ = kind;
    a.count_ = static_cast<std::uint8_t>(pts.size());
    std::copy(pts.begin(), pts.end(), a.points_.begin());
    return a;
  }
};

Atom Atom::parameter(std::string name) {
  return AtomFactory::make(AtomKind::Parameter, {PointRef{std::move(name), 0}});
}

bool Atom::mentions(const std::string& point) const {
  if (kind_ == AtomKind::Parameter) return false;
  for (std::size_t i = 0; i < count_; ++i) {
    if (points_[i].name == point) return true;
  }
  return false;
}

int Atom::max_order() const {
  if (kind_ == AtomKind::Parameter) return 0;
  int best = 0;
  for (std::size_t i = 0; i < count_; ++i) best = std::max(best, points_[i].order);
  return best;
}

RawAtom Atom::raw() const {
  RawAtom r{kind_, {}, {}};
  if (kind_ == AtomKind::Parameter) {
    r.parameter = points_[0].name;
  } else {
    r.points.assign(points_.begin(), points_.begin() + count_);
  }
  return r;
}

std::string Atom::to_string() const {
  const auto& p = points_;
  switch (kind_) {
    case AtomKind::SignedArea:
      return "S[" + p[0].name + "," + p[1].name + "," + p[2].name + "]";
    case AtomKind::PythDiff:
      return "P[" + p[0].name + "," + p[1].name + "," + p[2].name + "]";
    case AtomKind::QuadDist:
      return "d2(" + p[0].name + "," + p[1].name + ")";
    case AtomKind::DistRatio:
      return "ratio(" + p[0].name + "," + p[1].name + ";" + p[2].name + "," + p[3].name + ")";
    case AtomKind::Parameter:
      return p[0].name;
  }
  return "?";
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.kind_ != b.kind_ || a.count_ != b.count_) return false;
  for (std::size_t i = 0; i < a.count_; ++i) {
    if (!(a.points_[i] == b.points_[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.count_ <=> b.count_; c != 0) return c;
  for (std::size_t i = 0; i < a.count_; ++i) {
    if (auto c = a.points_[i] <=> b.points_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

Canonical zero() { return Canonical{Scalar(0), std::nullopt}; }

}  // namespace

Canonical signed_area(const PointRef& a, const PointRef& b, const PointRef& c) {
  if (a == b || b == c || a == c) return zero();
  std::array<PointRef, 3> p{a, b, c};
  int parity = 1;
  // Three-element bubble sort; each swap is a transposition.
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i + 1 < 3 - pass; ++i) {
      if (p[i + 1] < p[i]) {
        std::swap(p[i], p[i + 1]);
        parity = -parity;
      }
    }
  }
  return Canonical{Scalar(parity), AtomFactory::make(AtomKind::SignedArea, {p[0], p[1], p[2]})};
}

Canonical pyth_diff(const PointRef& a, const PointRef& b, const PointRef& c) {
  if (a == b || b == c) return zero();
  if (a == c) {
    // P[a,b,a] = 2|ab|^2 = P[b,a,b]
    const PointRef& lo = a < b ? a : b;
    const PointRef& hi = a < b ? b : a;
    return Canonical{Scalar(1), AtomFactory::make(AtomKind::PythDiff, {lo, hi, lo})};
  }
  if (c < a) return Canonical{Scalar(1), AtomFactory::make(AtomKind::PythDiff, {c, b, a})};
  return Canonical{Scalar(1), AtomFactory::make(AtomKind::PythDiff, {a, b, c})};
}

Canonical quad_dist(const PointRef& a, const PointRef& b) {
  if (a == b) return zero();
  if (b < a) return Canonical{Scalar(1), AtomFactory::make(AtomKind::QuadDist, {b, a})};
  return Canonical{Scalar(1), AtomFactory::make(AtomKind::QuadDist, {a, b})};
}

Canonical dist_ratio(const PointRef& a, const PointRef& b, const PointRef& c, const PointRef& d) {
  if (c == d) {
    throw Error(ErrorKind::DegenerateDenominator,
                "ratio " + a.name + b.name + "/" + c.name + d.name + " has a zero-length denominator");
  }
  if (a == b) return zero();
  int s = 1;
  PointRef n0 = a, n1 = b, d0 = c, d1 = d;
  if (n1 < n0) {
    std::swap(n0, n1);
    s = -s;
  }
  if (d1 < d0) {
    std::swap(d0, d1);
    s = -s;
  }
  if (n0 == d0 && n1 == d1) return Canonical{Scalar(s), std::nullopt};
  return Canonical{Scalar(s), AtomFactory::make(AtomKind::DistRatio, {n0, n1, d0, d1})};
}

Canonical canonicalize_atom(const RawAtom& raw) {
  auto need = [&](std::size_t n) {
    if (raw.points.size() != n) {
      throw Error(ErrorKind::InvalidArgument, "atom expects " + std::to_string(n) + " points");
    }
  };
  switch (raw.kind) {
    case AtomKind::SignedArea:
      need(3);
      return signed_area(raw.points[0], raw.points[1], raw.points[2]);
    case AtomKind::PythDiff:
      need(3);
      return pyth_diff(raw.points[0], raw.points[1], raw.points[2]);
    case AtomKind::QuadDist:
      need(2);
      return quad_dist(raw.points[0], raw.points[1]);
    case AtomKind::DistRatio:
      need(4);
      return dist_ratio(raw.points[0], raw.points[1], raw.points[2], raw.points[3]);
    case AtomKind::Parameter:
      return Canonical{Scalar(1), Atom::parameter(raw.parameter)};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown atom kind");
}

}  // namespace area
