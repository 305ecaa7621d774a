#include "area/area_coords.hpp"

#include "area/errors.hpp"

namespace area {

namespace {

std::string fresh_name(const Construction& c) {
  if (!c.has_point("Y") && !c.parameters().count("Y")) return "Y";
  for (int i = 1;; ++i) {
    std::string name = "Y" + std::to_string(i);
    if (!c.has_point(name) && !c.parameters().count(name)) return name;
  }
}

/// Replaces w^k by (1/4)^(k/2) * w^(k mod 2).
Polynomial reduce_frame_powers(const Polynomial& p, const Atom& w) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int k = m.exponent_of(w);
    if (k < 2) {
      out.add_term(m, c);
      continue;
    }
    Scalar factor = c;
    for (int i = 0; i < k / 2; ++i) factor /= 4;
    Monomial rest = m.without(w);
    if (k % 2 == 1) rest = rest * Monomial(w);
    out.add_term(rest, factor);
  }
  return out;
}

}  // namespace

Atom Frame::w() const { return *signed_area(o, x, y).atom; }

RationalExpr Frame::sx(const PointRef& a) const { return RationalExpr(signed_area(o, x, a)); }
RationalExpr Frame::sy(const PointRef& a) const { return RationalExpr(signed_area(o, y, a)); }

bool Frame::is_coordinate_atom(const Atom& atom) const {
  if (atom.kind() != AtomKind::SignedArea) return false;
  bool has_o = false, has_x = false, has_y = false;
  for (const auto& p : atom.points()) {
    has_o |= p.name == o.name;
    has_x |= p.name == x.name;
    has_y |= p.name == y.name;
  }
  return has_o && (has_x || has_y);
}

std::pair<Construction, Frame> install_frame(const Construction& c) {
  auto free = c.free_points();
  if (free.size() < 2) {
    throw Error(ErrorKind::TooFewFreePoints, "area coordinates need at least two free points");
  }
  const PointRef& o = free[0];
  const PointRef& x = free[1];
  if (!c.steps().empty()) {
    const Step& last = c.steps().back();
    if (last.kind == StepKind::ECS5 && last.arg(0) == o.name && last.arg(1) == x.name && last.r &&
        *last.r == ExprTree::constant(Scalar(1))) {
      return {c, Frame{o, x, c.point(last.y())}};
    }
  }
  std::string name = fresh_name(c);
  Construction framed = c.with_step(Step::on_perpendicular(name, o.name, x.name, ExprTree::constant(Scalar(1))));
  return {framed, Frame{o, x, framed.point(name)}};
}

RationalExpr to_area_coordinates(const RationalExpr& input, const Frame& f) {
  RationalExpr e = expand_pythagoras(input);
  const Atom w = f.w();
  RationalExpr four_w = RationalExpr(4) * RationalExpr(w);

  std::map<Atom, RationalExpr> acl;
  for (const auto& atom : e.atoms()) {
    switch (atom.kind()) {
      case AtomKind::Parameter:
        break;
      case AtomKind::DistRatio:
        throw Error(ErrorKind::UnsupportedAtom, "area coordinates do not cover " + atom.to_string());
      case AtomKind::PythDiff:
        throw Error(ErrorKind::UnsupportedAtom, "unexpanded " + atom.to_string());
      case AtomKind::SignedArea: {
        if (f.is_coordinate_atom(atom)) break;
        auto p = atom.points();
        const PointRef &a = p[0], &b = p[1], &c = p[2];
        RationalExpr l = (f.sy(b) - f.sy(c)) * f.sx(a) + (f.sy(c) - f.sy(a)) * f.sx(b) + (f.sy(a) - f.sy(b)) * f.sx(c);
        acl.emplace(atom, four_w * l);
        break;
      }
      case AtomKind::QuadDist: {
        auto p = atom.points();
        RationalExpr dy = f.sy(p[0]) - f.sy(p[1]);
        RationalExpr dx = f.sx(p[0]) - f.sx(p[1]);
        acl.emplace(atom, RationalExpr(4) * (dy * dy + dx * dx));
        break;
      }
    }
  }
  RationalExpr sub = acl.empty() ? e : substitute(e, acl);

  Polynomial num = reduce_frame_powers(sub.num(), w);
  std::vector<DenFactor> den;
  for (const auto& factor : sub.den_factors()) {
    FrameSplit s = split_by_frame(reduce_frame_powers(factor.base, w), f);
    if (s.odd.is_zero()) {
      den.push_back(DenFactor{s.even, factor.exponent});
    } else if (s.even.is_zero()) {
      // 1/(w*b) = 4w/b
      num = num * (Polynomial(Monomial(w), Scalar(4)).pow(factor.exponent));
      den.push_back(DenFactor{s.odd, factor.exponent});
    } else {
      // Multiply by the conjugate: (a + w b)(a - w b) = a^2 - b^2/4.
      Polynomial conj = s.even - Polynomial(Monomial(w), Scalar(1)) * s.odd;
      num = num * conj.pow(factor.exponent);
      den.push_back(DenFactor{s.even * s.even - s.odd * s.odd * Scalar(1, 4), factor.exponent});
    }
    num = reduce_frame_powers(num, w);
  }
  return RationalExpr::normalized(std::move(num), std::move(den));
}

FrameSplit split_by_frame(const Polynomial& p, const Frame& f) {
  const Atom w = f.w();
  FrameSplit out;
  for (const auto& [m, c] : p.terms()) {
    int k = m.exponent_of(w);
    if (k == 0) {
      out.even.add_term(m, c);
    } else if (k == 1) {
      out.odd.add_term(m.without(w), c);
    } else {
      throw Error(ErrorKind::ResidualOddPower, "unreduced power of " + w.to_string());
    }
  }
  return out;
}

}  // namespace area
