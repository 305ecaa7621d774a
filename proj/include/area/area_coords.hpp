#pragma once

#include <utility>

#include "area/construction.hpp"
#include "area/rational_expr.hpp"

namespace area {

/// Orthonormal frame {OX, OY}: O and X are the first two free points, Y is
/// added by ECS5(Y,O,X,1).
struct Frame {
  PointRef o;
  PointRef x;
  PointRef y;

  /// S[O,X,Y], the only frame quantity kept symbolic.
  Atom w() const;
  /// S[O,X,a] and S[O,Y,a] as expressions in canonical atoms.
  RationalExpr sx(const PointRef& a) const;
  RationalExpr sy(const PointRef& a) const;
  bool is_coordinate_atom(const Atom& atom) const;
};

/// Extends c by the frame point. Idempotent on an already framed
/// construction. Throws TooFewFreePoints.
std::pair<Construction, Frame> install_frame(const Construction& c);

/// Rewrites signed areas and squared distances into area coordinates and
/// reduces S[O,X,Y]^2 to 1/4. The result has the form (p0 + w*p1)/d with d
/// free of w. Throws UnsupportedAtom for ratios.
RationalExpr to_area_coordinates(const RationalExpr& e, const Frame& f);

/// num = even + w*odd for a result of to_area_coordinates.
struct FrameSplit {
  Polynomial even;
  Polynomial odd;
};
FrameSplit split_by_frame(const Polynomial& p, const Frame& f);

}  // namespace area
