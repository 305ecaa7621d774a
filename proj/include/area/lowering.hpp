#pragma once

#include <functional>
#include <string>

#include "area/atom.hpp"
#include "area/expr_tree.hpp"
#include "area/rational_expr.hpp"
#include "area/surd.hpp"

namespace area {

using PointResolver = std::function<PointRef(const std::string&)>;

/// Resolves every name to order 0, so canonical forms fall back to name order.
PointRef unbound_point(const std::string& name);

/// Translates a surd-free tree into the atom algebra. Quaternary quantities
/// are expanded and d2(a,b) becomes P[a,b,a]/2. Throws UnsupportedShape on
/// sqrt nodes.
RationalExpr lower(const ExprTree& e, const PointResolver& resolve);

/// Like lower(), but sqrt nodes become surd terms.
SurdSum<RationalExpr> lower_surd(const ExprTree& e, const PointResolver& resolve);

}  // namespace area
