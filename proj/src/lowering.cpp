#include "area/lowering.hpp"

#include "area/errors.hpp"

namespace area {

namespace {

RationalExpr lower_quantity(const ExprNode& n, const PointResolver& resolve) {
  std::vector<PointRef> p;
  p.reserve(n.points.size());
  for (const auto& name : n.points) p.push_back(resolve(name));
  switch (n.quantity) {
    case QuantityKind::SignedArea:
      return RationalExpr(signed_area(p[0], p[1], p[2]));
    case QuantityKind::SignedArea4:
      return RationalExpr(signed_area(p[0], p[1], p[2])) + RationalExpr(signed_area(p[0], p[2], p[3]));
    case QuantityKind::PythDiff:
      return RationalExpr(pyth_diff(p[0], p[1], p[2]));
    case QuantityKind::PythDiff4:
      return RationalExpr(pyth_diff(p[0], p[1], p[3])) - RationalExpr(pyth_diff(p[2], p[1], p[3]));
    case QuantityKind::QuadDist:
      return RationalExpr(pyth_diff(p[0], p[1], p[0])) * RationalExpr(Scalar(1, 2));
    case QuantityKind::DistRatio:
      return RationalExpr(dist_ratio(p[0], p[1], p[2], p[3]));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quantity kind");
}

template <class R, class Leaf>
R lower_generic(const ExprTree& e, const Leaf& leaf) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Const:
    case NodeKind::Param:
    case NodeKind::Quantity:
    case NodeKind::Sqrt:
      return leaf(e);
    case NodeKind::Sum: {
      R out{};
      for (const auto& c : n.children) out = out + lower_generic<R>(c, leaf);
      return out;
    }
    case NodeKind::Neg:
      return R{} - lower_generic<R>(n.children[0], leaf);
    case NodeKind::Product: {
      R out(RationalExpr(1));
      for (const auto& c : n.children) out = out * lower_generic<R>(c, leaf);
      return out;
    }
    case NodeKind::Quotient:
      return lower_generic<R>(n.children[0], leaf) / lower_generic<R>(n.children[1], leaf);
    case NodeKind::Power:
      return lower_generic<R>(n.children[0], leaf).pow(n.exponent);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown node kind");
}

RationalExpr lower_leaf(const ExprTree& e, const PointResolver& resolve) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Const:
      return RationalExpr(n.value);
    case NodeKind::Param:
      return RationalExpr(Atom::parameter(n.name));
    case NodeKind::Quantity:
      return lower_quantity(n, resolve);
    default:
      throw Error(ErrorKind::UnsupportedShape, "sqrt is only supported in inequality goals");
  }
}

}  // namespace

PointRef unbound_point(const std::string& name) { return PointRef{name, 0}; }

RationalExpr lower(const ExprTree& e, const PointResolver& resolve) {
  return lower_generic<RationalExpr>(e, [&](const ExprTree& leaf) { return lower_leaf(leaf, resolve); });
}

SurdSum<RationalExpr> lower_surd(const ExprTree& e, const PointResolver& resolve) {
  return lower_generic<SurdSum<RationalExpr>>(e, [&](const ExprTree& leaf) -> SurdSum<RationalExpr> {
    if (leaf.kind() != NodeKind::Sqrt) return SurdSum<RationalExpr>(lower_leaf(leaf, resolve));
    const ExprTree& arg = leaf.children()[0];
    if (arg.contains_sqrt()) throw Error(ErrorKind::UnsupportedShape, "nested sqrt is not supported");
    RationalExpr radicand = lower(arg, resolve);
    if (radicand.is_constant()) {
      Scalar v = radicand.num().constant_term();
      if (sgn(v) < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of the negative constant " + to_string(v));
      Scalar root;
      if (exact_sqrt(v, root)) return SurdSum<RationalExpr>(RationalExpr(root));
    }
    return SurdSum<RationalExpr>::root(std::move(radicand));
  });
}

}  // namespace area
