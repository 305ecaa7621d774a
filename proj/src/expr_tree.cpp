#include "area/expr_tree.hpp"

#include "area/errors.hpp"

namespace area {

namespace {

std::shared_ptr<const ExprNode> make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

std::string join_points(const std::vector<std::string>& pts, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ",";
    out += pts[i];
  }
  return out;
}

bool is_primary(const ExprTree& e) {
  switch (e.kind()) {
    case NodeKind::Quantity:
    case NodeKind::Param:
    case NodeKind::Sqrt:
      return true;
    case NodeKind::Const:
      return sgn(e.node().value) >= 0 && e.node().value.get_den() == 1;
    default:
      return false;
  }
}

std::string render(const ExprTree& e);

std::string render_product_level(const ExprTree& e) {
  if (e.kind() == NodeKind::Sum || e.kind() == NodeKind::Neg) return "(" + render(e) + ")";
  return render(e);
}

std::string render_factor(const ExprTree& e) {
  // Inside products and as quotient denominators.
  if (is_primary(e) || e.kind() == NodeKind::Power) return render(e);
  return "(" + render(e) + ")";
}

std::string render_const(const Scalar& v) {
  if (v.get_den() == 1) return v.get_str();
  return "(" + v.get_str() + ")";
}

std::string render(const ExprTree& e) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Const:
      return render_const(n.value);
    case NodeKind::Param:
      return n.name;
    case NodeKind::Quantity:
      switch (n.quantity) {
        case QuantityKind::SignedArea:
        case QuantityKind::SignedArea4:
          return "S[" + join_points(n.points, 0, n.points.size()) + "]";
        case QuantityKind::PythDiff:
        case QuantityKind::PythDiff4:
          return "P[" + join_points(n.points, 0, n.points.size()) + "]";
        case QuantityKind::QuadDist:
          return "d2(" + join_points(n.points, 0, 2) + ")";
        case QuantityKind::DistRatio:
          return "ratio(" + join_points(n.points, 0, 2) + ";" + join_points(n.points, 2, 4) + ")";
      }
      return "?";
    case NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const ExprTree& c = n.children[i];
        bool negative = c.kind() == NodeKind::Neg ||
                        (c.kind() == NodeKind::Const && sgn(c.node().value) < 0);
        if (i == 0) {
          if (c.kind() == NodeKind::Sum) {
            out += "(" + render(c) + ")";
          } else {
            out += render(c);
          }
          continue;
        }
        if (negative) {
          const ExprTree inner = c.kind() == NodeKind::Neg ? c.children()[0] : ExprTree::constant(-c.node().value);
          out += " - " + render_product_level(inner);
        } else {
          out += " + " + render_product_level(c);
        }
      }
      return out;
    }
    case NodeKind::Neg:
      return "-" + render_product_level(n.children[0]);
    case NodeKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += "*";
        const ExprTree& c = n.children[i];
        // A leading quotient or power can be written bare; anything else
        // non-primary needs grouping to survive re-parsing.
        out += (i == 0 && c.kind() == NodeKind::Power) ? render(c) : render_factor(c);
      }
      return out;
    }
    case NodeKind::Quotient: {
      const ExprTree& num = n.children[0];
      std::string left = (num.kind() == NodeKind::Product || num.kind() == NodeKind::Quotient || is_primary(num) ||
                          num.kind() == NodeKind::Power)
                             ? render(num)
                             : "(" + render(num) + ")";
      return left + "/" + render_factor(n.children[1]);
    }
    case NodeKind::Power: {
      std::string base = is_primary(n.children[0]) ? render(n.children[0]) : "(" + render(n.children[0]) + ")";
      std::string exp = n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent);
      return base + "^" + exp;
    }
    case NodeKind::Sqrt: {
      const ExprTree& c = n.children[0];
      if (c.kind() == NodeKind::Quantity && c.node().quantity == QuantityKind::QuadDist) {
        return "dist(" + join_points(c.node().points, 0, 2) + ")";
      }
      return "sqrt(" + render(c) + ")";
    }
  }
  return "?";
}

}  // namespace

ExprTree::ExprTree() : node_(make(ExprNode{})) {}

ExprTree ExprTree::constant(const Scalar& value) {
  ExprNode n;
  n.kind = NodeKind::Const;
  n.value = value;
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::quantity(QuantityKind kind, std::vector<std::string> points) {
  std::size_t expected = 3;
  switch (kind) {
    case QuantityKind::SignedArea4:
    case QuantityKind::PythDiff4:
    case QuantityKind::DistRatio:
      expected = 4;
      break;
    case QuantityKind::QuadDist:
      expected = 2;
      break;
    default:
      break;
  }
  if (points.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, "quantity expects " + std::to_string(expected) + " points");
  }
  ExprNode n;
  n.kind = NodeKind::Quantity;
  n.quantity = kind;
  n.points = std::move(points);
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::param(std::string name) {
  ExprNode n;
  n.kind = NodeKind::Param;
  n.name = std::move(name);
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::sum(std::vector<ExprTree> terms) {
  if (terms.empty()) return constant(Scalar(0));
  if (terms.size() == 1) return terms[0];
  ExprNode n;
  n.kind = NodeKind::Sum;
  n.children = std::move(terms);
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::neg(ExprTree e) {
  if (e.kind() == NodeKind::Const) return constant(-e.node().value);
  if (e.kind() == NodeKind::Neg) return e.children()[0];
  ExprNode n;
  n.kind = NodeKind::Neg;
  n.children = {std::move(e)};
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::product(std::vector<ExprTree> factors) {
  if (factors.empty()) return constant(Scalar(1));
  if (factors.size() == 1) return factors[0];
  ExprNode n;
  n.kind = NodeKind::Product;
  n.children = std::move(factors);
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::quotient(ExprTree num, ExprTree den) {
  if (num.kind() == NodeKind::Const && den.kind() == NodeKind::Const && sgn(den.node().value) != 0) {
    return constant(num.node().value / den.node().value);
  }
  ExprNode n;
  n.kind = NodeKind::Quotient;
  n.children = {std::move(num), std::move(den)};
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::power(ExprTree base, int exponent) {
  ExprNode n;
  n.kind = NodeKind::Power;
  n.children = {std::move(base)};
  n.exponent = exponent;
  return ExprTree(make(std::move(n)));
}

ExprTree ExprTree::sqrt(ExprTree radicand) {
  ExprNode n;
  n.kind = NodeKind::Sqrt;
  n.children = {std::move(radicand)};
  return ExprTree(make(std::move(n)));
}

bool ExprTree::contains_sqrt() const {
  if (kind() == NodeKind::Sqrt) return true;
  for (const auto& c : children()) {
    if (c.contains_sqrt()) return true;
  }
  return false;
}

void ExprTree::collect_points(std::set<std::string>& out) const {
  if (kind() == NodeKind::Quantity) out.insert(node_->points.begin(), node_->points.end());
  for (const auto& c : children()) c.collect_points(out);
}

void ExprTree::collect_params(std::set<std::string>& out) const {
  if (kind() == NodeKind::Param) out.insert(node_->name);
  for (const auto& c : children()) c.collect_params(out);
}

std::string ExprTree::to_string() const { return render(*this); }

bool operator==(const ExprTree& a, const ExprTree& b) {
  if (a.node_ == b.node_) return true;
  const ExprNode& x = *a.node_;
  const ExprNode& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case NodeKind::Const:
      return x.value == y.value;
    case NodeKind::Quantity:
      return x.quantity == y.quantity && x.points == y.points;
    case NodeKind::Param:
      return x.name == y.name;
    case NodeKind::Power:
      if (x.exponent != y.exponent) return false;
      break;
    default:
      break;
  }
  return x.children == y.children;
}

ExprTree expand_quaternary(const ExprTree& e) {
  const ExprNode& n = e.node();
  if (n.kind == NodeKind::Quantity) {
    const auto& p = n.points;
    if (n.quantity == QuantityKind::SignedArea4) {
      return ExprTree::sum({ExprTree::S({p[0], p[1], p[2]}), ExprTree::S({p[0], p[2], p[3]})});
    }
    if (n.quantity == QuantityKind::PythDiff4) {
      return ExprTree::sum({ExprTree::P({p[0], p[1], p[3]}), ExprTree::neg(ExprTree::P({p[2], p[1], p[3]}))});
    }
    return e;
  }
  if (n.children.empty()) return e;
  std::vector<ExprTree> kids;
  kids.reserve(n.children.size());
  bool changed = false;
  for (const auto& c : n.children) {
    kids.push_back(expand_quaternary(c));
    if (!(kids.back() == c)) changed = true;
  }
  if (!changed) return e;
  switch (n.kind) {
    case NodeKind::Sum: return ExprTree::sum(std::move(kids));
    case NodeKind::Neg: return ExprTree::neg(kids[0]);
    case NodeKind::Product: return ExprTree::product(std::move(kids));
    case NodeKind::Quotient: return ExprTree::quotient(kids[0], kids[1]);
    case NodeKind::Power: return ExprTree::power(kids[0], n.exponent);
    case NodeKind::Sqrt: return ExprTree::sqrt(kids[0]);
    default: return e;
  }
}

}  // namespace area
