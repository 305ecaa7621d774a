#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "area/scalar.hpp"

namespace area {

/// Quantities as they appear in source text, naming points.
enum class QuantityKind {
  SignedArea,     // S[a,b,c]
  SignedArea4,    // S[a,b,c,d]
  PythDiff,       // P[a,b,c]
  PythDiff4,      // P[a,b,c,d]
  QuadDist,       // d2(a,b)
  DistRatio,      // ratio(a,b;c,d)
};

enum class NodeKind { Const, Quantity, Param, Sum, Neg, Product, Quotient, Power, Sqrt };

class ExprTree;

struct ExprNode {
  NodeKind kind = NodeKind::Const;
  Scalar value;                     // Const
  QuantityKind quantity = QuantityKind::SignedArea;
  std::vector<std::string> points;  // Quantity
  std::string name;                 // Param
  std::vector<ExprTree> children;   // Sum, Neg, Product, Quotient, Power, Sqrt
  int exponent = 1;                 // Power
};

/// Immutable expression tree over constants, geometric quantities and
/// parameters. Cheap to copy; nodes are shared.
class ExprTree {
 public:
  ExprTree();  // the constant 0

  static ExprTree constant(const Scalar& value);
  static ExprTree quantity(QuantityKind kind, std::vector<std::string> points);
  static ExprTree param(std::string name);
  static ExprTree sum(std::vector<ExprTree> terms);
  static ExprTree neg(ExprTree e);
  static ExprTree product(std::vector<ExprTree> factors);
  static ExprTree quotient(ExprTree num, ExprTree den);
  static ExprTree power(ExprTree base, int exponent);
  static ExprTree sqrt(ExprTree radicand);

  static ExprTree S(std::vector<std::string> pts) {
    QuantityKind kind = pts.size() == 4 ? QuantityKind::SignedArea4 : QuantityKind::SignedArea;
    return quantity(kind, std::move(pts));
  }
  static ExprTree P(std::vector<std::string> pts) {
    QuantityKind kind = pts.size() == 4 ? QuantityKind::PythDiff4 : QuantityKind::PythDiff;
    return quantity(kind, std::move(pts));
  }

  const ExprNode& node() const { return *node_; }
  NodeKind kind() const { return node_->kind; }
  const std::vector<ExprTree>& children() const { return node_->children; }

  bool contains_sqrt() const;
  /// Point names referenced by quantities.
  void collect_points(std::set<std::string>& out) const;
  void collect_params(std::set<std::string>& out) const;

  /// Source-syntax rendering that the DSL parser reads back to an equal tree.
  std::string to_string() const;

  friend bool operator==(const ExprTree& a, const ExprTree& b);
  friend ExprTree operator+(const ExprTree& a, const ExprTree& b) { return sum({a, b}); }
  friend ExprTree operator-(const ExprTree& a, const ExprTree& b) { return sum({a, neg(b)}); }
  friend ExprTree operator*(const ExprTree& a, const ExprTree& b) { return product({a, b}); }
  friend ExprTree operator/(const ExprTree& a, const ExprTree& b) { return quotient(a, b); }

 private:
  explicit ExprTree(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

/// Rewrites S[w,x,y,z] to S[w,x,y] + S[w,y,z] and P[w,x,y,z] to
/// P[w,x,z] - P[y,x,z]; ternary quantities are left unchanged.
ExprTree expand_quaternary(const ExprTree& e);

}  // namespace area
