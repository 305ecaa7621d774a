#include "area/conjecture.hpp"

namespace area {

const char* relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
  }
  return "?";
}

bool is_inequality(Relation rel) { return rel != Relation::Eq && rel != Relation::Ne; }

std::string Clause::to_string() const {
  return lhs.to_string() + " " + relation_symbol(relation) + " " + rhs.to_string();
}

Conjecture Conjecture::relation(ExprTree lhs, Relation rel, ExprTree rhs) {
  return Conjecture{{Clause{rel, std::move(lhs), std::move(rhs)}}, {}};
}

std::string Conjecture::to_string() const {
  if (!origin.empty()) return origin;
  std::string out;
  for (const auto& c : clauses) {
    if (!out.empty()) out += " and ";
    out += c.to_string();
  }
  return out;
}

namespace {

const ExprTree kZero = ExprTree::constant(Scalar(0));

Clause nonzero_segment(const std::string& a, const std::string& b) {
  return Clause{Relation::Ne, ExprTree::P({a, b, a}), kZero};
}

}  // namespace

Conjecture collinear(const std::string& a, const std::string& b, const std::string& c) {
  return Conjecture{{Clause{Relation::Eq, ExprTree::S({a, b, c}), kZero}},
                    "collinear(" + a + "," + b + "," + c + ")"};
}

Conjecture parallel(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return Conjecture{{nonzero_segment(a, b), nonzero_segment(c, d),
                     Clause{Relation::Eq, ExprTree::S({a, c, d}), ExprTree::S({b, c, d})}},
                    "parallel(" + a + "," + b + ";" + c + "," + d + ")"};
}

Conjecture perpendicular(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return Conjecture{{nonzero_segment(a, b), nonzero_segment(c, d),
                     Clause{Relation::Eq, ExprTree::P({a, c, d}), ExprTree::P({b, c, d})}},
                    "perpendicular(" + a + "," + b + ";" + c + "," + d + ")"};
}

Conjecture identical(const std::string& a, const std::string& b) {
  return Conjecture{{Clause{Relation::Eq, ExprTree::P({a, b, a}), kZero}}, "identical(" + a + "," + b + ")"};
}

Conjecture midpoint(const std::string& m, const std::string& a, const std::string& b) {
  return Conjecture{{Clause{Relation::Eq, ExprTree::S({a, m, b}), kZero},
                     Clause{Relation::Eq, ExprTree::quantity(QuantityKind::DistRatio, {a, m, a, b}),
                            ExprTree::constant(Scalar(1, 2))}},
                    "midpoint(" + m + ";" + a + "," + b + ")"};
}

Conjecture eqdist(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return Conjecture{{Clause{Relation::Eq, ExprTree::quantity(QuantityKind::QuadDist, {a, b}),
                            ExprTree::quantity(QuantityKind::QuadDist, {c, d})}},
                    "eqdist(" + a + "," + b + ";" + c + "," + d + ")"};
}

}  // namespace area
