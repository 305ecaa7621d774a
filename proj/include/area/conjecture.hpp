#pragma once

#include <string>
#include <vector>

#include "area/expr_tree.hpp"

namespace area {

enum class Relation { Eq, Ne, Le, Lt, Ge, Gt };

const char* relation_symbol(Relation rel);
bool is_inequality(Relation rel);

/// lhs <rel> rhs.
struct Clause {
  Relation relation = Relation::Eq;
  ExprTree lhs;
  ExprTree rhs;

  std::string to_string() const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// A conjunction of clauses. `origin` is the predicate text the clauses were
/// expanded from, or empty for a raw relation.
struct Conjecture {
  std::vector<Clause> clauses;
  std::string origin;

  static Conjecture relation(ExprTree lhs, Relation rel, ExprTree rhs);

  std::string to_string() const;
  friend bool operator==(const Conjecture&, const Conjecture&) = default;
};

/// Goal predicates and their translations into clauses.
Conjecture collinear(const std::string& a, const std::string& b, const std::string& c);
Conjecture parallel(const std::string& a, const std::string& b, const std::string& c, const std::string& d);
Conjecture perpendicular(const std::string& a, const std::string& b, const std::string& c, const std::string& d);
Conjecture identical(const std::string& a, const std::string& b);
Conjecture midpoint(const std::string& m, const std::string& a, const std::string& b);
Conjecture eqdist(const std::string& a, const std::string& b, const std::string& c, const std::string& d);

}  // namespace area
