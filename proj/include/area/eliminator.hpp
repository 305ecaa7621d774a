#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "area/construction.hpp"
#include "area/rational_expr.hpp"

namespace area {

enum class PatternKind { RatioWithY, LinearS, LinearP, QuadraticP };

/// An atom containing Y rewritten to a lemma shape:
///   LinearS     atom = sign * S[a,b,Y]
///   LinearP     atom = sign * P[a,b,Y]
///   QuadraticP  atom = sign * P[a,Y,b]
///   RatioWithY  atom = sign * (aY/cY)        when !d
///               atom = sign * (aY/cd)        when d
///               and the reciprocal of that when `inverted`.
struct QuantityPattern {
  PatternKind kind = PatternKind::LinearS;
  PointRef a;
  PointRef b;
  PointRef c;
  std::optional<PointRef> d;
  bool inverted = false;
  int sign = 1;
};

struct LemmaApplication {
  std::string lemma;   // "EL1".."EL13"
  std::string point;   // eliminated point
  std::string branch;  // linear, quadratic, on-line, off-line
  Atom atom;
  RationalExpr replacement;
};

/// Memo tables shared by the eliminators of one proof session.
struct EliminationCache {
  std::map<std::string, bool> side_conditions;
  std::map<std::string, bool> denominators;
};

/// Decides whether `e = 0` is provable over `prefix`.
using ZeroProver = std::function<bool(const Construction& prefix, const RationalExpr& e)>;

class Eliminator {
 public:
  Eliminator(const Construction& c, ZeroProver prover, EliminationCache* cache = nullptr);

  /// The constructed point of maximal order occurring in e.
  std::optional<PointRef> find_target_point(const RationalExpr& e) const;
  std::optional<PointRef> find_target_point(const std::set<Atom>& atoms) const;

  /// Throws UnsupportedShape when the atom has no lemma shape.
  QuantityPattern classify(const Atom& a, const PointRef& y) const;

  /// Whether cond = 0 is provable over the prefix holding its points.
  bool side_condition_holds(const RationalExpr& cond);

  /// Replacement for every atom of `atoms` that mentions y.
  std::map<Atom, RationalExpr> elimination_map(const std::set<Atom>& atoms, const PointRef& y,
                                               std::vector<LemmaApplication>& applied);

  RationalExpr eliminate_point(const RationalExpr& e, const PointRef& y, std::vector<LemmaApplication>& applied);

  /// Eliminates every constructed point; used to reduce lemma denominators.
  RationalExpr eliminate_all(RationalExpr e);

 private:
  struct Rewrite {
    RationalExpr value;
    std::vector<RationalExpr> denominators;
    std::string lemma;
    std::string branch;
  };

  Rewrite rewrite(const QuantityPattern& pat, const PointRef& y);
  Rewrite rewrite_ratio(const QuantityPattern& pat, const Step& step);
  void check_denominator(const RationalExpr& den, const std::string& lemma);

  const Construction& c_;
  ZeroProver prover_;
  EliminationCache own_cache_;
  EliminationCache* cache_;
};

}  // namespace area
