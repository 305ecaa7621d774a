#include "area/inequality.hpp"

namespace area {

namespace {

void note(InequalityContext& ctx, const std::string& line) {
  if (ctx.note) ctx.note(line);
}

/// Sign of a coefficient when it can be established: +1, -1 or 0 (unknown).
int coefficient_sign(const RationalExpr& k, InequalityContext& ctx) {
  if (k.is_constant()) return sgn(k.num().constant_term());
  if (rational_nonnegative(k, false, ctx)) return 1;
  if (rational_nonnegative(-k, false, ctx)) return -1;
  return 0;
}

SurdSum<RationalExpr> sum_of(const std::vector<std::pair<RationalExpr, RationalExpr>>& terms) {
  SurdSum<RationalExpr> out;
  for (const auto& [k, r] : terms) out.add_root(k, r);
  return out;
}

}  // namespace

Polynomial sign_polynomial(const RationalExpr& f) {
  Polynomial p = f.num();
  for (const auto& factor : f.den_factors()) {
    if (factor.exponent % 2 == 1) p = p * factor.base;
  }
  return p;
}

bool syntactically_nonnegative(const Polynomial& p, bool strict) {
  if (p.is_zero()) return !strict;
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) <= 0) return false;
    for (const auto& [atom, e] : m.factors()) {
      if (atom.kind() != AtomKind::QuadDist && e % 2 != 0) return false;
    }
  }
  return !strict || sgn(p.constant_term()) > 0;
}

bool rational_nonnegative(const RationalExpr& f, bool strict, InequalityContext& ctx) {
  if (f.is_zero()) return !strict;
  Polynomial p = sign_polynomial(f);
  if (syntactically_nonnegative(p, strict)) return true;
  if (!ctx.to_coords) return false;
  auto coords = ctx.to_coords(RationalExpr(p));
  if (!coords) return false;
  if (coords->is_zero()) return !strict;
  Polynomial q = sign_polynomial(*coords);
  if (syntactically_nonnegative(q, strict)) {
    note(ctx, "nonnegative in area coordinates: " + q.to_string());
    return true;
  }
  if (strict) return false;
  if (auto root = q.square_root()) {
    note(ctx, "perfect square in area coordinates: " + to_string(root->first) + "*(" + root->second.to_string() +
                  ")^2");
    return true;
  }
  return false;
}

bool prove_nonnegative(const SurdSum<RationalExpr>& f, bool strict, InequalityContext& ctx, int depth) {
  if (!f.has_roots()) return rational_nonnegative(f.rational, strict, ctx);
  if (depth >= 2) return false;

  std::vector<std::pair<RationalExpr, RationalExpr>> pos, neg;
  for (const auto& [k, r] : f.roots) {
    int s = coefficient_sign(k, ctx);
    if (s > 0) {
      pos.emplace_back(k, r);
    } else if (s < 0) {
      neg.emplace_back(-k, r);
    } else {
      return false;
    }
  }
  const RationalExpr& p = f.rational;

  if (neg.empty()) {
    if (rational_nonnegative(p, strict, ctx)) return true;
    if (pos.size() != 1) return false;
    // p + k*sqrt(X) >= 0 when k^2 X >= p^2.
    const auto& [k, x] = pos.front();
    note(ctx, "square: " + k.to_string() + "*sqrt(" + x.to_string() + ") >= -(" + p.to_string() + ")");
    return rational_nonnegative(k * k * x - p * p, strict, ctx);
  }
  if (pos.empty()) {
    // p - N >= 0 needs p >= 0 and p^2 >= N^2.
    if (!rational_nonnegative(p, strict, ctx)) return false;
    SurdSum<RationalExpr> n = sum_of(neg);
    note(ctx, "square: " + p.to_string() + " >= sum of roots");
    return prove_nonnegative(SurdSum<RationalExpr>(p * p) - n * n, strict, ctx, depth + 1);
  }
  // (p + L) - R >= 0 with L, R >= 0 follows from (p + L)^2 >= R^2 once p >= 0.
  if (!p.is_zero() && !rational_nonnegative(p, false, ctx)) return false;
  SurdSum<RationalExpr> left = SurdSum<RationalExpr>(p) + sum_of(pos);
  SurdSum<RationalExpr> right = sum_of(neg);
  note(ctx, "square both sides");
  return prove_nonnegative(left * left - right * right, strict, ctx, depth + 1);
}

}  // namespace area
