#include "area/eliminator.hpp"

#include <algorithm>

#include "area/errors.hpp"

namespace area {

namespace {

RationalExpr S(const PointRef& a, const PointRef& b, const PointRef& c) { return RationalExpr(signed_area(a, b, c)); }
RationalExpr S4(const PointRef& w, const PointRef& x, const PointRef& y, const PointRef& z) {
  return S(w, x, y) + S(w, y, z);
}
RationalExpr P(const PointRef& a, const PointRef& b, const PointRef& c) { return RationalExpr(pyth_diff(a, b, c)); }
RationalExpr P4(const PointRef& w, const PointRef& x, const PointRef& y, const PointRef& z) {
  return P(w, x, z) - P(y, x, z);
}
RationalExpr R(const PointRef& a, const PointRef& b, const PointRef& c, const PointRef& d) {
  return RationalExpr(dist_ratio(a, b, c, d));
}

/// Moves y to the second slot of a segment, tracking ab = -ba.
void orient(PointRef& first, PointRef& second, const std::string& y, int& sign) {
  if (first.name == y) {
    std::swap(first, second);
    sign = -sign;
  }
}

}  // namespace

Eliminator::Eliminator(const Construction& c, ZeroProver prover, EliminationCache* cache)
    : c_(c), prover_(std::move(prover)), cache_(cache ? cache : &own_cache_) {}

std::optional<PointRef> Eliminator::find_target_point(const std::set<Atom>& atoms) const {
  std::optional<PointRef> best;
  for (const auto& atom : atoms) {
    if (atom.kind() == AtomKind::Parameter) continue;
    for (const auto& p : atom.points()) {
      if (!c_.has_point(p.name) || c_.is_free(p.name)) continue;
      if (!best || best->order < p.order) best = p;
    }
  }
  return best;
}

std::optional<PointRef> Eliminator::find_target_point(const RationalExpr& e) const {
  return find_target_point(e.atoms());
}

QuantityPattern Eliminator::classify(const Atom& atom, const PointRef& y) const {
  auto p = atom.points();
  QuantityPattern out;
  switch (atom.kind()) {
    case AtomKind::SignedArea: {
      // Cyclic rotation keeps the sign.
      std::size_t i = std::find_if(p.begin(), p.end(), [&](const PointRef& q) { return q.name == y.name; }) - p.begin();
      out.kind = PatternKind::LinearS;
      out.a = p[(i + 1) % 3];
      out.b = p[(i + 2) % 3];
      return out;
    }
    case AtomKind::PythDiff: {
      if (p[1].name == y.name) {
        out.kind = PatternKind::QuadraticP;
        out.a = p[0];
        out.b = p[2];
        return out;
      }
      if (p[0].name == y.name && p[2].name == y.name) {
        // P[Y,b,Y] = P[b,Y,b]
        out.kind = PatternKind::QuadraticP;
        out.a = p[1];
        out.b = p[1];
        return out;
      }
      out.kind = PatternKind::LinearP;
      out.b = p[1];
      out.a = p[2].name == y.name ? p[0] : p[2];
      return out;
    }
    case AtomKind::QuadDist:
      // d2(a,Y) = P[a,Y,a]/2; handled by the caller through QuadraticP.
      out.kind = PatternKind::QuadraticP;
      out.a = p[0].name == y.name ? p[1] : p[0];
      out.b = out.a;
      return out;
    case AtomKind::DistRatio: {
      PointRef a = p[0], b = p[1], c = p[2], d = p[3];
      int sign = 1;
      bool num_has = a.name == y.name || b.name == y.name;
      bool den_has = c.name == y.name || d.name == y.name;
      orient(a, b, y.name, sign);
      orient(c, d, y.name, sign);
      out.kind = PatternKind::RatioWithY;
      out.sign = sign;
      if (num_has && den_has) {
        out.a = a;
        out.c = c;
        return out;
      }
      if (num_has) {
        out.a = a;
        out.c = c;
        out.d = d;
        return out;
      }
      if (den_has) {
        out.a = c;
        out.c = a;
        out.d = b;
        out.inverted = true;
        return out;
      }
      break;
    }
    case AtomKind::Parameter:
      break;
  }
  throw Error(ErrorKind::UnsupportedShape, "no elimination lemma matches " + atom.to_string());
}

bool Eliminator::side_condition_holds(const RationalExpr& cond) {
  if (cond.is_zero()) return true;
  if (cond.is_constant()) return false;
  int order = 0;
  for (const auto& atom : cond.atoms()) order = std::max(order, atom.max_order());
  std::string key = std::to_string(order) + "|" + cond.to_string();
  auto it = cache_->side_conditions.find(key);
  if (it != cache_->side_conditions.end()) return it->second;
  bool holds = prover_(c_.prefix(order), cond);
  cache_->side_conditions.emplace(key, holds);
  return holds;
}

void Eliminator::check_denominator(const RationalExpr& den, const std::string& lemma) {
  if (den.is_zero()) {
    throw Error(ErrorKind::DegenerateDenominator, lemma + " denominator is identically zero");
  }
  if (den.is_constant()) return;
  std::string key = den.to_string();
  auto it = cache_->denominators.find(key);
  bool zero;
  if (it != cache_->denominators.end()) {
    zero = it->second;
  } else {
    zero = eliminate_all(den).is_zero();
    cache_->denominators.emplace(key, zero);
  }
  if (zero) {
    throw Error(ErrorKind::DegenerateDenominator,
                lemma + " denominator " + den.to_string() + " vanishes in this construction");
  }
}

Eliminator::Rewrite Eliminator::rewrite_ratio(const QuantityPattern& pat, const Step& step) {
  auto pt = [&](std::size_t i) { return c_.point(step.arg(i)); };
  const PointRef& A = pat.a;
  const PointRef& C = pat.c;
  const bool same = !pat.d.has_value();
  Rewrite out;
  switch (step.kind) {
    case StepKind::ECS2: {
      PointRef U = pt(0), V = pt(1), Pp = pt(2), Q = pt(3);
      out.lemma = "EL1";
      bool on = side_condition_holds(S(A, U, V));
      out.branch = on ? "on-line" : "off-line";
      RationalExpr num = on ? S(A, Pp, Q) : S(A, U, V);
      RationalExpr den = same ? (on ? S(C, Pp, Q) : S(C, U, V)) : (on ? S4(C, Pp, *pat.d, Q) : S4(C, U, *pat.d, V));
      out.denominators.push_back(den);
      out.value = num / den;
      return out;
    }
    case StepKind::ECS3: {
      PointRef Pp = pt(0), U = pt(1), V = pt(2);
      out.lemma = "EL2";
      bool on = side_condition_holds(S(A, U, V));
      out.branch = on ? "on-line" : "off-line";
      RationalExpr num, den;
      if (on && same) {
        RationalExpr puv = P(Pp, U, V), pvu = P(Pp, V, U);
        num = puv * P4(Pp, C, A, V) + pvu * P4(Pp, C, A, U);
        den = puv * P(C, V, C) + pvu * P(C, U, C) - puv * pvu;
      } else if (on) {
        num = P4(Pp, C, A, *pat.d);
        den = P(C, *pat.d, C);
      } else {
        num = S(A, U, V);
        den = same ? S(C, U, V) : S4(C, U, *pat.d, V);
      }
      out.denominators.push_back(den);
      out.value = num / den;
      return out;
    }
    case StepKind::ECS4: {
      PointRef Rr = pt(0), Pp = pt(1), Q = pt(2);
      RationalExpr r = lower(*step.r, c_.resolver());
      out.lemma = "EL3";
      bool on = side_condition_holds(S(A, Pp, Q) - S(Rr, Pp, Q));
      out.branch = on ? "on-line" : "off-line";
      RationalExpr num, den;
      if (on) {
        num = R(A, Rr, Pp, Q) + r;
        den = same ? R(C, Rr, Pp, Q) + r : R(C, *pat.d, Pp, Q);
      } else {
        num = S4(A, Pp, Rr, Q);
        den = same ? S4(C, Pp, Rr, Q) : S4(C, Pp, *pat.d, Q);
      }
      out.denominators.push_back(den);
      out.value = num / den;
      return out;
    }
    case StepKind::ECS5: {
      PointRef Pp = pt(0), Q = pt(1);
      RationalExpr r = lower(*step.r, c_.resolver());
      out.lemma = "EL4";
      bool on = side_condition_holds(P(A, Pp, Q));
      out.branch = on ? "on-line" : "off-line";
      RationalExpr num, den;
      if (on) {
        RationalExpr shift = r * RationalExpr(Scalar(1, 4)) * P(Pp, Q, Pp);
        num = S(A, Pp, Q) - shift;
        den = same ? S(C, Pp, Q) - shift : S4(C, Pp, *pat.d, Q);
      } else {
        num = P(A, Pp, Q);
        den = same ? P(C, Pp, Q) : P4(C, Pp, *pat.d, Q);
      }
      out.denominators.push_back(den);
      out.value = num / den;
      return out;
    }
    case StepKind::ECS1:
      break;
  }
  throw Error(ErrorKind::UnsupportedShape, "free points are not eliminated");
}

Eliminator::Rewrite Eliminator::rewrite(const QuantityPattern& pat, const PointRef& y) {
  const Step& step = c_.step_of(y.name);
  if (pat.kind == PatternKind::RatioWithY) {
    Rewrite out = rewrite_ratio(pat, step);
    if (pat.inverted) {
      out.denominators.push_back(out.value);
      out.value = out.value.inverse();
    }
    if (pat.sign < 0) out.value = -out.value;
    return out;
  }

  auto pt = [&](std::size_t i) { return c_.point(step.arg(i)); };
  const PointRef& A = pat.a;
  const PointRef& B = pat.b;
  std::function<RationalExpr(const PointRef&)> G;
  if (pat.kind == PatternKind::LinearS) {
    G = [&](const PointRef& x) { return S(A, B, x); };
  } else if (pat.kind == PatternKind::LinearP) {
    G = [&](const PointRef& x) { return P(A, B, x); };
  } else {
    G = [&](const PointRef& x) { return P(A, x, B); };
  }
  const bool quadratic = pat.kind == PatternKind::QuadraticP;
  Rewrite out;
  out.branch = quadratic ? "quadratic" : "linear";

  switch (step.kind) {
    case StepKind::ECS2: {
      PointRef U = pt(0), V = pt(1), Pp = pt(2), Q = pt(3);
      RationalExpr upq = S(U, Pp, Q), vpq = S(V, Pp, Q), den = S4(U, Pp, V, Q);
      out.denominators.push_back(den);
      if (quadratic) {
        out.lemma = "EL10";
        out.value = (upq * G(V) - vpq * G(U)) / den + upq * vpq * P(U, V, U) / den.pow(2);
      } else {
        out.lemma = "EL5";
        out.value = (upq * G(V) - vpq * G(U)) / den;
      }
      break;
    }
    case StepKind::ECS3: {
      PointRef Pp = pt(0), U = pt(1), V = pt(2);
      RationalExpr puv = P(Pp, U, V), pvu = P(Pp, V, U), den = P(U, V, U);
      out.denominators.push_back(den);
      if (quadratic) {
        out.lemma = "EL11";
        out.value = (puv * G(V) + pvu * G(U)) / den - puv * pvu / den;
      } else {
        out.lemma = "EL6";
        out.value = (puv * G(V) + pvu * G(U)) / den;
      }
      break;
    }
    case StepKind::ECS4: {
      PointRef Rr = pt(0), Pp = pt(1), Q = pt(2);
      RationalExpr r = lower(*step.r, c_.resolver());
      if (quadratic) {
        out.lemma = "EL12";
        out.value = G(Rr) + r * (G(Q) - G(Pp) + RationalExpr(2) * P(Rr, Pp, Q)) -
                    r * (RationalExpr(1) - r) * P(Pp, Q, Pp);
      } else {
        out.lemma = "EL7";
        out.value = G(Rr) + r * (G(Q) - G(Pp));
      }
      break;
    }
    case StepKind::ECS5: {
      PointRef Pp = pt(0), Q = pt(1);
      RationalExpr r = lower(*step.r, c_.resolver());
      if (pat.kind == PatternKind::LinearS) {
        out.lemma = "EL8";
        out.value = S(A, B, Pp) - r * RationalExpr(Scalar(1, 4)) * P4(Pp, A, Q, B);
      } else if (pat.kind == PatternKind::LinearP) {
        out.lemma = "EL9";
        out.value = P(A, B, Pp) - RationalExpr(4) * r * S4(Pp, A, Q, B);
      } else {
        out.lemma = "EL13";
        out.value = P(A, Pp, B) + r * r * P(Pp, Q, Pp) - RationalExpr(4) * r * (S(A, Pp, Q) + S(B, Pp, Q));
      }
      break;
    }
    case StepKind::ECS1:
      throw Error(ErrorKind::UnsupportedShape, "free points are not eliminated");
  }
  if (pat.sign < 0) out.value = -out.value;
  return out;
}

std::map<Atom, RationalExpr> Eliminator::elimination_map(const std::set<Atom>& atoms, const PointRef& y,
                                                         std::vector<LemmaApplication>& applied) {
  std::map<Atom, RationalExpr> out;
  for (const auto& atom : atoms) {
    if (!atom.mentions(y.name)) continue;
    QuantityPattern pat = classify(atom, y);
    Rewrite rw = rewrite(pat, y);
    if (atom.kind() == AtomKind::QuadDist) rw.value = rw.value * RationalExpr(Scalar(1, 2));
    for (const auto& den : rw.denominators) check_denominator(den, rw.lemma);
    if (rw.value.mentions(y.name)) {
      throw Error(ErrorKind::UnsupportedShape, rw.lemma + " left " + y.name + " in " + rw.value.to_string());
    }
    applied.push_back(LemmaApplication{rw.lemma, y.name, rw.branch, atom, rw.value});
    out.emplace(atom, std::move(rw.value));
  }
  return out;
}

RationalExpr Eliminator::eliminate_point(const RationalExpr& e, const PointRef& y,
                                         std::vector<LemmaApplication>& applied) {
  return substitute(e, elimination_map(e.atoms(), y, applied));
}

RationalExpr Eliminator::eliminate_all(RationalExpr e) {
  std::vector<LemmaApplication> ignored;
  while (!e.is_zero()) {
    auto y = find_target_point(e);
    if (!y) break;
    e = eliminate_point(e, *y, ignored);
  }
  return e;
}

}  // namespace area
