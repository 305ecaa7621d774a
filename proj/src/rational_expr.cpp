#include "area/rational_expr.hpp"

#include <algorithm>

#include "area/errors.hpp"

namespace area {

namespace {

using FactorMap = std::map<Polynomial, int>;

bool factor_list_less(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
    if (a[i].base < b[i].base) return true;
    if (b[i].base < a[i].base) return false;
  }
  return false;
}

struct FactorListLess {
  bool operator()(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b) const {
    return factor_list_less(a, b);
  }
};

std::vector<DenFactor> to_list(const FactorMap& m) {
  std::vector<DenFactor> out;
  out.reserve(m.size());
  for (const auto& [base, e] : m) {
    if (e > 0) out.push_back(DenFactor{base, e});
  }
  return out;
}

FactorMap to_map(std::span<const DenFactor> list) {
  FactorMap m;
  for (const auto& f : list) m[f.base] += f.exponent;
  return m;
}

Polynomial expand(const FactorMap& m) {
  Polynomial out(1);
  for (const auto& [base, e] : m) {
    if (e > 0) out = out * base.pow(e);
  }
  return out;
}

Polynomial expand(std::span<const DenFactor> list) {
  Polynomial out(1);
  for (const auto& f : list) out = out * f.base.pow(f.exponent);
  return out;
}

/// prod(lcm) / prod(part), expanded; `part` must divide `lcm` factorwise.
Polynomial cofactor(const FactorMap& lcm, std::span<const DenFactor> part) {
  FactorMap rest = lcm;
  for (const auto& f : part) rest[f.base] -= f.exponent;
  return expand(rest);
}

Scalar power(const Scalar& x, int e) {
  Scalar out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

RationalExpr::RationalExpr(const Scalar& constant) : num_(constant) {}
RationalExpr::RationalExpr(int constant) : num_(Scalar(constant)) {}
RationalExpr::RationalExpr(const Polynomial& numerator) : num_(numerator) {}
RationalExpr::RationalExpr(const Atom& atom) : num_(atom) {}
RationalExpr::RationalExpr(const Canonical& quantity) {
  if (quantity.atom) {
    num_ = Polynomial(Monomial(*quantity.atom), quantity.coefficient);
  } else {
    num_ = Polynomial(quantity.coefficient);
  }
}

RationalExpr RationalExpr::quotient(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "denominator is the zero polynomial");
  return normalized(num, {DenFactor{den, 1}});
}

RationalExpr RationalExpr::normalized(Polynomial num, std::vector<DenFactor> den) {
  for (const auto& f : den) {
    if (f.base.is_zero()) {
      throw Error(ErrorKind::DegenerateDenominator, "denominator factor is the zero polynomial");
    }
  }
  RationalExpr out;
  if (num.is_zero()) return out;

  FactorMap factors;
  for (auto& [base, e] : den) {
    if (e == 0) continue;
    Polynomial f = std::move(base);
    if (f.is_constant()) {
      num *= Scalar(1) / power(f.constant_term(), e);
      continue;
    }
    Monomial content = f.monomial_content();
    if (!content.is_one()) {
      for (const auto& [atom, k] : content.factors()) factors[Polynomial(atom)] += k * e;
      f = f.divide_by_monomial(content);
    }
    if (f.is_constant()) {
      num *= Scalar(1) / power(f.constant_term(), e);
      continue;
    }
    Scalar lead = f.leading_coefficient();
    if (lead != 1) {
      f *= Scalar(1) / lead;
      num *= Scalar(1) / power(lead, e);
    }
    factors[std::move(f)] += e;
  }

  // Cancel factors that divide the numerator exactly.
  Monomial num_content = num.monomial_content();
  for (auto& [base, e] : factors) {
    if (base.size() == 1) {
      const Atom& atom = base.leading_monomial().factors().front().first;
      int available = num_content.exponent_of(atom);
      int k = std::min(available, e);
      if (k > 0) {
        num = num.divide_by_monomial(Monomial(atom, k));
        num_content = num.monomial_content();
        e -= k;
      }
      continue;
    }
    while (e > 0) {
      auto q = num.divide_exact(base);
      if (!q) break;
      num = std::move(*q);
      num_content = num.monomial_content();
      --e;
    }
  }
  out.num_ = std::move(num);
  out.den_ = to_list(factors);
  return out;
}

Polynomial RationalExpr::den() const { return expand(den_); }

std::set<Atom> RationalExpr::atoms() const {
  std::set<Atom> out = num_.atoms();
  for (const auto& f : den_) {
    auto more = f.base.atoms();
    out.insert(more.begin(), more.end());
  }
  return out;
}

bool RationalExpr::mentions(const std::string& point) const {
  if (num_.mentions(point)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const DenFactor& f) { return f.base.mentions(point); });
}

RationalExpr RationalExpr::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (exponent == 0) return RationalExpr(1);
  RationalExpr out;
  out.num_ = num_.pow(exponent);
  if (out.num_.is_zero()) return out;
  out.den_ = den_;
  for (auto& f : out.den_) f.exponent *= exponent;
  return out;
}

RationalExpr RationalExpr::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "division by an identically zero expression");
  return normalized(expand(den_), {DenFactor{num_, 1}});
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalExpr::normalized(a.num_ + b.num_, a.den_);
  FactorMap lcm = to_map(a.den_);
  for (const auto& f : b.den_) {
    int& e = lcm[f.base];
    e = std::max(e, f.exponent);
  }
  Polynomial num = a.num_ * cofactor(lcm, a.den_) + b.num_ * cofactor(lcm, b.den_);
  return RationalExpr::normalized(std::move(num), to_list(lcm));
}

RationalExpr operator-(const RationalExpr& a) {
  RationalExpr out = a;
  out.num_ = -a.num_;
  return out;
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero() || b.is_zero()) return RationalExpr{};
  if (b.den_.empty() && b.num_.is_constant()) {
    RationalExpr out = a;
    out.num_ *= b.num_.constant_term();
    return out;
  }
  if (a.den_.empty() && a.num_.is_constant()) {
    RationalExpr out = b;
    out.num_ *= a.num_.constant_term();
    return out;
  }
  FactorMap merged = to_map(a.den_);
  for (const auto& f : b.den_) merged[f.base] += f.exponent;
  return RationalExpr::normalized(a.num_ * b.num_, to_list(merged));
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "division by an identically zero expression");
  if (a.is_zero()) return RationalExpr{};
  if (b.den_.empty() && b.num_.is_constant()) {
    RationalExpr out = a;
    out.num_ *= Scalar(1) / b.num_.constant_term();
    return out;
  }
  std::vector<DenFactor> den = a.den_;
  den.push_back(DenFactor{b.num_, 1});
  return RationalExpr::normalized(a.num_ * expand(b.den_), std::move(den));
}

std::string RationalExpr::to_string() const {
  std::string num = num_.to_string();
  if (den_.empty()) return num;
  if (num_.size() > 1) num = "(" + num + ")";
  std::string den;
  bool single = den_.size() == 1 && den_[0].exponent == 1;
  for (const auto& f : den_) {
    if (!den.empty()) den += "*";
    std::string b = f.base.to_string();
    if (f.base.size() > 1) b = "(" + b + ")";
    den += b;
    if (f.exponent != 1) den += "^" + std::to_string(f.exponent);
  }
  if (!single && den_.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

bool is_zero(const RationalExpr& e) { return e.is_zero(); }

bool rexpr_equal(const RationalExpr& a, const RationalExpr& b) {
  if (a == b) return true;
  // a.num * b.den - b.num * a.den == 0
  Polynomial lhs = a.num() * b.den();
  Polynomial rhs = b.num() * a.den();
  return (lhs - rhs).is_zero();
}

RationalExpr substitute(const Polynomial& p, const std::map<Atom, RationalExpr>& replacements) {
  std::map<std::vector<DenFactor>, Polynomial, FactorListLess> groups;
  std::map<std::pair<Atom, int>, Polynomial> power_cache;
  auto num_power = [&](const Atom& atom, const RationalExpr& r, int k) -> const Polynomial& {
    auto key = std::make_pair(atom, k);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, r.num().pow(k)).first;
    return it->second;
  };
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial rest;
    Polynomial part;
    FactorMap den;
    bool touched = false;
    std::vector<std::pair<const Atom*, int>> hits;
    for (const auto& [atom, k] : mono.factors()) {
      auto it = replacements.find(atom);
      if (it == replacements.end()) {
        rest = rest * Monomial(atom, k);
      } else {
        touched = true;
        hits.emplace_back(&it->first, k);
      }
    }
    part = Polynomial(rest, coeff);
    if (touched) {
      for (const auto& [atom, k] : hits) {
        const RationalExpr& r = replacements.at(*atom);
        part = part * num_power(*atom, r, k);
        if (part.is_zero()) break;
        for (const auto& f : r.den_factors()) den[f.base] += f.exponent * k;
      }
    }
    if (part.is_zero()) continue;
    groups[to_list(den)] += part;
  }
  if (groups.empty()) return RationalExpr{};
  if (groups.size() == 1) {
    auto& [den, num] = *groups.begin();
    return RationalExpr::normalized(num, den);
  }
  FactorMap lcm;
  for (const auto& [den, num] : groups) {
    for (const auto& f : den) {
      int& e = lcm[f.base];
      e = std::max(e, f.exponent);
    }
  }
  Polynomial total;
  for (const auto& [den, num] : groups) {
    if (num.is_zero()) continue;
    total += num * cofactor(lcm, den);
  }
  return RationalExpr::normalized(std::move(total), to_list(lcm));
}

RationalExpr substitute(const RationalExpr& e, const std::map<Atom, RationalExpr>& replacements) {
  bool any = false;
  for (const auto& atom : e.atoms()) {
    if (replacements.count(atom)) {
      any = true;
      break;
    }
  }
  if (!any) return e;
  RationalExpr result = substitute(e.num(), replacements);
  for (const auto& f : e.den_factors()) {
    RationalExpr value = substitute(f.base, replacements);
    if (value.is_zero()) {
      throw Error(ErrorKind::DegenerateDenominator,
                  "denominator factor " + f.base.to_string() + " vanishes after substitution");
    }
    result = result / value.pow(f.exponent);
  }
  return result;
}

RationalExpr substitute(const RationalExpr& e, const Atom& target, const RationalExpr& replacement) {
  return substitute(e, std::map<Atom, RationalExpr>{{target, replacement}});
}

RationalExpr expand_pythagoras(const RationalExpr& e) {
  std::map<Atom, RationalExpr> defs;
  for (const auto& atom : e.atoms()) {
    if (atom.kind() != AtomKind::PythDiff) continue;
    auto p = atom.points();
    RationalExpr value = RationalExpr(quad_dist(p[0], p[1])) + RationalExpr(quad_dist(p[1], p[2])) -
                         RationalExpr(quad_dist(p[0], p[2]));
    defs.emplace(atom, std::move(value));
  }
  if (defs.empty()) return e;
  return substitute(e, defs);
}

Scalar evaluate(const RationalExpr& e, const std::function<Scalar(const Atom&)>& value_of) {
  Scalar num = e.num().evaluate(value_of);
  Scalar den(1);
  for (const auto& f : e.den_factors()) {
    Scalar v = f.base.evaluate(value_of);
    den *= power(v, f.exponent);
  }
  if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at this model");
  return num / den;
}

}  // namespace area
