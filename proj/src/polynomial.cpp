#include "area/polynomial.hpp"

#include <algorithm>

#include "area/errors.hpp"

namespace area {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const Atom& atom, int exponent) {
  if (exponent > 0) {
    factors_.emplace_back(atom, exponent);
    degree_ = exponent;
  }
}

int Monomial::exponent_of(const Atom& atom) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), atom,
                             [](const Factor& f, const Atom& a) { return f.first < a; });
  return (it != factors_.end() && it->first == atom) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      out.factors_.push_back(*i++);
    } else if (c > 0) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto j = other.factors_.begin();
  for (const auto& [atom, e] : factors_) {
    while (j != other.factors_.end() && j->first < atom) ++j;
    if (j == other.factors_.end() || !(j->first == atom) || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  for (const auto& [atom, e] : other.factors_) {
    while (i != factors_.end() && i->first < atom) ++i;
    int mine = (i != factors_.end() && i->first == atom) ? i->second : 0;
    if (e - mine > 0) out.factors_.emplace_back(atom, e - mine);
  }
  out.degree_ = other.degree_ - degree_;
  return out;
}

Monomial Monomial::without(const Atom& atom) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == atom) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto j = b.factors_.begin();
  for (const auto& [atom, e] : a.factors_) {
    while (j != b.factors_.end() && j->first < atom) ++j;
    if (j != b.factors_.end() && j->first == atom) {
      int m = std::min(e, j->second);
      out.factors_.emplace_back(atom, m);
      out.degree_ += m;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [atom, e] : factors_) {
    if (!out.empty()) out += "*";
    out += atom.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = fa[i].first <=> fb[i].first;
    // The smaller atom is the more significant variable.
    if (c < 0) return true;
    if (c > 0) return false;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Scalar& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Atom& atom) { terms_.emplace(Monomial(atom), Scalar(1)); }

Polynomial::Polynomial(const Monomial& monomial, const Scalar& coefficient) {
  if (sgn(coefficient) != 0) terms_.emplace(monomial, coefficient);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

int Polynomial::degree_in(const Atom& atom) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(atom));
  return d;
}

std::set<Atom> Polynomial::atoms() const {
  std::set<Atom> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

bool Polynomial::mentions(const std::string& point) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) {
      if (f.first.mentions(point)) return true;
    }
  }
  return false;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, m);
  }
  return g;
}

void Polynomial::add_term(const Monomial& monomial, const Scalar& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& k) {
  if (sgn(k) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m.quotient_of(mono), c);
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "division by the zero polynomial");
  if (is_zero()) return Polynomial{};
  if (divisor.is_constant()) {
    Polynomial q = *this;
    q *= Scalar(1) / divisor.constant_term();
    return q;
  }
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  // Every variable of the divisor must occur in a multiple of it, to at least
  // the same degree.
  for (const auto& [m, c] : divisor.terms_) {
    for (const auto& [atom, e] : m.factors()) {
      if (degree_in(atom) < e) return std::nullopt;
    }
  }
  const Monomial& lead = divisor.leading_monomial();
  const Scalar& lead_coeff = divisor.leading_coefficient();
  Polynomial remainder = *this;
  Polynomial quotient;
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    if (!lead.divides(rm)) return std::nullopt;
    Monomial t = lead.quotient_of(rm);
    Scalar k = remainder.leading_coefficient() / lead_coeff;
    quotient.add_term(t, k);
    for (const auto& [dm, dc] : divisor.terms_) remainder.add_term(t * dm, -k * dc);
  }
  return quotient;
}

std::optional<std::pair<Scalar, Polynomial>> Polynomial::square_root() const {
  if (is_zero()) return std::make_pair(Scalar(0), Polynomial{});
  const Scalar c = leading_coefficient();
  if (sgn(c) <= 0) return std::nullopt;
  const Monomial& lm = leading_monomial();
  Monomial root_lead;
  for (const auto& [atom, e] : lm.factors()) {
    if (e % 2 != 0) return std::nullopt;
    root_lead = root_lead * Monomial(atom, e / 2);
  }
  Polynomial target = *this;
  target *= Scalar(1) / c;
  Polynomial q(root_lead, Scalar(1));
  Monomial last = root_lead;
  for (std::size_t iter = 0; iter <= terms_.size(); ++iter) {
    Polynomial r = target - q * q;
    if (r.is_zero()) return std::make_pair(c, q);
    const Monomial& rm = r.leading_monomial();
    if (!root_lead.divides(rm)) return std::nullopt;
    Monomial t = root_lead.quotient_of(rm);
    if (!GradedLexDescending{}(last, t)) return std::nullopt;
    q.add_term(t, r.leading_coefficient() / 2);
    last = t;
  }
  return std::nullopt;
}

Scalar Polynomial::evaluate(const std::function<Scalar(const Atom&)>& value_of) const {
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (const auto& [atom, e] : m.factors()) {
      Scalar v = value_of(atom);
      Scalar p(1);
      for (int i = 0; i < e; ++i) p *= v;
      term *= p;
      if (sgn(term) == 0) break;
    }
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += area::to_string(mag);
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += area::to_string(mag) + "*" + m.to_string();
    }
  }
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  GradedLexDescending order;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j) {
    if (!(i->first == j->first)) return order(i->first, j->first);
    if (i->second != j->second) return i->second < j->second;
  }
  return false;
}

}  // namespace area
