#include "area/oracle.hpp"

#include <random>

#include "area/errors.hpp"

namespace area {

namespace {

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

Scalar area(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(sub(b, a), sub(c, a)) / 2; }
Scalar sqdist(const Vec2& a, const Vec2& b) {
  Vec2 d = sub(a, b);
  return dot(d, d);
}
Scalar pyth(const Vec2& a, const Vec2& b, const Vec2& c) { return sqdist(a, b) + sqdist(b, c) - sqdist(a, c); }

Scalar ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  Vec2 v = sub(b, a);
  Vec2 w = sub(d, c);
  Scalar ww = dot(w, w);
  if (sgn(ww) == 0) throw Error(ErrorKind::DivisionByZero, "ratio with a zero-length denominator segment");
  if (sgn(cross(v, w)) != 0) throw Error(ErrorKind::NonParallelRatio, "ratio of non-parallel segments");
  return dot(v, w) / ww;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Scalar rational() {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    std::uniform_int_distribution<int> scale(-3, 3);
    Scalar v(num(rng_), den(rng_));
    v.canonicalize();
    int k = scale(rng_);
    Scalar f = 1;
    for (int i = 0; i < std::abs(k); ++i) f *= 2;
    return k >= 0 ? Scalar(v * f) : Scalar(v / f);
  }

 private:
  std::mt19937_64 rng_;
};

struct Degenerate {};

Scalar rational_value(const SurdSum<Scalar>& v) {
  if (v.has_roots()) throw Error(ErrorKind::UnsupportedShape, "construction parameter contains sqrt");
  return v.rational;
}

std::optional<NumericModel> attempt(const Construction& c, Sampler& sampler, const Assignments& fixed) {
  NumericModel m;
  for (const auto& p : c.parameters()) {
    auto it = fixed.parameters.find(p);
    m.parameters[p] = it != fixed.parameters.end() ? it->second : sampler.rational();
  }
  for (const auto& step : c.steps()) {
    if (step.kind == StepKind::ECS1) {
      for (const auto& name : step.points) {
        auto it = fixed.points.find(name);
        m.points[name] = it != fixed.points.end() ? it->second : Vec2{sampler.rational(), sampler.rational()};
      }
      continue;
    }
    const std::string& y = step.y();
    Vec2 out;
    switch (step.kind) {
      case StepKind::ECS2: {
        const Vec2& u = m.at(step.arg(0));
        const Vec2& v = m.at(step.arg(1));
        const Vec2& p = m.at(step.arg(2));
        const Vec2& q = m.at(step.arg(3));
        Vec2 d = sub(v, u);
        Vec2 e = sub(q, p);
        Scalar den = cross(d, e);
        if (sgn(den) == 0) return std::nullopt;
        Scalar t = cross(sub(p, u), e) / den;
        out = {u.x + t * d.x, u.y + t * d.y};
        break;
      }
      case StepKind::ECS3: {
        const Vec2& p = m.at(step.arg(0));
        const Vec2& u = m.at(step.arg(1));
        const Vec2& v = m.at(step.arg(2));
        Vec2 d = sub(v, u);
        Scalar dd = dot(d, d);
        if (sgn(dd) == 0) return std::nullopt;
        Scalar t = dot(sub(p, u), d) / dd;
        out = {u.x + t * d.x, u.y + t * d.y};
        break;
      }
      case StepKind::ECS4:
      case StepKind::ECS5: {
        Scalar r;
        try {
          r = rational_value(evaluate(*step.r, m));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::DivisionByZero || e.kind() == ErrorKind::NonParallelRatio) return std::nullopt;
          throw;
        }
        if (step.kind == StepKind::ECS4) {
          const Vec2& w = m.at(step.arg(0));
          Vec2 d = sub(m.at(step.arg(2)), m.at(step.arg(1)));
          if (sgn(dot(d, d)) == 0) return std::nullopt;
          out = {w.x + r * d.x, w.y + r * d.y};
        } else {
          const Vec2& u = m.at(step.arg(0));
          Vec2 d = sub(m.at(step.arg(1)), u);
          if (sgn(dot(d, d)) == 0) return std::nullopt;
          out = {u.x - r * d.y, u.y + r * d.x};
        }
        break;
      }
      case StepKind::ECS1:
        break;
    }
    m.points[y] = out;
  }
  return m;
}

SurdSum<Scalar> normalized(const SurdSum<Scalar>& v) {
  SurdSum<Scalar> out(v.rational);
  for (const auto& [k, r] : v.roots) {
    if (sgn(r) < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of a negative value");
    Scalar root;
    if (exact_sqrt(r, root)) {
      out.rational += k * root;
    } else {
      out.add_root(k, r);
    }
  }
  return out;
}

/// Floor of sqrt(r) * 2^bits as an integer.
mpz_class scaled_sqrt_floor(const Scalar& r, unsigned bits) {
  // sqrt(n/d) * 2^b = sqrt(n*d*4^b) / d
  mpz_class nd = r.get_num() * r.get_den();
  nd <<= 2 * bits;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
  // floor(s / d) may be off by the truncation; keep the bound conservative.
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::optional<int> interval_sign(const SurdSum<Scalar>& v, unsigned bits) {
  Scalar lo = v.rational;
  Scalar hi = v.rational;
  Scalar unit = Scalar(1) / Scalar(mpz_class(1) << bits);
  for (const auto& [k, r] : v.roots) {
    mpz_class f = scaled_sqrt_floor(r, bits);
    Scalar below = Scalar(f) * unit;
    Scalar above = Scalar(f + 1) * unit;
    if (sgn(k) > 0) {
      lo += k * below;
      hi += k * above;
    } else {
      lo += k * above;
      hi += k * below;
    }
  }
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  return std::nullopt;
}

int exact_sign(const SurdSum<Scalar>& raw, int depth) {
  if (depth > 8) throw Error(ErrorKind::OutOfRange, "surd sign recursion too deep");
  SurdSum<Scalar> v = normalized(raw);
  if (!v.has_roots()) return sgn(v.rational);
  if (auto s = interval_sign(v, 64)) return *s;
  auto [c, r] = v.roots.back();
  SurdSum<Scalar> rest = v;
  rest.roots.pop_back();
  int rest_sign = exact_sign(rest, depth + 1);
  int term_sign = sgn(c);
  if (rest_sign == 0) return term_sign;
  if (rest_sign == term_sign) return rest_sign;
  // Opposite signs: compare rest^2 with c^2 r.
  int d = exact_sign(rest * rest - SurdSum<Scalar>(c * c * r), depth + 1);
  if (d > 0) return rest_sign;
  if (d < 0) return term_sign;
  return 0;
}

SurdSum<Scalar> eval_quantity(const ExprNode& n, const NumericModel& m) {
  const auto& p = n.points;
  switch (n.quantity) {
    case QuantityKind::SignedArea:
      return area(m.at(p[0]), m.at(p[1]), m.at(p[2]));
    case QuantityKind::SignedArea4:
      return Scalar(area(m.at(p[0]), m.at(p[1]), m.at(p[2])) + area(m.at(p[0]), m.at(p[2]), m.at(p[3])));
    case QuantityKind::PythDiff:
      return pyth(m.at(p[0]), m.at(p[1]), m.at(p[2]));
    case QuantityKind::PythDiff4:
      return Scalar(pyth(m.at(p[0]), m.at(p[1]), m.at(p[3])) - pyth(m.at(p[2]), m.at(p[1]), m.at(p[3])));
    case QuantityKind::QuadDist:
      return sqdist(m.at(p[0]), m.at(p[1]));
    case QuantityKind::DistRatio:
      return ratio(m.at(p[0]), m.at(p[1]), m.at(p[2]), m.at(p[3]));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quantity kind");
}

SurdSum<Scalar> eval_tree(const ExprTree& e, const NumericModel& m) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Const:
      return n.value;
    case NodeKind::Param: {
      auto it = m.parameters.find(n.name);
      if (it == m.parameters.end()) throw Error(ErrorKind::UnknownPoint, "no value for parameter '" + n.name + "'");
      return it->second;
    }
    case NodeKind::Quantity:
      return eval_quantity(n, m);
    case NodeKind::Sum: {
      SurdSum<Scalar> out;
      for (const auto& c : n.children) out = out + eval_tree(c, m);
      return out;
    }
    case NodeKind::Neg:
      return -eval_tree(n.children[0], m);
    case NodeKind::Product: {
      SurdSum<Scalar> out(Scalar(1));
      for (const auto& c : n.children) out = normalized(out * eval_tree(c, m));
      return out;
    }
    case NodeKind::Quotient: {
      SurdSum<Scalar> den = eval_tree(n.children[1], m);
      if (!den.has_roots() && sgn(den.rational) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
      return eval_tree(n.children[0], m) / den;
    }
    case NodeKind::Power: {
      SurdSum<Scalar> base = eval_tree(n.children[0], m);
      if (n.exponent < 0 && !base.has_roots() && sgn(base.rational) == 0) {
        throw Error(ErrorKind::DivisionByZero, "negative power of zero");
      }
      return normalized(base.pow(n.exponent));
    }
    case NodeKind::Sqrt: {
      SurdSum<Scalar> arg = eval_tree(n.children[0], m);
      if (arg.has_roots()) throw Error(ErrorKind::UnsupportedShape, "nested sqrt is not supported");
      if (sgn(arg.rational) < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of a negative value");
      return normalized(SurdSum<Scalar>::root(arg.rational));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown node kind");
}

}  // namespace

const Vec2& NumericModel::at(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) throw Error(ErrorKind::UnknownPoint, "point '" + name + "' is not realized");
  return it->second;
}

std::string NumericModel::to_string() const {
  std::string out;
  for (const auto& [name, v] : points) {
    if (!out.empty()) out += ", ";
    out += name + "=(" + area::to_string(v.x) + "," + area::to_string(v.y) + ")";
  }
  for (const auto& [name, v] : parameters) {
    if (!out.empty()) out += ", ";
    out += name + "=" + area::to_string(v);
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NumericModel realize(const Construction& c, std::uint64_t seed, const Assignments& fixed) {
  Sampler sampler(seed);
  for (int i = 0; i < kMaxResamples; ++i) {
    if (auto m = attempt(c, sampler, fixed)) {
      m->seed = seed;
      return *m;
    }
  }
  throw Error(ErrorKind::DegenerateAfterRetries,
              "no non-degenerate realization after " + std::to_string(kMaxResamples) + " draws");
}

Scalar eval_atom(const Atom& a, const NumericModel& m) {
  auto p = a.points();
  switch (a.kind()) {
    case AtomKind::SignedArea:
      return area(m.at(p[0].name), m.at(p[1].name), m.at(p[2].name));
    case AtomKind::PythDiff:
      return pyth(m.at(p[0].name), m.at(p[1].name), m.at(p[2].name));
    case AtomKind::QuadDist:
      return sqdist(m.at(p[0].name), m.at(p[1].name));
    case AtomKind::DistRatio:
      return ratio(m.at(p[0].name), m.at(p[1].name), m.at(p[2].name), m.at(p[3].name));
    case AtomKind::Parameter: {
      auto it = m.parameters.find(a.parameter_name());
      if (it == m.parameters.end()) {
        throw Error(ErrorKind::UnknownPoint, "no value for parameter '" + a.parameter_name() + "'");
      }
      return it->second;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown atom kind");
}

Scalar evaluate(const RationalExpr& e, const NumericModel& m) {
  return evaluate(e, [&](const Atom& a) { return eval_atom(a, m); });
}

SurdSum<Scalar> evaluate(const ExprTree& e, const NumericModel& m) { return eval_tree(e, m); }

int sign_of(const SurdSum<Scalar>& value) { return exact_sign(value, 0); }

bool check(const Clause& clause, const NumericModel& m) {
  int s = sign_of(eval_tree(clause.lhs, m) - eval_tree(clause.rhs, m));
  switch (clause.relation) {
    case Relation::Eq: return s == 0;
    case Relation::Ne: return s != 0;
    case Relation::Le: return s <= 0;
    case Relation::Lt: return s < 0;
    case Relation::Ge: return s >= 0;
    case Relation::Gt: return s > 0;
  }
  return false;
}

bool check(const Conjecture& conj, const NumericModel& m) {
  for (const auto& c : conj.clauses) {
    if (!check(c, m)) return false;
  }
  return true;
}

std::optional<NumericModel> find_counterexample(const Construction& c, const Conjecture& conj, std::uint64_t seed,
                                                int samples) {
  for (int i = 0; i < samples; ++i) {
    NumericModel m = realize(c, mix_seed(seed, static_cast<std::uint64_t>(i)));
    try {
      if (!check(conj, m)) return m;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DivisionByZero || e.kind() == ErrorKind::NonParallelRatio) continue;
      throw;
    }
  }
  return std::nullopt;
}

}  // namespace area
