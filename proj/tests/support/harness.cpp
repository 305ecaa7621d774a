#include "harness.hpp"

#include <random>

#include "area/area_coords.hpp"
#include "area/dsl.hpp"
#include "area/eliminator.hpp"
#include "area/errors.hpp"
#include "area/prover.hpp"

namespace area::testing {

Scalar coord_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return Scalar(((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / 2);
}

Scalar coord_pyth(const Vec2& a, const Vec2& b, const Vec2& c) {
  return Scalar(coord_d2(a, b) + coord_d2(c, b) - coord_d2(a, c));
}

Scalar coord_d2(const Vec2& a, const Vec2& b) {
  return Scalar((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
}

namespace {

struct Family {
  const char* source;
  std::vector<std::string> online;        // points on the lemma's line through Y
  std::pair<std::string, std::string> online_pair;   // segment parallel to that line
  std::vector<std::string> offline;       // points on another line through Y
  std::pair<std::string, std::string> offline_pair;  // segment parallel to it
  std::vector<std::string> pool;          // points for S/P atoms
  std::string ratio_lemma;
  std::string linear_lemma;               // also EL9 for P atoms on ECS5
  std::string quadratic_lemma;
};

// T is constructed exactly like Y, so lines through Y exist before Y.
const std::vector<Family>& families() {
  static const std::vector<Family> list = {
      {R"(points U V P Q B E
          param t s
          L := on_parallel(U; U,V; t)
          D := on_parallel(B; U,V; s)
          T := intersect(U,V; P,Q)
          C := on_parallel(B; B,T; t)
          F := on_parallel(E; B,T; s)
          Y := intersect(U,V; P,Q)
          prove S[U,V,Y] = 0)",
       {"U", "V", "L"}, {"B", "D"}, {"B", "C"}, {"E", "F"}, {"U", "V", "P", "Q", "B", "E"}, "EL1", "EL5", "EL10"},
      {R"(points U V P B E
          param t s
          L := on_parallel(U; U,V; t)
          D := on_parallel(B; U,V; s)
          T := foot(P; U,V)
          C := on_parallel(B; B,T; t)
          F := on_parallel(E; B,T; s)
          Y := foot(P; U,V)
          prove S[U,V,Y] = 0)",
       {"U", "V", "L"}, {"B", "D"}, {"B", "C"}, {"E", "F"}, {"U", "V", "P", "B", "E"}, "EL2", "EL6", "EL11"},
      {R"(points W P Q B E
          param r t s
          L := on_parallel(W; P,Q; t)
          M := on_parallel(W; P,Q; s)
          D := on_parallel(B; P,Q; s)
          T := on_parallel(W; P,Q; r)
          C := on_parallel(B; B,T; t)
          F := on_parallel(E; B,T; s)
          Y := on_parallel(W; P,Q; r)
          prove S[W,P,Y] = 0)",
       {"W", "L", "M"}, {"B", "D"}, {"B", "C"}, {"E", "F"}, {"W", "P", "Q", "B", "E"}, "EL3", "EL7", "EL12"},
      {R"(points P Q B E
          param r t s
          L := on_perp(P,Q; t)
          M := on_perp(P,Q; s)
          K := on_parallel(B; P,L; s)
          T := on_perp(P,Q; r)
          C := on_parallel(B; B,T; t)
          F := on_parallel(E; B,T; s)
          Y := on_perp(P,Q; r)
          prove S[P,Q,Y] = 0)",
       {"P", "L", "M"}, {"B", "K"}, {"B", "C"}, {"E", "F"}, {"P", "Q", "B", "E"}, "EL4", "EL8", "EL13"},
  };
  return list;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

RawAtom raw(AtomKind kind, const Construction& c, const std::vector<std::string>& names) {
  RawAtom r{kind, {}, {}};
  for (const auto& n : names) r.points.push_back(c.point(n));
  return r;
}

/// ratio(x,Y;c,d) in a random orientation: each segment may be reversed
/// and the two segments swapped.
RawAtom random_ratio(std::mt19937_64& rng, const Construction& c, const std::string& x, const std::string& cc,
                     const std::string& d) {
  std::vector<std::string> first = {x, "Y"};
  std::vector<std::string> second = {cc, d};
  if (coin(rng)) std::swap(first[0], first[1]);
  if (coin(rng)) std::swap(second[0], second[1]);
  if (coin(rng)) std::swap(first, second);
  return raw(AtomKind::DistRatio, c, {first[0], first[1], second[0], second[1]});
}

struct Instance {
  RawAtom atom;
  std::string expected;  // "ELk/branch"
};

Instance make_instance(std::mt19937_64& rng, const Family& f, const Construction& c, const std::string& key) {
  auto two_distinct = [&](const std::vector<std::string>& v) {
    std::string a = pick(rng, v);
    std::string b;
    do {
      b = pick(rng, v);
    } while (b == a);
    return std::pair{a, b};
  };
  if (key.ends_with("on-line") || key.ends_with("off-line")) {
    bool on = key.ends_with("on-line");
    const auto& line = on ? f.online : f.offline;
    const auto& pair = on ? f.online_pair : f.offline_pair;
    if (coin(rng)) {
      auto [x, z] = two_distinct(line);
      return {random_ratio(rng, c, x, z, "Y"), key};
    }
    return {random_ratio(rng, c, pick(rng, line), pair.first, pair.second), key};
  }
  auto [a, b] = two_distinct(f.pool);
  if (key == f.quadratic_lemma + "/quadratic") {
    if (coin(rng)) return {raw(AtomKind::QuadDist, c, {a, "Y"}), key};
    return {raw(AtomKind::PythDiff, c, {a, "Y", b}), key};
  }
  if (key == "EL9/linear") return {raw(AtomKind::PythDiff, c, {a, b, "Y"}), key};
  if (key == "EL8/linear") return {raw(AtomKind::SignedArea, c, {a, b, "Y"}), key};
  // EL5..EL7 cover both S and P atoms.
  std::vector<std::string> order = {a, b, "Y"};
  if (coin(rng)) return {raw(AtomKind::PythDiff, c, coin(rng) ? order : std::vector<std::string>{"Y", b, a}), key};
  std::shuffle(order.begin(), order.end(), rng);
  return {raw(AtomKind::SignedArea, c, order), key};
}

std::vector<std::pair<const Family*, std::string>> all_cases() {
  std::vector<std::pair<const Family*, std::string>> out;
  for (const auto& f : families()) {
    out.emplace_back(&f, f.ratio_lemma + "/on-line");
    out.emplace_back(&f, f.ratio_lemma + "/off-line");
    out.emplace_back(&f, f.linear_lemma + "/linear");
    if (f.linear_lemma == "EL8") out.emplace_back(&f, "EL9/linear");
    out.emplace_back(&f, f.quadratic_lemma + "/quadratic");
  }
  return out;
}

}  // namespace

std::vector<std::string> lemma_cases() {
  std::vector<std::string> out;
  for (const auto& [f, key] : all_cases()) out.push_back(key);
  return out;
}

LemmaSuiteResult run_lemma_suite(int per_case, std::uint64_t seed) {
  LemmaSuiteResult result;
  std::mt19937_64 rng(seed);
  std::map<const Family*, Construction> built;
  for (const auto& f : families()) built[&f] = parse(f.source).construction;
  EliminationCache cache;
  for (const auto& [family, key] : all_cases()) {
    const Construction& c = built[family];
    ZeroProver prover = [](const Construction& prefix, const RationalExpr& e) { return provable_zero(prefix, e); };
    Eliminator el(c, prover, &cache);
    PointRef y = c.point("Y");
    int done = 0;
    for (int attempt = 0; done < per_case && attempt < per_case * 4; ++attempt) {
      Instance inst = make_instance(rng, *family, c, key);
      Canonical canon = canonicalize_atom(inst.atom);
      if (!canon.atom) continue;
      std::vector<LemmaApplication> applied;
      std::map<Atom, RationalExpr> map;
      try {
        map = el.elimination_map({*canon.atom}, y, applied);
      } catch (const Error& e) {
        result.fail(key + ": " + canon.atom->to_string() + ": " + e.what());
        ++done;
        continue;
      }
      std::string got = applied.at(0).lemma + "/" + applied.at(0).branch;
      if (got != key) {
        result.fail(key + ": " + canon.atom->to_string() + " used " + got);
        ++done;
        continue;
      }
      NumericModel m = realize(c, mix_seed(seed, static_cast<std::uint64_t>(attempt) * 977 + done));
      try {
        Scalar before = eval_atom(*canon.atom, m);
        Scalar after = evaluate(map.at(*canon.atom), m);
        ++result.checked;
        ++done;
        if (before != after) {
          result.fail(key + ": " + canon.atom->to_string() + " = " + before.get_str() + " but " +
                      map.at(*canon.atom).to_string() + " = " + after.get_str() + " (seed " + std::to_string(m.seed) +
                      ")");
        } else {
          ++result.passed[key];
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DivisionByZero) {
          result.fail(key + ": " + canon.atom->to_string() + ": " + e.what());
          ++done;
        }
      }
    }
  }
  return result;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Scalar canonical_value(const Canonical& c, const NumericModel& m) {
  if (!c.atom) return c.coefficient;
  return Scalar(c.coefficient * eval_atom(*c.atom, m));
}

}  // namespace

SuiteResult run_canonicalization_suite(int samples, std::uint64_t seed) {
  SuiteResult result;
  Construction c = parse("points A B C D E\nprove S[A,B,C] = 0").construction;
  std::vector<std::string> names = {"A", "B", "C", "D", "E"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    NumericModel m = realize(c, mix_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<std::string> pts(3);
    for (auto& p : pts) p = pick(rng, names);
    bool area = coin(rng);
    AtomKind kind = area ? AtomKind::SignedArea : AtomKind::PythDiff;
    Canonical base = canonicalize_atom(raw(kind, c, pts));
    const Vec2 &a = m.at(pts[0]), &b = m.at(pts[1]), &cc = m.at(pts[2]);
    Scalar expected = area ? coord_area(a, b, cc) : coord_pyth(a, b, cc);
    ++result.checked;
    std::string label = std::string(area ? "S[" : "P[") + pts[0] + "," + pts[1] + "," + pts[2] + "]";
    if (canonical_value(base, m) != expected) result.fail(label + " disagrees with coordinates");

    bool degenerate = area ? (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2]) : (pts[0] == pts[1] || pts[1] == pts[2]);
    if (degenerate && (base.atom || sgn(base.coefficient) != 0 || sgn(expected) != 0)) {
      result.fail(label + " is degenerate but not identically 0");
    }
    if (base.atom) {
      Canonical again = canonicalize_atom(base.atom->raw());
      if (!again.atom || !(*again.atom == *base.atom) || again.coefficient != 1) result.fail(label + " not idempotent");
    }

    std::vector<int> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> permuted = {pts[perm[0]], pts[perm[1]], pts[perm[2]]};
    Canonical moved = canonicalize_atom(raw(kind, c, permuted));
    if (area) {
      Scalar want = Scalar(permutation_sign(perm) * canonical_value(base, m));
      if (canonical_value(moved, m) != want) result.fail(label + " breaks the permutation sign law");
      if (base.atom && moved.atom && !(*base.atom == *moved.atom)) result.fail(label + " permutation changed the atom");
    } else {
      Canonical reversed = canonicalize_atom(raw(kind, c, {pts[2], pts[1], pts[0]}));
      if (canonical_value(reversed, m) != canonical_value(base, m)) result.fail(label + " is not symmetric");
      if (base.atom && !(reversed.atom && *reversed.atom == *base.atom && reversed.coefficient == base.coefficient)) {
        result.fail(label + " reversal changed the canonical form");
      }
      if (canonical_value(moved, m) != coord_pyth(m.at(permuted[0]), m.at(permuted[1]), m.at(permuted[2]))) {
        result.fail(label + " permutation disagrees with coordinates");
      }
    }
  }
  return result;
}

namespace {

RationalExpr random_atom(std::mt19937_64& rng, const Construction& c, const std::vector<std::string>& names) {
  std::vector<std::string> pts(3);
  for (auto& p : pts) p = pick(rng, names);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return RationalExpr(canonicalize_atom(raw(AtomKind::SignedArea, c, pts)));
    case 1: return RationalExpr(canonicalize_atom(raw(AtomKind::PythDiff, c, pts)));
    default: return RationalExpr(canonicalize_atom(raw(AtomKind::QuadDist, c, {pts[0], pts[1]})));
  }
}

RationalExpr random_polynomial(std::mt19937_64& rng, const Construction& c, const std::vector<std::string>& names,
                               const RationalExpr& w, bool& used_w2) {
  RationalExpr out(0);
  int terms = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    Scalar coefficient(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
    coefficient.canonicalize();
    RationalExpr term(coefficient);
    int factors = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < factors; ++k) term = term * random_atom(rng, c, names);
    if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) {
      term = term * w * w;
      used_w2 = true;
    }
    out = out + term;
  }
  return out;
}

}  // namespace

AreaSuiteResult run_area_coordinate_suite(int samples, std::uint64_t seed) {
  AreaSuiteResult result;
  Construction base = parse("points O X A B C\nprove S[A,B,C] = 0").construction;
  auto [c, frame] = install_frame(base);
  std::vector<std::string> names = {"O", "X", "A", "B", "C", frame.y.name};
  RationalExpr w(frame.w());
  std::mt19937_64 rng(seed);
  Assignments fixed;
  fixed.points["O"] = Vec2{Scalar(0), Scalar(0)};
  fixed.points["X"] = Vec2{Scalar(1), Scalar(0)};
  for (int i = 0; result.checked < samples && i < samples * 3; ++i) {
    bool used_w2 = false;
    RationalExpr e = random_polynomial(rng, c, names, w, used_w2);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      RationalExpr den = random_polynomial(rng, c, names, w, used_w2);
      if (den.is_zero()) continue;
      e = e / den;
    }
    NumericModel m = realize(c, mix_seed(seed, static_cast<std::uint64_t>(i)), fixed);
    try {
      Scalar before = evaluate(e, m);
      RationalExpr coords = to_area_coordinates(e, frame);
      Scalar after = evaluate(coords, m);
      ++result.checked;
      if (used_w2) ++result.frame_squares;
      for (const auto& atom : coords.atoms()) {
        if (!frame.is_coordinate_atom(atom) && !(atom == frame.w())) {
          result.fail("non-coordinate atom " + atom.to_string() + " survived in " + coords.to_string());
          break;
        }
      }
      if (before != after) result.fail(e.to_string() + ": " + before.get_str() + " != " + after.get_str());
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivisionByZero && err.kind() != ErrorKind::DegenerateDenominator) {
        result.fail(e.to_string() + ": " + err.what());
      }
    }
  }
  return result;
}

}  // namespace area::testing
