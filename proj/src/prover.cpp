#include "area/prover.hpp"

#include <chrono>

#include "area/eliminator.hpp"
#include "area/errors.hpp"
#include "area/inequality.hpp"
#include "area/lowering.hpp"

namespace area {

const char* area_coords_mode_name(AreaCoordsMode mode) {
  switch (mode) {
    case AreaCoordsMode::Auto: return "auto";
    case AreaCoordsMode::Never: return "never";
    case AreaCoordsMode::Always: return "always";
  }
  return "?";
}

AreaCoordsMode parse_area_coords_mode(const std::string& text) {
  if (text == "auto") return AreaCoordsMode::Auto;
  if (text == "never") return AreaCoordsMode::Never;
  if (text == "always") return AreaCoordsMode::Always;
  throw Error(ErrorKind::InvalidArgument, "area coordinates mode must be auto, never or always");
}

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Proved: return "Proved";
    case VerdictKind::Disproved: return "Disproved";
    case VerdictKind::NotReduced: return "NotReduced";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr const char* kTraceKindNames[] = {"uniformize", "eliminate", "simplify", "pythagoras",
                                           "area-coords", "zero-test", "inequality", "oracle"};

}  // namespace

const char* trace_kind_name(TraceKind kind) { return kTraceKindNames[static_cast<int>(kind)]; }

TraceKind parse_trace_kind(const std::string& text) {
  for (int i = 0; i < static_cast<int>(std::size(kTraceKindNames)); ++i) {
    if (text == kTraceKindNames[i]) return static_cast<TraceKind>(i);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown trace step kind '" + text + "'");
}

std::vector<RationalExpr> ProofTrace::replay(std::size_t index) const {
  const ClauseRecord& rec = clauses.at(index);
  std::vector<RationalExpr> out = rec.initial;
  for (const auto& round : rec.rounds) {
    for (auto& e : out) e = substitute(e, round);
  }
  if (rec.pythagoras) {
    for (auto& e : out) e = expand_pythagoras(e);
  }
  if (rec.frame) {
    for (auto& e : out) e = to_area_coordinates(e, *rec.frame);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using Violation = std::function<bool(const NumericModel&)>;

struct Outcome {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<NumericModel> witness;
  std::optional<RationalExpr> residual;
  std::string reason;
};

std::vector<RationalExpr> surd_components(const SurdSum<RationalExpr>& s) {
  std::vector<RationalExpr> out{s.rational};
  for (const auto& [k, r] : s.roots) {
    out.push_back(k);
    out.push_back(r);
  }
  return out;
}

SurdSum<RationalExpr> from_components(const std::vector<RationalExpr>& parts) {
  SurdSum<RationalExpr> out(parts.at(0));
  for (std::size_t i = 1; i + 1 < parts.size(); i += 2) {
    if (parts[i + 1].is_constant()) {
      Scalar v = parts[i + 1].num().constant_term();
      if (sgn(v) < 0) throw Error(ErrorKind::SqrtOfNegative, "sqrt of the negative constant " + to_string(v));
      Scalar root;
      if (exact_sqrt(v, root)) {
        out.rational = out.rational + parts[i] * RationalExpr(root);
        continue;
      }
    }
    out.add_root(parts[i], parts[i + 1]);
  }
  return out;
}

bool has_kind(const std::set<Atom>& atoms, AtomKind kind) {
  for (const auto& a : atoms) {
    if (a.kind() == kind) return true;
  }
  return false;
}

std::set<Atom> atoms_of(const std::vector<RationalExpr>& parts) {
  std::set<Atom> out;
  for (const auto& e : parts) {
    auto more = e.atoms();
    out.insert(more.begin(), more.end());
  }
  return out;
}

class Session {
 public:
  explicit Session(const ProverOptions& opts) : opts_(opts), start_(Clock::now()) {}

  ProofResult run(const Construction& c, const Conjecture& conj) {
    ProofResult result;
    ProofTrace& trace = result.trace;
    try {
      if (!opts_.skip_ndg) {
        validate(
            c, [this](const Construction& prefix, const NdgCondition& ndg) { return ndg_violated(prefix, ndg); },
            trace.ndgs);
      }
      std::vector<Outcome> outcomes;
      for (std::size_t i = 0; i < conj.clauses.size(); ++i) {
        outcomes.push_back(prove_clause(c, conj.clauses[i], static_cast<int>(i), trace));
      }
      result.verdict = combine(outcomes);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TimeLimit) throw;
      result.verdict = Verdict{VerdictKind::Unknown, std::nullopt, std::nullopt, e.what()};
    }
    trace.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return result;
  }

  /// Sub-proof of e = 0 over a prefix construction.
  bool provable_zero(const Construction& c, const RationalExpr& e) {
    Violation violates = [&](const NumericModel& m) { return sgn(evaluate(e, m)) != 0; };
    bool used = false;
    Outcome o = decide_equality(c, e, violates, AreaCoordsMode::Auto, nullptr, nullptr, 0, used);
    return o.kind == VerdictKind::Proved;
  }

  bool ndg_violated(const Construction& prefix, const NdgCondition& ndg) {
    RationalExpr e = lower(ndg.lhs, prefix.resolver()) - lower(ndg.rhs, prefix.resolver());
    return provable_zero(prefix, e);
  }

 private:
  void check_deadline() const {
    if (opts_.max_ms <= 0) return;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    if (elapsed > opts_.max_ms) {
      throw Error(ErrorKind::TimeLimit, "time limit of " + std::to_string(opts_.max_ms) + " ms exceeded");
    }
  }

  std::uint64_t next_seed() { return mix_seed(opts_.seed, streams_++); }

  std::optional<NumericModel> search(const Construction& c, const Violation& violates, int samples) {
    std::uint64_t seed = next_seed();
    for (int i = 0; i < samples; ++i) {
      NumericModel m = realize(c, mix_seed(seed, static_cast<std::uint64_t>(i)));
      try {
        if (violates(m)) return m;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DivisionByZero || e.kind() == ErrorKind::NonParallelRatio ||
            e.kind() == ErrorKind::SqrtOfNegative) {
          continue;
        }
        throw;
      }
    }
    return std::nullopt;
  }

  Eliminator make_eliminator(const Construction& c) {
    return Eliminator(
        c, [this](const Construction& prefix, const RationalExpr& e) { return provable_zero(prefix, e); }, &cache_);
  }

  /// Elimination rounds applied to every part; returns false when a shape
  /// has no lemma (parts are left as reduced so far).
  bool eliminate(const Construction& c, std::vector<RationalExpr>& parts, ClauseRecord* rec,
                 std::vector<TraceStep>* steps, int clause, std::string& reason) {
    Eliminator el = make_eliminator(c);
    while (true) {
      check_deadline();
      bool all_zero = true;
      for (const auto& p : parts) all_zero = all_zero && p.is_zero();
      if (all_zero) return true;
      std::set<Atom> atoms = atoms_of(parts);
      auto y = el.find_target_point(atoms);
      if (!y) return true;
      std::vector<LemmaApplication> applied;
      std::map<Atom, RationalExpr> round;
      try {
        round = el.elimination_map(atoms, *y, applied);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedShape) throw;
        reason = e.what();
        return false;
      }
      std::vector<RationalExpr> before = parts;
      for (auto& p : parts) p = substitute(p, round);
      if (steps) {
        for (const auto& app : applied) {
          steps->push_back(TraceStep{TraceKind::Eliminate, clause, app.lemma, app.point, app.branch,
                                     app.atom.to_string(), app.replacement.to_string(), {}});
        }
        steps->push_back(TraceStep{TraceKind::Simplify, clause, {}, y->name, {}, before[0].to_string(),
                                   parts[0].to_string(), {}});
      }
      if (rec) rec->rounds.push_back(std::move(round));
    }
  }

  Outcome decide_equality(const Construction& c, const RationalExpr& start, const Violation& violates,
                          AreaCoordsMode mode, ClauseRecord* rec, std::vector<TraceStep>* steps, int clause,
                          bool& used_area_coords) {
    auto log = [&](TraceKind kind, std::string before, std::string after, std::string detail) {
      if (steps) steps->push_back(TraceStep{kind, clause, {}, {}, {}, std::move(before), std::move(after), std::move(detail)});
    };
    auto finish = [&](Outcome o, const RationalExpr& e) {
      if (rec) {
        rec->reduced = {e};
        rec->verdict = o.kind;
      }
      return o;
    };
    std::vector<RationalExpr> parts{start};
    if (rec) rec->initial = parts;
    if (start.is_zero()) {
      log(TraceKind::ZeroTest, start.to_string(), "0", "identically zero");
      return finish(Outcome{VerdictKind::Proved, {}, {}, {}}, start);
    }
    std::string reason;
    if (!eliminate(c, parts, rec, steps, clause, reason)) {
      Outcome o{VerdictKind::NotReduced, std::nullopt, parts[0], reason};
      return finish(o, parts[0]);
    }
    RationalExpr e = parts[0];
    if (e.is_zero()) {
      log(TraceKind::ZeroTest, e.to_string(), "0", "zero after elimination");
      return finish(Outcome{VerdictKind::Proved, {}, {}, {}}, e);
    }
    if (has_kind(e.atoms(), AtomKind::PythDiff)) {
      RationalExpr expanded = expand_pythagoras(e);
      log(TraceKind::Pythagoras, e.to_string(), expanded.to_string(), {});
      if (rec) rec->pythagoras = true;
      e = expanded;
      if (e.is_zero()) {
        log(TraceKind::ZeroTest, e.to_string(), "0", "zero after Pythagorean expansion");
        return finish(Outcome{VerdictKind::Proved, {}, {}, {}}, e);
      }
    }

    std::set<Atom> atoms = e.atoms();
    for (const auto& a : atoms) {
      if (a.kind() == AtomKind::DistRatio) {
        if (auto w = search(c, violates, opts_.oracle_samples)) {
          log(TraceKind::Oracle, {}, {}, "counterexample: " + w->to_string());
          return finish(Outcome{VerdictKind::Disproved, w, {}, "counterexample found"}, e);
        }
        return finish(Outcome{VerdictKind::NotReduced, std::nullopt, e,
                              "no elimination applies to " + a.to_string() + " over free points"},
                      e);
      }
    }
    if (mode == AreaCoordsMode::Never) {
      if (auto w = search(c, violates, opts_.oracle_samples)) {
        log(TraceKind::Oracle, {}, {}, "counterexample: " + w->to_string());
        return finish(Outcome{VerdictKind::Disproved, w, {}, "counterexample found"}, e);
      }
      return finish(Outcome{VerdictKind::NotReduced, std::nullopt, e, "not algebraically verifiable"}, e);
    }
    if (mode == AreaCoordsMode::Auto) {
      if (auto w = search(c, violates, opts_.probe_samples)) {
        log(TraceKind::Oracle, {}, {}, "counterexample: " + w->to_string());
        return finish(Outcome{VerdictKind::Disproved, w, {}, "counterexample found"}, e);
      }
    }

    check_deadline();
    std::pair<Construction, Frame> framed;
    try {
      framed = install_frame(c);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::TooFewFreePoints) throw;
      return finish(Outcome{VerdictKind::Unknown, std::nullopt, e, err.what()}, e);
    }
    const Frame& frame = framed.second;
    RationalExpr coords = to_area_coordinates(e, frame);
    used_area_coords = true;
    if (rec) rec->frame = frame;
    log(TraceKind::AreaCoords, e.to_string(), coords.to_string(),
        "frame O=" + frame.o.name + " X=" + frame.x.name + " Y=" + frame.y.name);
    check_deadline();

    FrameSplit split = split_by_frame(coords.num(), frame);
    if (split.even.is_zero() && split.odd.is_zero()) {
      log(TraceKind::ZeroTest, coords.to_string(), "0", "zero in area coordinates");
      return finish(Outcome{VerdictKind::Proved, {}, {}, {}}, coords);
    }
    if (auto w = search(c, violates, opts_.oracle_samples)) {
      log(TraceKind::Oracle, {}, {}, "counterexample: " + w->to_string());
      return finish(Outcome{VerdictKind::Disproved, w, {}, "nonzero over independent area coordinates"}, coords);
    }
    if (!split.even.is_zero() && !split.odd.is_zero()) {
      return finish(Outcome{VerdictKind::Unknown, std::nullopt, coords,
                            std::string(error_kind_name(ErrorKind::ResidualOddPower)) + ": residual depends on " +
                                frame.w().to_string() + " and no counterexample was found"},
                    coords);
    }
    return finish(Outcome{VerdictKind::Unknown, std::nullopt, coords,
                          "nonzero in area coordinates but no counterexample was found"},
                  coords);
  }

  Outcome prove_clause(const Construction& c, const Clause& clause, int index, ProofTrace& trace) {
    ClauseRecord rec;
    rec.clause = clause;
    PointResolver resolve = c.resolver();
    Violation violates = [&](const NumericModel& m) { return !check(clause, m); };
    Outcome out;

    if (!is_inequality(clause.relation)) {
      RationalExpr e = lower(clause.lhs, resolve) - lower(clause.rhs, resolve);
      trace.steps.push_back(TraceStep{TraceKind::Uniformize, index, {}, {}, {}, clause.to_string(), e.to_string(), {}});
      if (clause.relation == Relation::Eq) {
        bool used = false;
        out = decide_equality(c, e, violates, opts_.area_coords, &rec, &trace.steps, index, used);
        trace.used_area_coords |= used;
      } else {
        Clause eq{Relation::Eq, clause.lhs, clause.rhs};
        Violation eq_violated = [&](const NumericModel& m) { return !check(eq, m); };
        bool used = false;
        Outcome o = decide_equality(c, e, eq_violated, opts_.area_coords, &rec, &trace.steps, index, used);
        trace.used_area_coords |= used;
        if (o.kind == VerdictKind::Disproved) {
          out = Outcome{VerdictKind::Proved, {}, {}, "the equality is generically false"};
        } else if (o.kind == VerdictKind::Proved) {
          auto w = search(c, violates, opts_.oracle_samples);
          out = w ? Outcome{VerdictKind::Disproved, w, {}, "the equality holds generically"}
                  : Outcome{VerdictKind::Unknown, std::nullopt, std::nullopt, "the equality holds generically"};
        } else {
          out = Outcome{VerdictKind::Unknown, std::nullopt, o.residual, o.reason};
        }
        rec.verdict = out.kind;
      }
    } else {
      out = prove_inequality(c, clause, index, rec, trace, violates);
    }
    trace.steps.push_back(TraceStep{TraceKind::ZeroTest, index, {}, {}, {}, {}, verdict_name(out.kind), out.reason});
    trace.clauses.push_back(std::move(rec));
    return out;
  }

  Outcome prove_inequality(const Construction& c, const Clause& clause, int index, ClauseRecord& rec,
                           ProofTrace& trace, const Violation& violates) {
    bool lower_side = clause.relation == Relation::Le || clause.relation == Relation::Lt;
    bool strict = clause.relation == Relation::Lt || clause.relation == Relation::Gt;
    const ExprTree& big = lower_side ? clause.rhs : clause.lhs;
    const ExprTree& small = lower_side ? clause.lhs : clause.rhs;
    PointResolver resolve = c.resolver();
    SurdSum<RationalExpr> f = lower_surd(big, resolve) - lower_surd(small, resolve);
    std::vector<RationalExpr> parts = surd_components(f);
    rec.initial = parts;
    trace.steps.push_back(
        TraceStep{TraceKind::Uniformize, index, {}, {}, {}, clause.to_string(), describe(f) + (strict ? " > 0" : " >= 0"), {}});

    std::string reason;
    if (!eliminate(c, parts, &rec, &trace.steps, index, reason)) {
      rec.reduced = parts;
      rec.verdict = VerdictKind::NotReduced;
      return Outcome{VerdictKind::NotReduced, std::nullopt, parts[0], reason};
    }
    if (has_kind(atoms_of(parts), AtomKind::PythDiff)) {
      for (auto& p : parts) p = expand_pythagoras(p);
      rec.pythagoras = true;
    }
    rec.reduced = parts;
    SurdSum<RationalExpr> reduced = from_components(parts);
    trace.steps.push_back(TraceStep{TraceKind::Pythagoras, index, {}, {}, {}, describe(f), describe(reduced), {}});

    std::optional<std::pair<Construction, Frame>> framed;
    InequalityContext ctx;
    ctx.to_coords = [&](const RationalExpr& e) -> std::optional<RationalExpr> {
      if (opts_.area_coords == AreaCoordsMode::Never) return std::nullopt;
      if (has_kind(e.atoms(), AtomKind::DistRatio)) return std::nullopt;
      if (!framed) {
        try {
          framed = install_frame(c);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::TooFewFreePoints) throw;
          return std::nullopt;
        }
      }
      check_deadline();
      RationalExpr out = to_area_coordinates(e, framed->second);
      trace.used_area_coords = true;
      trace.steps.push_back(TraceStep{TraceKind::AreaCoords, index, {}, {}, {}, e.to_string(), out.to_string(), {}});
      return out;
    };
    ctx.note = [&](const std::string& line) {
      trace.steps.push_back(TraceStep{TraceKind::Inequality, index, {}, {}, {}, {}, {}, line});
    };
    if (prove_nonnegative(reduced, strict, ctx)) {
      rec.verdict = VerdictKind::Proved;
      return Outcome{VerdictKind::Proved, {}, {}, {}};
    }
    if (auto w = search(c, violates, opts_.oracle_samples)) {
      trace.steps.push_back(TraceStep{TraceKind::Oracle, index, {}, {}, {}, {}, {}, "counterexample: " + w->to_string()});
      rec.verdict = VerdictKind::Disproved;
      return Outcome{VerdictKind::Disproved, w, {}, "counterexample found"};
    }
    rec.verdict = VerdictKind::Unknown;
    return Outcome{VerdictKind::Unknown, std::nullopt, std::nullopt, "inequality not decided"};
  }

  static std::string describe(const SurdSum<RationalExpr>& s) {
    std::string out = s.rational.to_string();
    for (const auto& [k, r] : s.roots) out += " + (" + k.to_string() + ")*sqrt(" + r.to_string() + ")";
    return out;
  }

  static Verdict combine(const std::vector<Outcome>& outcomes) {
    for (const auto& o : outcomes) {
      if (o.kind == VerdictKind::Disproved) return Verdict{o.kind, o.witness, std::nullopt, o.reason};
    }
    bool all = true;
    for (const auto& o : outcomes) all = all && o.kind == VerdictKind::Proved;
    if (all) return Verdict{VerdictKind::Proved, std::nullopt, std::nullopt, {}};
    for (const auto& o : outcomes) {
      if (o.kind == VerdictKind::NotReduced) return Verdict{o.kind, std::nullopt, o.residual, o.reason};
    }
    for (const auto& o : outcomes) {
      if (o.kind == VerdictKind::Unknown) return Verdict{o.kind, std::nullopt, o.residual, o.reason};
    }
    return Verdict{};
  }

  ProverOptions opts_;
  Clock::time_point start_;
  EliminationCache cache_;
  std::uint64_t streams_ = 0;
};

}  // namespace

ProofResult prove(const Construction& c, const Conjecture& conj, const ProverOptions& opts) {
  Session session(opts);
  return session.run(c, conj);
}

bool provable_zero(const Construction& c, const RationalExpr& e, const ProverOptions& opts) {
  Session session(opts);
  return session.provable_zero(c, e);
}

bool prove_negation_unprovable(const Construction& c, const Conjecture& conj, const ProverOptions& opts) {
  ProverOptions sub = opts;
  sub.skip_ndg = true;
  if (sub.area_coords == AreaCoordsMode::Never) sub.area_coords = AreaCoordsMode::Auto;
  return prove(c, conj, sub).verdict.kind != VerdictKind::Proved;
}

}  // namespace area
