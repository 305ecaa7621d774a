#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "area/cli.hpp"
#include "area/corpus.hpp"
#include "area/dsl.hpp"
#include "area/errors.hpp"
#include "area/lowering.hpp"
#include "support/harness.hpp"

using namespace area;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RationalExpr S(const Construction& c, const char* a, const char* b, const char* d) {
  return lower(ExprTree::S({a, b, d}), c.resolver());
}

Outcome corpus_reproduction() {
  Outcome o;
  const std::map<std::string, bool> want = {
      {"ceva", false},     {"desargues", false}, {"euler_line", true},    {"gauss_newton", true},
      {"heron", true},     {"intercept", false}, {"midpoint", false},     {"menelaus", false},
      {"pappus", false},   {"pythagorean", false}, {"triangle_inequality", true}};
  auto start = std::chrono::steady_clock::now();
  auto rows = run_corpus("", {});
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(rows.size() == 11, "expected 11 theorems, got " + std::to_string(rows.size()));
  for (const auto& r : rows) {
    o.require(r.verdict == VerdictKind::Proved, r.title + " is " + verdict_name(r.verdict));
    auto it = want.find(r.name);
    o.require(it != want.end(), "unexpected theorem " + r.name);
    if (it != want.end()) {
      o.require(r.used_area_coords == it->second,
                r.title + " area coordinates " + (r.used_area_coords ? "yes" : "no"));
    }
    o.require(r.wall_ms < 10000, r.title + " took " + std::to_string(r.wall_ms) + " ms");
  }
  o.require(total < 60, "corpus took " + std::to_string(total) + " s");
  if (o.pass) o.detail = "11 Proved, area coordinates exactly for Euler, Gauss-Newton, Heron, Triangle Inequality";
  return o;
}

Outcome intercept_walkthrough() {
  Outcome o;
  SourceFile f = parse(read(AREA_CORPUS_DIR "/intercept.geo"));
  const Construction& c = f.construction;
  ProofResult res = prove(c, f.conjecture());
  o.require(res.verdict.kind == VerdictKind::Proved, "intercept not proved");
  o.require(!res.trace.used_area_coords, "intercept used area coordinates");
  o.require(res.trace.clauses.size() == 1, "expected one clause record");
  if (!o.pass) return o;
  const ClauseRecord& rec = res.trace.clauses[0];
  o.require(rec.rounds.size() == 2, "expected two elimination rounds, got " + std::to_string(rec.rounds.size()));
  if (!o.pass) return o;
  RationalExpr after_s = substitute(rec.initial[0], rec.rounds[0]);
  RationalExpr eq4 = S(c, "A", "C", "D") / (S(c, "A", "B", "C") - S(c, "A", "B", "D")) -
                     S(c, "A", "B", "C") / (S(c, "A", "C", "D") - S(c, "B", "C", "D"));
  o.require(!after_s.mentions("S"), "S survives the first round");
  o.require(rexpr_equal(after_s, eq4), "reduced form after S is " + after_s.to_string());
  RationalExpr after_d = substitute(after_s, rec.rounds[1]);
  o.require(after_d.is_zero() && after_d.num().is_zero(), "after D: " + after_d.to_string());
  o.require(res.trace.replay(0) == rec.reduced, "replay differs from the recorded reduction");
  if (o.pass) o.detail = "after S: " + after_s.to_string() + "; after D: 0";
  return o;
}

Outcome ndg_behavior() {
  Outcome o;
  SourceFile f = parse(read(AREA_CORPUS_DIR "/intercept.geo"));
  ProofResult res = prove(f.construction, f.conjecture());
  const auto& n = res.trace.ndgs;
  o.require(n.size() == 2, "expected 2 ndg checks, got " + std::to_string(n.size()));
  if (n.size() == 2) {
    o.require(n[0].condition == "refute P[A,C,A] = 0", "first check " + n[0].condition);
    o.require(n[1].condition == "refute S[C,A,B] = S[D,A,B]", "second check " + n[1].condition);
    o.require(n[0].status == NdgStatus::Consistent && n[1].status == NdgStatus::Consistent, "symbolic r rejected");
  }
  SourceFile r1 = parse(read(AREA_TEST_DATA "/intercept_r1.geo"));
  try {
    prove(r1.construction, r1.conjecture());
    o.require(false, "r = 1 construction validated");
  } catch (const ConstructionInconsistent& e) {
    o.require(e.step() == "ECS2(S,A,B,C,D)", "failing step " + e.step());
    o.require(e.ndg() == "refute S[C,A,B] = S[D,A,B]", "failing ndg " + e.ndg());
  }
  std::ostringstream out, err;
  int code = run_cli({"prove", AREA_TEST_DATA "/intercept_r1.geo"}, out, err);
  o.require(code == kExitConstruction, "CLI exit code " + std::to_string(code));
  o.require(err.str().find("S[C,A,B] = S[D,A,B]") != std::string::npos, "CLI message does not cite the ndg");
  if (o.pass) o.detail = "r symbolic: 2 checks as listed; r = 1: ECS2 parallelism ndg violated, exit 3";
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  auto res = testing::run_lemma_suite(200, 2024);
  for (const auto& key : testing::lemma_cases()) {
    int n = res.passed.count(key) ? res.passed.at(key) : 0;
    o.require(n >= 200, key + " has " + std::to_string(n) + " passing instances");
  }
  o.require(res.failures == 0, std::to_string(res.failures) + " failures" +
                                   (res.messages.empty() ? "" : ", first: " + res.messages[0]));
  if (o.pass) o.detail = std::to_string(res.checked) + " instances over " + std::to_string(testing::lemma_cases().size()) +
                         " lemma/branch cases, 0 failures";
  return o;
}

Outcome canonicalization() {
  Outcome o;
  auto res = testing::run_canonicalization_suite(10000, 7);
  o.require(res.checked == 10000, "checked " + std::to_string(res.checked));
  o.require(res.failures == 0, std::to_string(res.failures) + " failures" +
                                   (res.messages.empty() ? "" : ", first: " + res.messages[0]));
  if (o.pass) o.detail = "10000 random atoms, 0 failures";
  return o;
}

Outcome soundness() {
  Outcome o;
  int proved = 0;
  for (const auto& entry : bundled_corpus()) {
    SourceFile f = parse(entry.source);
    Conjecture conj = f.conjecture();
    ProofResult res = prove(f.construction, conj);
    if (res.verdict.kind != VerdictKind::Proved) continue;
    ++proved;
    int valid = 0;
    for (std::uint64_t i = 0; valid < 100 && i < 400; ++i) {
      NumericModel m = realize(f.construction, mix_seed(99, i));
      try {
        bool ok = check(conj, m);
        ++valid;
        o.require(ok, entry.name + " fails on oracle sample " + std::to_string(m.seed));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DivisionByZero && e.kind() != ErrorKind::NonParallelRatio) throw;
      }
    }
    o.require(valid == 100, entry.name + " had only " + std::to_string(valid) + " defined samples");
  }
  // Disproved verdicts: the counterexample violates the goal and satisfies every ndg.
  const char* disproved[] = {"points A B C\nprove collinear(A,B,C)",
                             "points A B C\nprove S[A,B,C] > 0",
                             "points A B C\nD := on_parallel(A; B,C; 1/3)\nprove parallel(A,B;C,D)",
                             "points A B C\nM := on_parallel(A; A,B; 1/2)\nprove d2(M,C) = d2(A,C)"};
  int witnesses = 0;
  for (const char* src : disproved) {
    SourceFile f = parse(src);
    Conjecture conj = f.conjecture();
    ProofResult res = prove(f.construction, conj);
    o.require(res.verdict.kind == VerdictKind::Disproved, std::string(src) + " not disproved");
    if (!res.verdict.counterexample) {
      o.require(false, std::string(src) + " has no counterexample");
      continue;
    }
    const NumericModel& m = *res.verdict.counterexample;
    o.require(!check(conj, m), std::string(src) + " counterexample satisfies the goal");
    for (const auto& step : f.construction.steps()) {
      for (const auto& ndg : ndg_conditions(step)) {
        auto diff = evaluate(ndg.lhs, m) - evaluate(ndg.rhs, m);
        o.require(sign_of(diff) != 0, std::string(src) + " counterexample violates " + ndg.to_string());
      }
    }
    ++witnesses;
  }
  if (o.pass) {
    o.detail = std::to_string(proved) + " Proved verdicts pass 100 samples; " + std::to_string(witnesses) +
               " Disproved witnesses valid";
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  SourceFile free3 = parse("points A B C\nprove collinear(A,B,C)");
  ProofResult r1 = prove(free3.construction, free3.conjecture());
  o.require(r1.verdict.kind == VerdictKind::Disproved, std::string("collinear is ") + verdict_name(r1.verdict.kind));
  std::string ceva = read(AREA_CORPUS_DIR "/ceva.geo");
  auto pos = ceva.find("ratio(C,E;E,A)");
  o.require(pos != std::string::npos, "ceva goal not found");
  if (pos == std::string::npos) return o;
  ceva.replace(pos, 14, "ratio(E,A;C,E)");
  SourceFile bad = parse(ceva);
  ProofResult r2 = prove(bad.construction, bad.conjecture());
  o.require(r2.verdict.kind == VerdictKind::Disproved || r2.verdict.kind == VerdictKind::NotReduced,
            std::string("perturbed Ceva is ") + verdict_name(r2.verdict.kind));
  if (o.pass) {
    o.detail = std::string("collinear: ") + verdict_name(r1.verdict.kind) + ", perturbed Ceva: " +
               verdict_name(r2.verdict.kind);
  }
  return o;
}

Outcome area_coordinates() {
  Outcome o;
  auto res = testing::run_area_coordinate_suite(1000, 11);
  o.require(res.checked == 1000, "only " + std::to_string(res.checked) + " expressions evaluated");
  o.require(res.frame_squares > 0, "S[O,X,Y]^2 never exercised");
  o.require(res.failures == 0, std::to_string(res.failures) + " failures" +
                                   (res.messages.empty() ? "" : ", first: " + res.messages[0]));
  Construction c = parse("points O X A\nprove S[O,X,A] = 0").construction;
  auto [framed, frame] = install_frame(c);
  RationalExpr w2 = to_area_coordinates(RationalExpr(frame.w()).pow(2), frame);
  o.require(w2 == RationalExpr(Scalar(1, 4)), "S[O,X,Y]^2 maps to " + w2.to_string());
  if (o.pass) {
    o.detail = std::to_string(res.checked) + " expressions exact, " + std::to_string(res.frame_squares) +
               " with S[O,X,Y]^2; S[O,X,Y]^2 -> 1/4";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::ostringstream a, b, ea, eb;
  int ca = run_cli({"corpus", "run", "--seed", "42", "--trace=structured"}, a, ea);
  int cb = run_cli({"corpus", "run", "--seed", "42", "--trace=structured"}, b, eb);
  o.require(ca == 0 && cb == 0, "exit codes " + std::to_string(ca) + ", " + std::to_string(cb));
  o.require(!a.str().empty() && a.str() == b.str(), "documents differ");
  if (o.pass) o.detail = std::to_string(a.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"corpus reproduction", corpus_reproduction},
      {"intercept walkthrough", intercept_walkthrough},
      {"ndg behavior", ndg_behavior},
      {"elimination lemma differential suite", lemma_suite},
      {"canonicalization suite", canonicalization},
      {"soundness smoke", soundness},
      {"negative controls", negative_controls},
      {"area coordinates faithfulness", area_coordinates},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index++ << " " << c.name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
