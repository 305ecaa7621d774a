#include <doctest.h>

#include <fstream>
#include <sstream>

#include "area/dsl.hpp"
#include "area/errors.hpp"
#include "area/lowering.hpp"
#include "area/prover.hpp"

using namespace area;

namespace {

ProofResult run(const std::string& src, ProverOptions opts = {}) {
  SourceFile f = parse(src);
  f.options.apply(opts);
  return prove(f.construction, f.conjecture(), opts);
}

std::string corpus(const char* name) {
  std::ifstream in(std::string(AREA_CORPUS_DIR) + "/" + name + ".geo");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

VerdictKind verdict(const std::string& src, ProverOptions opts = {}) { return run(src, opts).verdict.kind; }

}  // namespace

TEST_CASE("intercept theorem is proved without area coordinates") {
  ProofResult r = run(corpus("intercept"));
  CHECK(r.verdict.kind == VerdictKind::Proved);
  CHECK_FALSE(r.trace.used_area_coords);
}

TEST_CASE("three free points are not collinear") {
  ProofResult r = run("points A B C\nprove collinear(A,B,C)");
  CHECK(r.verdict.kind == VerdictKind::Disproved);
  REQUIRE(r.verdict.counterexample);
  SourceFile f = parse("points A B C\nprove collinear(A,B,C)");
  CHECK_FALSE(check(f.conjecture(), *r.verdict.counterexample));
}

TEST_CASE("Heron's formula needs area coordinates") {
  ProofResult r = run(corpus("heron"));
  CHECK(r.verdict.kind == VerdictKind::Proved);
  CHECK(r.trace.used_area_coords);
  ProverOptions never;
  never.area_coords = AreaCoordsMode::Never;
  CHECK(verdict(corpus("heron"), never) == VerdictKind::NotReduced);
}

TEST_CASE("inequalities") {
  CHECK(verdict("points A B\nprove d2(A,B) >= 0") == VerdictKind::Proved);
  CHECK(verdict(corpus("triangle_inequality")) == VerdictKind::Proved);
  CHECK(verdict("points A B C\nprove dist(A,C) <= dist(A,B) + dist(B,C)") == VerdictKind::Proved);
  ProofResult neg = run("points A B C\nprove S[A,B,C] > 0");
  CHECK(neg.verdict.kind == VerdictKind::Disproved);
  CHECK(neg.verdict.counterexample);
  CHECK(verdict("points A B C\nprove dist(A,B) >= dist(A,C) + dist(B,C)") == VerdictKind::Disproved);
  CHECK(verdict("points A B\nprove d2(A,B) + 1 > 0") == VerdictKind::Proved);
}

TEST_CASE("disequalities hold when the equality is generically false") {
  CHECK(verdict("points A B C\nprove S[A,B,C] != 0") == VerdictKind::Proved);
  CHECK(verdict("points A B\nprove P[A,B,A] != 2*d2(A,B)") == VerdictKind::Disproved);
}

TEST_CASE("parallel predicate with its non-degeneracy clauses") {
  CHECK(verdict("points A B C\nD := on_parallel(C; A,B; 2)\nprove parallel(A,B;C,D)") == VerdictKind::Proved);
  CHECK(verdict("points A B C\nD := on_perp(C,A; 2)\nprove perpendicular(C,D;A,C)") == VerdictKind::Proved);
  CHECK(verdict("points A B\nM := on_parallel(A; A,B; 1/2)\nprove midpoint(M;A,B)") == VerdictKind::Proved);
  CHECK(verdict("points A B\nprove identical(A,B)") == VerdictKind::Disproved);
}

TEST_CASE("ratios over free points are not reduced") {
  ProofResult r = run("points A B C D\nprove ratio(A,B;C,D) = 2");
  CHECK(r.verdict.kind == VerdictKind::NotReduced);
  REQUIRE(r.verdict.residual);
  CHECK(r.verdict.reason.find("ratio(A,B;C,D)") != std::string::npos);
  CHECK(verdict("points A B C D\nprove ratio(A,B;C,D) = ratio(A,B;C,D)") == VerdictKind::Proved);
}

TEST_CASE("trace replay reproduces the reduced expression") {
  for (const char* name : {"intercept", "ceva", "euler_line", "pythagorean", "triangle_inequality"}) {
    CAPTURE(name);
    ProofResult r = run(corpus(name));
    for (std::size_t i = 0; i < r.trace.clauses.size(); ++i) CHECK(r.trace.replay(i) == r.trace.clauses[i].reduced);
  }
}

TEST_CASE("runs are deterministic") {
  ProofResult a = run(corpus("gauss_newton"));
  ProofResult b = run(corpus("gauss_newton"));
  CHECK(a.trace.steps == b.trace.steps);
  ProofResult c = run("points A B C\nprove collinear(A,B,C)");
  ProofResult d = run("points A B C\nprove collinear(A,B,C)");
  CHECK(c.verdict.counterexample == d.verdict.counterexample);
}

TEST_CASE("inconsistent constructions are reported") {
  CHECK_THROWS_AS(run("points A B C\nD := on_parallel(B; A,C; 1)\nS := intersect(A,B; C,D)\nprove S[A,B,S] = 0"),
                  ConstructionInconsistent);
  ProverOptions skip;
  skip.skip_ndg = true;
  CHECK_THROWS_AS(run("points A B C\nD := on_parallel(B; A,C; 1)\nS := intersect(A,B; C,D)\nprove S[A,C,S] = 0", skip),
                  Error);
}

TEST_CASE("side-condition sub-proofs") {
  Construction c = parse("points A B C\nprove S[A,B,C] = 0").construction;
  CHECK(provable_zero(c, lower(parse_expression("S[A,A,B]"), c.resolver())));
  CHECK_FALSE(provable_zero(c, lower(parse_expression("P[A,C,A]"), c.resolver())));
}

TEST_CASE("option names") {
  CHECK(parse_area_coords_mode("always") == AreaCoordsMode::Always);
  CHECK_THROWS_AS(parse_area_coords_mode("sometimes"), Error);
  for (auto k : {TraceKind::Uniformize, TraceKind::Eliminate, TraceKind::AreaCoords, TraceKind::Oracle}) {
    CHECK(parse_trace_kind(trace_kind_name(k)) == k);
  }
}
