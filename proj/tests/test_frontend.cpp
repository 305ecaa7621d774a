#include <doctest.h>

#include <fstream>
#include <sstream>

#include "area/cli.hpp"
#include "area/corpus.hpp"
#include "area/dsl.hpp"
#include "area/errors.hpp"
#include "area/trace_document.hpp"

using namespace area;

namespace {

std::string corpus_path(const char* name) { return std::string(AREA_CORPUS_DIR) + "/" + name + ".geo"; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/areaprove_" + name + ".geo";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("intercept source file") {
  SourceFile f = parse(read(corpus_path("intercept")));
  const Construction& c = f.construction;
  CHECK(c.info("S").order == 5);
  CHECK(c.info("D").order == 4);
  CHECK(c.step_of("S").to_string() == "ECS2(S,A,B,C,D)");
  CHECK(f.conjecture().clauses.size() == 1);
  CHECK(f.goal.to_string() == "ratio(S,A;A,B) = ratio(S,C;C,D)");
}

TEST_CASE("raw ECS aliases") {
  SourceFile a = parse("ECS1(A,B,C)\nparam r\nECS4(D,B,A,C,r)\nECS2(S,A,B,C,D)\nprove S[A,B,S] = 0");
  SourceFile b = parse(read(corpus_path("intercept")));
  CHECK(a.construction.to_string() == b.construction.to_string());
  SourceFile c = parse("points P U V\nF := ECS3(P,U,V)\nY := ECS5(U,V,2)\nprove S[U,V,F] = 0");
  CHECK(c.construction.step_of("F").to_string() == "ECS3(F,P,U,V)");
  CHECK(c.construction.step_of("Y").to_string() == "ECS5(Y,U,V,2)");
}

TEST_CASE("predicate goals expand") {
  SourceFile f = parse("points A B C D\nprove parallel(A,B;C,D)");
  Conjecture conj = f.conjecture();
  REQUIRE(conj.clauses.size() == 3);
  CHECK(conj.clauses[0].relation == Relation::Ne);
  CHECK(conj.clauses[0].to_string() == "P[A,B,A] != 0");
  CHECK(conj.clauses[1].to_string() == "P[C,D,C] != 0");
  CHECK(conj.clauses[2].relation == Relation::Eq);
  Conjecture mid = parse("points A B M\nprove midpoint(M;A,B)").conjecture();
  REQUIRE(mid.clauses.size() == 2);
  CHECK(mid.clauses[1].to_string() == "ratio(A,M;A,B) = (1/2)");
  CHECK(parse("points A B C D\nprove eqdist(A,B;C,D)").conjecture().clauses[0].to_string() == "d2(A,B) = d2(C,D)");
}

TEST_CASE("errors carry positions") {
  try {
    parse("points A B C D\nS := intersect(A,B; C,Z)\nprove S[A,B,S] = 0");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPoint);
    CHECK(std::string(e.what()).rfind("2:", 0) == 0);
  }
  try {
    parse("points A B\nprove S[A,B,A] = = 0");
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_AS(parse("points A B\n"), ParseError);
  CHECK_THROWS_AS(parse("points A B\nprove d2(A,B) = 0\nprove d2(A,B) = 1"), ParseError);
  CHECK_THROWS_AS(parse("points A B\nD := on_parallel(A; A,B; t)\nprove d2(A,B) = 0"), ParseError);
  CHECK_THROWS_AS(parse("points A A\nprove d2(A,A) = 0"), Error);
}

TEST_CASE("comments, layout and unicode relations") {
  SourceFile f = parse("# header\npoints A B C   # free\nprove S[A,B,C] ≠ 0");
  CHECK(f.conjecture().clauses[0].relation == Relation::Ne);
  SourceFile g = parse("points A B C; prove dist(A,B) + dist(B,C) ≥ dist(A,C)");
  CHECK(g.conjecture().clauses[0].relation == Relation::Ge);
  SourceFile o = parse("points A B\noption area_coords = never\noption seed = 7\nprove d2(A,B) >= 0");
  CHECK(o.options.area_coords == AreaCoordsMode::Never);
  CHECK(o.options.seed == 7u);
}

TEST_CASE("print and parse round trip") {
  for (const auto& entry : bundled_corpus()) {
    CAPTURE(entry.name);
    SourceFile f = parse(entry.source);
    std::string text = print(f);
    SourceFile g = parse(text);
    CHECK(g.construction.to_string() == f.construction.to_string());
    CHECK(g.goal == f.goal);
    CHECK(g.parameters == f.parameters);
    CHECK(print(g) == text);
  }
}

TEST_CASE("text trace shows each elimination") {
  SourceFile f = parse(read(corpus_path("intercept")));
  ProofResult r = prove(f.construction, f.conjecture());
  std::string text = render_text(make_document(r, f.goal.to_string()));
  CHECK(text.find("eliminate S via EL1 (on-line): ratio(A,S;A,B) ⟶ -S[A,C,D]/(S[A,B,C] - S[A,B,D])") !=
        std::string::npos);
  CHECK(text.find("eliminate D via EL7 (linear): S[A,B,D] ⟶ S[A,B,C]*r") != std::string::npos);
  CHECK(text.find("area coordinates used: no") != std::string::npos);
}

TEST_CASE("an empty trace renders only the verdict") {
  ProofResult r;
  r.verdict.kind = VerdictKind::Proved;
  CHECK(render_text(make_document(r, "0 = 0")) == "verdict: Proved\n");
}

TEST_CASE("structured documents round trip") {
  for (const char* src : {"points A B C\nprove collinear(A,B,C)", "points A B C D\nprove ratio(A,B;C,D) = 2"}) {
    SourceFile f = parse(src);
    TraceDocument doc = make_document(prove(f.construction, f.conjecture()), f.goal.to_string(), "x", true);
    CHECK(parse_structured(render_structured(doc)) == doc);
  }
  SourceFile f = parse(read(corpus_path("euler_line")));
  TraceDocument doc = make_document(prove(f.construction, f.conjecture()), f.goal.to_string());
  std::string text = render_structured(doc);
  CHECK(text.find("\"schema\": \"areaprover.trace/1\"") != std::string::npos);
  CHECK(text.find("wall_ms") == std::string::npos);
  CHECK(parse_structured(text) == doc);
  CHECK(render_structured(parse_structured(text)) == text);
  CHECK_THROWS_AS(parse_structured("{\"schema\": \"other/9\"}"), Error);
}

TEST_CASE("command line") {
  CliRun ok = cli({"prove", corpus_path("intercept")});
  CHECK(ok.code == kExitProved);
  CHECK(ok.out.find("area coordinates used: no") != std::string::npos);

  CliRun r1 = cli({"prove", std::string(AREA_TEST_DATA) + "/intercept_r1.geo"});
  CHECK(r1.code == kExitConstruction);
  CHECK(r1.err.find("refute S[C,A,B] = S[D,A,B]") != std::string::npos);

  CHECK(cli({"prove", temp_file("collinear", "points A B C\nprove collinear(A,B,C)")}).code == kExitDisproved);
  CHECK(cli({"prove", temp_file("ratio", "points A B C D\nprove ratio(A,B;C,D) = 2")}).code == kExitUndecided);
  CHECK(cli({"prove", temp_file("bad", "points A B\nprove S[A,B = 0")}).code == kExitParse);
  CHECK(cli({"prove", "/nonexistent.geo"}).code == kExitParse);
  CHECK(cli({"prove", corpus_path("heron"), "--area-coords=never"}).code == kExitUndecided);
  CHECK(cli({"prove", corpus_path("heron"), "--area-coords", "always", "--oracle-check", "20"}).code == kExitProved);
  CHECK(cli({"prove", corpus_path("intercept"), "--area-coords=sometimes"}).code == kExitParse);

  CliRun structured = cli({"prove", corpus_path("midpoint"), "--trace=structured", "--seed", "9"});
  CHECK(structured.code == kExitProved);
  CHECK(parse_structured(structured.out).verdict == "Proved");

  CliRun check = cli({"check", corpus_path("intercept")});
  CHECK(check.code == 0);
  CHECK(check.out.find("refute P[A,C,A] = 0 [consistent]") != std::string::npos);
  CHECK(cli({"check", std::string(AREA_TEST_DATA) + "/intercept_r1.geo"}).code == kExitConstruction);
}

TEST_CASE("every corpus file passes check") {
  for (const auto& entry : bundled_corpus()) {
    CAPTURE(entry.name);
    CHECK(cli({"check", corpus_path(entry.name.c_str())}).code == 0);
  }
}

TEST_CASE("corpus report") {
  CliRun run = cli({"corpus", "run"});
  CHECK(run.code == 0);
  CHECK(run.out.find("Triangle Inequality") != std::string::npos);
  CHECK(run.out.find("11 theorems") != std::string::npos);
  CliRun one = cli({"corpus", "run", "--filter", "heron"});
  CHECK(one.out.find("1 theorems") != std::string::npos);
  CHECK(bundled_corpus().size() == 11);
  CHECK(corpus_title(bundled_corpus().front()) == "Ceva's Theorem");
}
