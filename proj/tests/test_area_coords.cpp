#include <doctest.h>

#include "area/area_coords.hpp"
#include "area/dsl.hpp"
#include "area/errors.hpp"
#include "area/lowering.hpp"
#include "support/harness.hpp"

using namespace area;

TEST_CASE("frame installation") {
  Construction heron = parse("points A B C\nprove S[A,B,C] = 0").construction;
  auto [framed, frame] = install_frame(heron);
  CHECK(frame.o.name == "A");
  CHECK(frame.x.name == "B");
  CHECK(framed.step_of(frame.y.name).to_string() == "ECS5(" + frame.y.name + ",A,B,1)");
  auto [again, frame2] = install_frame(framed);
  CHECK(again.to_string() == framed.to_string());
  CHECK(frame2.y == frame.y);

  Construction one = parse("points A\nprove d2(A,A) = 0").construction;
  try {
    install_frame(one);
    FAIL("framed a single point");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooFewFreePoints);
  }
}

TEST_CASE("frame point name avoids clashes") {
  Construction c = parse("points O X Y\nprove S[O,X,Y] = 0").construction;
  auto [framed, frame] = install_frame(c);
  CHECK(frame.y.name != "Y");
  CHECK(framed.has_point(frame.y.name));
}

TEST_CASE("coordinate rewriting") {
  Construction base = parse("points O X A B\nprove S[O,X,A] = 0").construction;
  auto [c, frame] = install_frame(base);
  auto ex = [&](const std::string& t) { return lower(parse_expression(t), c.resolver()); };
  RationalExpr w(frame.w());
  CHECK(to_area_coordinates(w * w, frame) == RationalExpr(Scalar(1, 4)));
  const std::string y = frame.y.name;
  RationalExpr d2 = to_area_coordinates(ex("d2(A,B)"), frame);
  RationalExpr expected = RationalExpr(4) * ((ex("S[O," + y + ",A]") - ex("S[O," + y + ",B]")).pow(2) +
                                             (ex("S[O,X,A]") - ex("S[O,X,B]")).pow(2));
  CHECK(rexpr_equal(d2, expected));
  CHECK(rexpr_equal(to_area_coordinates(ex("S[O,X,A]"), frame), ex("S[O,X,A]")));
  CHECK_THROWS_AS(to_area_coordinates(ex("ratio(A,B;O,X)"), frame), Error);
}

TEST_CASE("even and odd parts") {
  Construction base = parse("points O X A\nprove S[O,X,A] = 0").construction;
  auto [c, frame] = install_frame(base);
  auto ex = [&](const std::string& t) { return lower(parse_expression(t), c.resolver()); };
  RationalExpr e = to_area_coordinates(ex("S[O,X,A] + S[O,X," + frame.y.name + "]*S[O,X,A]^2"), frame);
  FrameSplit split = split_by_frame(e.num(), frame);
  CHECK(split.even == ex("S[O,X,A]").num());
  CHECK(split.odd == ex("S[O,X,A]^2").num());
}

TEST_CASE("random expressions keep their value") {
  auto res = area::testing::run_area_coordinate_suite(200, 3);
  for (const auto& m : res.messages) MESSAGE(m);
  CHECK(res.checked == 200);
  CHECK(res.frame_squares > 0);
  CHECK(res.failures == 0);
}
