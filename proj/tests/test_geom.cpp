#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "gallery/geom/io.hpp"
#include "gallery/geom/polygon.hpp"
#include "support/instances.hpp"

using namespace gallery;
using namespace gallery::geom;

namespace {

Point rand_point(std::mt19937_64& rng, long lo, long hi) {
  // Bounded draws by modulo keep the stream identical across platforms.
  unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  long x = lo + static_cast<long>(rng() % span);
  long y = lo + static_cast<long>(rng() % span);
  return {Q(x), Q(y)};
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("8/3") == Q(8, 3));
  CHECK(parse_rational("-7") == Q(-7));
  CHECK(parse_rational("+4") == Q(4));
  CHECK(parse_rational("2.75") == Q(11, 4));
  CHECK(parse_rational("-0.5") == Q(-1, 2));
  CHECK(parse_rational("6/4") == Q(3, 2));
  CHECK(parse_rational("1/-2") == Q(-1, 2));
  CHECK(to_string(Q(3, 2)) == "3/2");
  CHECK(to_string(Q(-5)) == "-5");
  CHECK(parse_rational(to_string(Q(-22, 7))) == Q(-22, 7));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("5."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 2"), std::invalid_argument);
}

TEST_CASE("rational floor and ceil") {
  CHECK(floor_long(Q(7, 2)) == 3);
  CHECK(ceil_long(Q(7, 2)) == 4);
  CHECK(floor_long(Q(-7, 2)) == -4);
  CHECK(ceil_long(Q(-7, 2)) == -3);
  CHECK(floor_long(Q(5)) == 5);
  CHECK(ceil_long(Q(5)) == 5);
  CHECK(sign(Q(0)) == 0);
  CHECK(sign(Q(-3, 7)) == -1);
}

TEST_CASE("orientation and on_segment basics") {
  Point a{Q(0), Q(0)}, b{Q(4), Q(0)}, c{Q(4), Q(3)};
  CHECK(orientation(a, b, c) == 1);
  CHECK(orientation(a, c, b) == -1);
  CHECK(orientation(a, b, Point{Q(8), Q(0)}) == 0);

  CHECK(on_segment(a, a, b));
  CHECK(on_segment(b, a, b));
  CHECK(on_segment(Point{Q(2), Q(0)}, a, b));
  CHECK(on_segment(Point{Q(1, 3), Q(0)}, a, b));
  CHECK_FALSE(on_segment(Point{Q(5), Q(0)}, a, b));
  CHECK_FALSE(on_segment(Point{Q(2), Q(1, 1000000)}, a, b));
}

TEST_CASE("orientation properties on random triples") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    Point a = rand_point(rng, -6, 6);
    Point b = rand_point(rng, -6, 6);
    Point c = rand_point(rng, -6, 6);
    CHECK(orientation(a, b, c) == -orientation(a, c, b));
    CHECK(orientation(a, b, c) == orientation(b, c, a));
    CHECK(on_segment(a, a, b));
    if (on_segment(c, a, b)) CHECK(collinear(a, b, c));
  }
}

TEST_CASE("segment intersection cases") {
  Segment cross_a{{Q(0), Q(0)}, {Q(4), Q(4)}};
  Segment cross_b{{Q(0), Q(4)}, {Q(4), Q(0)}};
  CHECK(segments_intersect(cross_a, cross_b));
  CHECK(segments_properly_cross(cross_a, cross_b));
  CHECK_FALSE(collinear_overlap(cross_a, cross_b));

  Segment touch_a{{Q(0), Q(0)}, {Q(2), Q(2)}};
  Segment touch_b{{Q(2), Q(2)}, {Q(5), Q(1)}};
  CHECK(segments_intersect(touch_a, touch_b));
  CHECK_FALSE(segments_properly_cross(touch_a, touch_b));

  Segment tee_a{{Q(0), Q(0)}, {Q(4), Q(0)}};
  Segment tee_b{{Q(2), Q(0)}, {Q(2), Q(3)}};
  CHECK(segments_intersect(tee_a, tee_b));
  CHECK_FALSE(segments_properly_cross(tee_a, tee_b));
  CHECK_FALSE(collinear_overlap(tee_a, tee_b));

  Segment over_a{{Q(0), Q(0)}, {Q(4), Q(0)}};
  Segment over_b{{Q(3), Q(0)}, {Q(9), Q(0)}};
  CHECK(segments_intersect(over_a, over_b));
  CHECK(collinear_overlap(over_a, over_b));
  CHECK_FALSE(segments_properly_cross(over_a, over_b));
  CHECK(collinear_overlap(over_a, over_a));

  Segment gap_a{{Q(0), Q(0)}, {Q(1), Q(0)}};
  Segment gap_b{{Q(2), Q(0)}, {Q(3), Q(0)}};
  CHECK_FALSE(segments_intersect(gap_a, gap_b));
  CHECK_FALSE(collinear_overlap(gap_a, gap_b));

  Segment par_a{{Q(0), Q(0)}, {Q(4), Q(0)}};
  Segment par_b{{Q(0), Q(1)}, {Q(4), Q(1)}};
  CHECK_FALSE(segments_intersect(par_a, par_b));
  CHECK_FALSE(collinear_overlap(par_a, par_b));

  // Collinear end-to-end touch is intersection but not overlap.
  Segment abut_a{{Q(0), Q(0)}, {Q(2), Q(0)}};
  Segment abut_b{{Q(2), Q(0)}, {Q(5), Q(0)}};
  CHECK(segments_intersect(abut_a, abut_b));
  CHECK_FALSE(collinear_overlap(abut_a, abut_b));
}

TEST_CASE("segment predicate consistency on random pairs") {
  std::mt19937_64 rng(77001);
  for (int iter = 0; iter < 400; ++iter) {
    Segment s{rand_point(rng, -5, 5), rand_point(rng, -5, 5)};
    Segment t{rand_point(rng, -5, 5), rand_point(rng, -5, 5)};
    if (s.degenerate() || t.degenerate()) continue;
    bool meet = segments_intersect(s, t);
    CHECK(meet == segments_intersect(t, s));
    if (segments_properly_cross(s, t)) CHECK(meet);
    if (collinear_overlap(s, t)) {
      CHECK(meet);
      CHECK_FALSE(segments_properly_cross(s, t));
    }
  }
}

TEST_CASE("line_intersection") {
  auto p = line_intersection({Q(0), Q(0)}, {Q(2), Q(2)}, {Q(0), Q(2)}, {Q(2), Q(0)});
  REQUIRE(p.has_value());
  CHECK(*p == Point{Q(1), Q(1)});

  CHECK_FALSE(line_intersection({Q(0), Q(0)}, {Q(1), Q(0)},
                                {Q(0), Q(1)}, {Q(1), Q(1)})
                  .has_value());

  // Lines meet outside both segments; the line intersection still exists.
  auto far = line_intersection({Q(0), Q(0)}, {Q(1), Q(1)}, {Q(3), Q(0)}, {Q(0), Q(3)});
  REQUIRE(far.has_value());
  CHECK(*far == Point{Q(3, 2), Q(3, 2)});
}

TEST_CASE("polygon area, vertices, containment on the triangle") {
  Polygon tri = test::triangle();
  tri.validate();
  CHECK(tri.area2() == Q(144));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edges().size() == 3);

  CHECK(tri.contains(Point{Q(6), Q(4)}));       // interior
  CHECK(tri.contains(Point{Q(0), Q(0)}));       // vertex
  CHECK(tri.contains(Point{Q(6), Q(0)}));       // edge midpoint
  CHECK(tri.strictly_inside(Point{Q(6), Q(4)}));
  CHECK_FALSE(tri.strictly_inside(Point{Q(6), Q(0)}));
  CHECK_FALSE(tri.contains(Point{Q(-1), Q(-1)}));
  CHECK_FALSE(tri.contains(Point{Q(0), Q(5)}));
}

TEST_CASE("polygon with hole: area and containment") {
  Polygon p = test::fig_p32();
  p.validate();
  CHECK(p.area2() == Q(128));  // 144 outer minus 16 hole
  CHECK(p.vertex_count() == 6);
  CHECK(p.edges().size() == 6);

  CHECK_FALSE(p.contains(Point{Q(6), Q(4)}));      // hole interior
  CHECK(p.contains(Point{Q(6), Q(8, 3)}));         // hole boundary counts
  CHECK(p.on_boundary(Point{Q(6), Q(8, 3)}));
  for (const Point& w : test::fig_p32_witnesses()) {
    CHECK(p.contains(w));
    CHECK(p.on_boundary(w));
  }
  CHECK(p.contains(Point{Q(6), Q(1)}));            // below the hole
  CHECK(p.strictly_inside(Point{Q(6), Q(1)}));
  CHECK_FALSE(p.contains(Point{Q(100), Q(0)}));
}

TEST_CASE("ray parity is robust when the ray passes through vertices") {
  Ring diamond = {{Q(1), Q(0)}, {Q(3), Q(-2)}, {Q(5), Q(0)}, {Q(3), Q(2)}};
  CHECK(signed_area2(diamond) > 0);
  CHECK_FALSE(parity_inside(diamond, Point{Q(0), Q(0)}));   // ray hits two vertices
  CHECK(parity_inside(diamond, Point{Q(3), Q(0)}));
  CHECK_FALSE(parity_inside(diamond, Point{Q(6), Q(0)}));
}

TEST_CASE("validate rejects malformed polygons") {
  auto expect_invalid = [](Polygon p, const char* needle) {
    try {
      p.validate();
      FAIL_CHECK("expected validation failure containing '" << needle << "'");
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      CHECK_MESSAGE(msg.find(needle) != std::string::npos,
                    "needle '" << needle << "' not found in: " << msg);
    }
  };

  Polygon cw;
  cw.outer = {{Q(0), Q(0)}, {Q(0), Q(4)}, {Q(4), Q(0)}};
  expect_invalid(cw, "counterclockwise");

  Polygon bowtie;
  bowtie.outer = {{Q(0), Q(0)}, {Q(4), Q(4)}, {Q(4), Q(0)}, {Q(0), Q(4)}};
  expect_invalid(bowtie, "self-intersects");

  Polygon dup;
  dup.outer = {{Q(0), Q(0)}, {Q(4), Q(0)}, {Q(4), Q(0)}, {Q(2), Q(3)}};
  expect_invalid(dup, "repeats");

  Polygon flat;
  flat.outer = {{Q(0), Q(0)}, {Q(2), Q(0)}, {Q(4), Q(0)}, {Q(4), Q(4)}, {Q(0), Q(4)}};
  expect_invalid(flat, "collinear");

  Polygon tiny;
  tiny.outer = {{Q(0), Q(0)}, {Q(4), Q(0)}};
  expect_invalid(tiny, "fewer than 3");

  Polygon hole_ccw = test::fig_p32();
  std::reverse(hole_ccw.holes[0].begin(), hole_ccw.holes[0].end());
  expect_invalid(hole_ccw, "clockwise");

  Polygon hole_outside = test::fig_p32();
  for (auto& v : hole_outside.holes[0]) v.x += Q(100);
  expect_invalid(hole_outside, "outer");

  Polygon hole_touching = test::fig_p32();
  // Drag the bottom-left hole vertex down onto the outer bottom edge.
  hole_touching.holes[0][0] = Point{Q(4), Q(0)};
  expect_invalid(hole_touching, "touches");

  Polygon nested = test::fig_p32();
  // Second hole sits inside the first (already clockwise).
  nested.holes.push_back({{Q(5), Q(3)}, {Q(6), Q(6)}, {Q(7), Q(3)}});
  expect_invalid(nested, "nested");

  Polygon crossing_holes = test::fig_p32();
  crossing_holes.holes.push_back(
      {{Q(5), Q(2)}, {Q(7), Q(5)}, {Q(9), Q(2)}});
  expect_invalid(crossing_holes, "touch");
}

TEST_CASE("all shared test instances validate") {
  test::triangle().validate();
  test::fig_p32().validate();
  test::l_hexagon().validate();
  test::antenna_teeth().validate();
  test::pinwheel_star().validate();
  test::pinwheel_right().validate();
  test::ring5().validate();
  test::ring3().validate();

  // Witness and guard points all belong to their polygons.
  auto all_in = [](const Polygon& p, const std::vector<Point>& pts) {
    for (const Point& v : pts) CHECK(p.contains(v));
  };
  all_in(test::fig_p32(), test::fig_p32_witnesses());
  all_in(test::fig_p32(), test::fig_p32_guards());
  all_in(test::pinwheel_star(), test::pinwheel_star_witnesses());
  all_in(test::pinwheel_star(), test::pinwheel_star_guards());
  all_in(test::pinwheel_right(), test::pinwheel_right_witnesses());
  all_in(test::pinwheel_right(), test::pinwheel_right_guards());
  all_in(test::ring5(), test::ring5_witnesses());
  all_in(test::ring5(), test::ring5_guards());
  all_in(test::ring3(), test::ring3_witnesses());
  all_in(test::ring3(), test::ring3_guards());
}

TEST_CASE("polygon text format round trip") {
  const char* text =
      "# triangle with centered hole\n"
      "outer 3\n"
      "0 0\n"
      "12 0\n"
      "6 12\n"
      "\n"
      "hole 3\n"
      "4 8/3\n"
      "6 20/3\n"
      "8 8/3\n";
  Polygon parsed = parse_polygon(text);
  Polygon built = test::fig_p32();
  CHECK(parsed.outer == built.outer);
  CHECK(parsed.holes == built.holes);

  Polygon again = parse_polygon(format_polygon(parsed));
  CHECK(again.outer == parsed.outer);
  CHECK(again.holes == parsed.holes);
}

TEST_CASE("polygon parser accepts decimals and mixed whitespace") {
  Polygon p = parse_polygon("outer 3\n  0.5 0\n 2.5 0\n1.5 1\n");
  CHECK(p.outer[0] == Point{Q(1, 2), Q(0)});
  CHECK(p.outer[1] == Point{Q(5, 2), Q(0)});
}

TEST_CASE("polygon parser reports line numbers") {
  auto expect_error = [](const char* text, const char* needle) {
    try {
      parse_polygon(text);
      FAIL_CHECK("expected parse failure containing '" << needle << "'");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("", "line 0");
  expect_error("outer\n", "line 1");
  expect_error("outer 3\n0 0\n1 0\n", "unexpected end");
  expect_error("outer three\n", "bad vertex count");
  expect_error("# lead\nouter 3\n0 0\n1 zz\n0 1\n", "line 4");
  expect_error("outer 3\n0 0 7\n1 0\n0 1\n", "expected '<x> <y>'");
  expect_error("hole 3\n0 0\n1 0\n0 1\n", "before 'outer'");
  expect_error("ring 3\n0 0\n1 0\n0 1\n", "unknown block");

  // Semantic failure after a clean parse: clockwise outer ring.
  CHECK_THROWS_AS(parse_polygon("outer 3\n0 0\n0 4\n4 0\n"), std::invalid_argument);
}
