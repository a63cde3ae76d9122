#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "wcn/arrangement.hpp"
#include "wcn/curves_io.hpp"
#include "wcn/error.hpp"

using namespace wcn;
namespace fx = wcn::fixtures;

namespace {

double total_bounded_area(const Arrangement& arr) {
  double s = 0;
  for (const Face& f : arr.faces()) s += f.area;
  return s;
}

void expect_exponent_sums_match_winding(const ClosedPolyline& c, const Arrangement& arr) {
  const Word w = extract_word(c, arr).word;
  for (std::size_t k = 0; k < arr.faces().size(); ++k) {
    EXPECT_EQ(exponent_sum(w, static_cast<Generator>(k)),
              winding_number(c, arr.faces()[k].representative, arr.eps()))
        << "face " << k;
  }
}

void expect_representatives_safe(const Arrangement& arr) {
  std::vector<double> xs;
  for (const Face& f : arr.faces()) {
    xs.push_back(f.representative.x);
    for (const Point& v : arr.vertices()) EXPECT_GT(std::abs(v.x - f.representative.x), arr.eps());
  }
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(std::adjacent_find(xs.begin(), xs.end()), xs.end());
}

}  // namespace

TEST(Predicates, Orientation) {
  EXPECT_EQ(orient2d({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient2d({0, 0}, {1, 0}, {0, -1}), -1);
  EXPECT_EQ(orient2d({0, 0}, {1, 1}, {3, 3}), 0);
  // Nearly collinear points where naive evaluation loses the sign.
  const Point a{0.5, 0.5}, b{12, 12}, c{24, 24};
  for (int i = 0; i < 64; ++i) {
    const Point p{0.5 + i * 0x1p-53, 0.5};
    const int s = orient2d(p, b, c);
    EXPECT_EQ(s, orient2d(b, c, p));
    EXPECT_EQ(s, -orient2d(c, b, p));
  }
  EXPECT_EQ(orient2d(a, b, c), 0);
}

TEST(Predicates, Segments) {
  EXPECT_TRUE(segments_cross({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 1}, {0, 1}, {0.4, 0.6}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 0}, {1, 0}, {2, 1}));
  EXPECT_DOUBLE_EQ(crossing_parameter({0, 0}, {2, 2}, {0, 2}, {2, 0}), 0.5);
  EXPECT_DOUBLE_EQ(distance_to_segment({0.5, 1}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({2, 0}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(signed_area(fx::unit_square().vertices), 1.0);
  EXPECT_DOUBLE_EQ(signed_area(fx::reversed(fx::unit_square()).vertices), -1.0);
}

TEST(Curves, Validation) {
  EXPECT_THROW(validate({{{0, 0}, {1, 0}}}), DomainError);
  EXPECT_THROW(validate({{{0, 0}, {1, 0}, {1, 0}, {0, 1}}}), DomainError);
  EXPECT_THROW(validate({{{0, 0}, {1, 0}, {0, 1}, {0, 0}}}), DomainError);
  EXPECT_NO_THROW(validate(fx::unit_square()));
}

TEST(Curves, JsonRoundTrip) {
  auto curves = parse_curves("[[[0,0],[1,0],[1,1],[0,1]]]");
  ASSERT_EQ(curves.size(), 1u);
  EXPECT_EQ(curves[0].vertices, fx::unit_square().vertices);
  EXPECT_EQ(parse_curves(curves_to_json(curves))[0].vertices, curves[0].vertices);
  EXPECT_EQ(parse_curves("[[[0,0],[1,0],[0,1]], [[5,5],[6,5],[5,6]]]").size(), 2u);
  EXPECT_THROW(parse_curves("[[[0,0],[1,0]]]"), DomainError);
  EXPECT_THROW(parse_curves("[[[0,0],[1,0],"), ParseError);
  EXPECT_THROW(parse_curves("[[[0,0],[1],[0,1]]]"), ParseError);
  EXPECT_THROW(load_curves("/nonexistent/curves.json"), ParseError);
}

TEST(Arrangement, UnitSquare) {
  Arrangement arr = build_arrangement({fx::unit_square()});
  ASSERT_EQ(arr.faces().size(), 1u);
  EXPECT_NEAR(arr.faces()[0].area, 1.0, 1e-9);
  EXPECT_EQ(arr.component_count(), 1u);
  expect_representatives_safe(arr);
  EXPECT_EQ(extract_word(fx::unit_square(), arr).word, (Word{pos(0)}));
  EXPECT_EQ(extract_word(fx::reversed(fx::unit_square()), arr).word, (Word{neg(0)}));
}

TEST(Arrangement, FigureEight) {
  Arrangement arr = build_arrangement({fx::figure_eight()});
  ASSERT_EQ(arr.faces().size(), 2u);
  for (const Face& f : arr.faces()) EXPECT_NEAR(f.area, 1.25, 1e-12);
  expect_exponent_sums_match_winding(fx::figure_eight(), arr);
  EXPECT_NEAR(null_homotopy_area(fx::figure_eight()), 2.5, 1e-12);
}

TEST(Arrangement, NestedSquares) {
  const ClosedPolyline outer = fx::square(-1, -1, 3), inner = fx::unit_square();
  Arrangement arr = build_arrangement({outer, inner});
  ASSERT_EQ(arr.faces().size(), 2u);
  std::vector<double> areas{arr.faces()[0].area, arr.faces()[1].area};
  std::sort(areas.begin(), areas.end());
  EXPECT_NEAR(areas[0], 1.0, 1e-12);
  EXPECT_NEAR(areas[1], 8.0, 1e-12);
  EXPECT_EQ(arr.component_count(), 2u);
  expect_representatives_safe(arr);
  expect_exponent_sums_match_winding(outer, arr);
  expect_exponent_sums_match_winding(inner, arr);
  const Word w = extract_word(outer, arr).word;
  EXPECT_EQ(exponent_sum(w, 0), 1);
  EXPECT_EQ(exponent_sum(w, 1), 1);
  EXPECT_NEAR(homotopy_area(outer, inner), 8.0, 1e-6);
}

TEST(Arrangement, AreaConservationForSimpleCurves) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    ClosedPolyline c = fx::star_polygon(rng, 3 + t % 12);
    Arrangement arr = build_arrangement({c});
    EXPECT_NEAR(total_bounded_area(arr), std::abs(signed_area(c.vertices)),
                1e-9 * std::abs(signed_area(c.vertices)));
    expect_representatives_safe(arr);
    expect_exponent_sums_match_winding(c, arr);
  }
}

TEST(Arrangement, SelfIntersectingScribbles) {
  std::mt19937_64 rng(73);
  int built = 0;
  for (int t = 0; t < 60; ++t) {
    ClosedPolyline c = fx::scribble(rng, 4 + t % 9);
    Arrangement arr;
    try {
      arr = build_arrangement({c}, 1e-9);
    } catch (const DegeneracyError&) {
      continue;
    }
    ++built;
    expect_representatives_safe(arr);
    expect_exponent_sums_match_winding(c, arr);
    // Winding numbers weigh faces: sum |wind| * area >= ... the norm bounds it.
    double lower = 0;
    for (const Face& f : arr.faces()) {
      lower += std::abs(winding_number(c, f.representative)) * f.area;
    }
    EXPECT_GE(null_homotopy_area(c) + 1e-9, lower);
  }
  EXPECT_GT(built, 50);
}

TEST(Arrangement, Degeneracies) {
  EXPECT_THROW(build_arrangement({fx::unit_square()}, 0.0), DomainError);
  // Vertex on another curve's edge.
  EXPECT_THROW(build_arrangement({fx::unit_square(), fx::square(0.5, 1, 1)}), DegeneracyError);
  // Collinear overlap.
  EXPECT_THROW(build_arrangement({fx::unit_square(), fx::square(0.5, 0, 2)}), DegeneracyError);
  // Near miss within eps.
  EXPECT_THROW(build_arrangement({fx::unit_square(), fx::square(0.5, 1 + 1e-12, 1)}),
               DegeneracyError);
  try {
    build_arrangement({fx::unit_square(), fx::square(0.5, 1, 1)});
  } catch (const DegeneracyError& e) {
    EXPECT_NE(std::string(e.what()).find("curve 1"), std::string::npos);
  }
}

TEST(Arrangement, ForeignCurveRejected) {
  Arrangement arr = build_arrangement({fx::unit_square()});
  EXPECT_THROW(extract_word(fx::square(5, 5, 1), arr), DomainError);
}

TEST(Winding, Basics) {
  EXPECT_EQ(winding_number(fx::unit_square(), {0.5, 0.5}), 1);
  EXPECT_EQ(winding_number(fx::unit_square(), {1.5, 0.5}), 0);
  EXPECT_EQ(winding_number(fx::reversed(fx::unit_square()), {0.5, 0.5}), -1);
  EXPECT_EQ(winding_number(fx::doubled_square(1e-3), {0.5, 0.5}), 2);
  EXPECT_THROW(winding_number(fx::unit_square(), {0.5, 0}), DomainError);
}

TEST(HomotopyArea, Exact) {
  const ClosedPolyline sq = fx::unit_square();
  EXPECT_NEAR(null_homotopy_area(sq), 1.0, 1e-9);
  EXPECT_EQ(homotopy_area(sq, sq), 0.0);
  EXPECT_NEAR(homotopy_area(sq, fx::reversed(sq)), 2.0, 1e-6);
  const double doubled = null_homotopy_area(fx::doubled_square(1e-3));
  EXPECT_NEAR(doubled, 2.0, 0.02);
}

TEST(HomotopyArea, Invariances) {
  const ClosedPolyline outer = fx::square(-1, -1, 3), inner = fx::unit_square();
  const double base = homotopy_area(outer, inner);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(homotopy_area(fx::rotated(outer, k), inner), base, 1e-9);
    EXPECT_NEAR(homotopy_area(outer, fx::rotated(inner, k)), base, 1e-9);
  }
  EXPECT_NEAR(homotopy_area(fx::reversed(outer), fx::reversed(inner)), base, 1e-9);
  EXPECT_NEAR(homotopy_area(inner, outer), base, 1e-9);
  const ClosedPolyline eight = fx::figure_eight();
  EXPECT_EQ(homotopy_area(eight, eight), 0.0);
}

TEST(Svg, ContainsPolylinesAndLabels) {
  const std::vector<ClosedPolyline> curves{fx::square(-1, -1, 3), fx::unit_square()};
  const std::string svg = render_svg(build_arrangement(curves), curves);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 4, true);
  EXPECT_NE(svg.find(">x0: "), std::string::npos);
  EXPECT_NE(svg.find(">x1: "), std::string::npos);
}
