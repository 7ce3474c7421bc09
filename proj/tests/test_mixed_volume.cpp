#include "doctest.h"
#include "newtloj/errors.hpp"
#include "newtloj/mixed_volume.hpp"
#include "newtloj/random.hpp"

using namespace newtloj;

namespace {

Polygon2 poly(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<Point2> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return Polygon2::hull(v);
}

// Fan triangulation from the first vertex of a convex vertex cycle.
Rational fan_area(std::vector<Point2> pts) {
  if (pts.size() < 3) return 0;
  Rational a = 0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) a += cross(pts[i] - pts[0], pts[i + 1] - pts[0]);
  return abs(a) / 2;
}

}  // namespace

TEST_CASE("hull is counterclockwise from the lowest vertex and drops collinear points") {
  const Polygon2 p = poly({{2, 2}, {0, 0}, {2, 0}, {1, 0}, {0, 2}, {1, 1}});
  CHECK(p.vertices() == std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(poly({{3, 0}, {0, 0}, {1, 0}}).vertices() == std::vector<Point2>{{0, 0}, {3, 0}});
  CHECK(poly({{1, 1}, {1, 1}}).is_point());
  CHECK(to_string(poly({{0, 0}, {1, 0}})) == "[(0,0), (1,0)]");
  CHECK_THROWS_AS(Polygon2::hull({}), PreconditionError);
}

TEST_CASE("areas and Minkowski sums") {
  const Polygon2 tri = poly({{0, 0}, {3, 0}, {2, 1}});
  const Polygon2 seg = poly({{0, 0}, {3, 0}});
  CHECK(area2(tri) == Rational(3, 2));
  CHECK(area2(seg) == 0);
  const Polygon2 sum = minkowski_sum(tri, poly({{0, 0}, {0, 1}}));
  CHECK(sum.vertices() == std::vector<Point2>{{0, 0}, {3, 0}, {3, 1}, {2, 2}, {0, 1}});
  CHECK(mixed_volume_2(tri, seg) == 3);
  CHECK(mixed_volume_2(poly({{0, 0}, {1, 0}, {0, 1}}), poly({{0, 0}, {1, 0}, {0, 1}})) == 1);
  CHECK(mixed_volume_2(poly({{0, 0}, {2, 0}, {0, 3}}), poly({{0, 0}, {3, 0}, {0, 2}})) == 9);
}

TEST_CASE("zero reasons") {
  const Polygon2 seg = poly({{0, 0}, {2, 1}});
  CHECK(mv_zero_reason(seg, poly({{1, 1}, {5, 3}})) == MvZeroReason::ParallelSegments);
  CHECK(mv_zero_reason(poly({{0, 0}, {1, 0}, {0, 1}}), poly({{4, 4}})) == MvZeroReason::PointFactor);
  CHECK(mv_zero_reason(seg, poly({{0, 0}, {0, 1}})) == MvZeroReason::None);
  CHECK(to_string(MvZeroReason::ParallelSegments) == "parallel_segments");
  CHECK(to_string(MvZeroReason::PointFactor) == "point_factor");
  CHECK(to_string(MvZeroReason::None) == "none");
}

TEST_CASE("charts drop one coordinate and combine like terms") {
  const Support s = parse_polynomial("x^4*z + 2*x^2*z + x^4*y", 3);
  CHECK(restrict_to_chart(s, Axis::X) == parse_polynomial("3*y + x", 2));
}

TEST_CASE("charted derivative system of the parallelogram face") {
  const NewtonBoundary b = build_boundary(parse_polynomial("(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5", 3));
  const Face* s1 = nullptr;
  for (const Face& f : b.facets())
    if (f.supporting == WeightVector{3, 4, 4}) s1 = &f;
  REQUIRE(s1 != nullptr);
  const ChartSystem cs = chart_system(*s1, Axis::X, b);
  CHECK(cs.first_derivative_chart == parse_polynomial("1 + x^3 + 3*x^2*y", 2));
  CHECK(cs.second_derivative_chart == parse_polynomial("1 + x^3", 2));
  CHECK(cs.area_first == Rational(3, 2));
  CHECK(cs.area_second == 0);
  CHECK(cs.area_sum == Rational(9, 2));
  CHECK(cs.mixed_volume == 3);
  CHECK(cs.reason == MvZeroReason::None);
  CHECK(cs.generic_b_nondegenerate == true);
}

TEST_CASE("generic non-degeneracy fails on a diagonal through the axis") {
  const std::vector<ExponentVector> pts{{3, 1, 1}, {0, 2, 2}, {0, 4, 0}, {7, 0, 0}, {0, 0, 5}};
  const NewtonBoundary b = build_boundary(Support(3, pts));
  const Face* f = nullptr;
  for (const Face& g : b.facets())
    if (g.supporting == WeightVector{2, 3, 3}) f = &g;
  REQUIRE(f != nullptr);
  CHECK(f->level == 12);
  CHECK_FALSE(generic_B_nondegenerate(*f, Axis::X, b));
}

TEST_CASE("generic non-degeneracy needs a vertex-supported face") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x^4 + x^2*y^2 + y^4 + z^2", 3));
  CHECK_THROWS_AS(generic_B_nondegenerate(b.facets().front(), Axis::Z, b), NotVertexSupportedError);
  CHECK_FALSE(chart_system(b.facets().front(), Axis::Z, b).generic_b_nondegenerate.has_value());
}

TEST_CASE("property: mixed volume identities on random lattice polygons") {
  Rng rng(31337);
  for (int i = 0; i < 300; ++i) {
    auto random_poly = [&] {
      std::vector<Point2> v;
      const auto k = rng.uniform(1, 6);
      for (std::int64_t j = 0; j < k; ++j) v.push_back({rng.uniform(0, 8), rng.uniform(0, 8)});
      return Polygon2::hull(v);
    };
    const Polygon2 p = random_poly(), q = random_poly();
    const Rational mv = mixed_volume_2(p, q);
    CHECK(mv >= 0);
    CHECK(mv == mixed_volume_2(q, p));
    CHECK(mixed_volume_2(p, p) == 2 * area2(p));
    // Oracle: the sum is the hull of all pairwise vertex sums.
    std::vector<Point2> sums;
    for (const Point2& a : p.vertices())
      for (const Point2& c : q.vertices()) sums.push_back(a + c);
    const Polygon2 h = Polygon2::hull(sums);
    CHECK(minkowski_sum(p, q) == h);
    CHECK(fan_area(h.vertices()) - fan_area(p.vertices()) - fan_area(q.vertices()) == mv);
    const Point2 t{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    CHECK(mixed_volume_2(p.translated(t), q) == mv);
    const Rational lambda(rng.uniform(0, 6), rng.uniform(1, 3));
    CHECK(mixed_volume_2(p.scaled(lambda), q) == lambda * mv);
    CHECK((mv_zero_reason(p, q) == MvZeroReason::None) == (mv > 0));
  }
}
