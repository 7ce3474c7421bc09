#include <set>

#include "doctest.h"
#include "newtloj/errors.hpp"
#include "newtloj/face_classify.hpp"
#include "newtloj/random.hpp"
#include "newtloj/report_io.hpp"
#include "oracles.hpp"

using namespace newtloj;

namespace {

const char* const kSurface = "(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5";

const Face& facet_with_normal(const NewtonBoundary& b, const WeightVector& w) {
  for (const Face& f : b.facets())
    if (f.supporting == w) return f;
  FAIL("no facet with normal " << w);
  return b.facets().front();
}

}  // namespace

TEST_CASE("exceptional faces of the worked surface example") {
  const NewtonBoundary b = build_boundary(parse_polynomial(kSurface, 3));
  CHECK(exceptional_axes(facet_with_normal(b, {1, 2, 2}), 3) == AxisSet{Axis::X});
  CHECK(exceptional_axes(facet_with_normal(b, {3, 4, 4}), 3).empty());
  CHECK(exceptional_axes(facet_with_normal(b, {3, 4, 3}), 3).empty());
}

TEST_CASE("proximate faces of the worked surface example") {
  const NewtonBoundary b = build_boundary(parse_polynomial(kSurface, 3));
  const Face& s1 = facet_with_normal(b, {3, 4, 4});
  const Face& s3 = facet_with_normal(b, {3, 4, 3});
  CHECK(proximity_axes(s1, b) == AxisSet{Axis::X, Axis::Y});
  CHECK(proximity_axes(s3, b) == AxisSet{Axis::Z});
  CHECK(proximity_axes(facet_with_normal(b, {1, 2, 2}), b).empty());

  const auto px = proximate_faces(b, Axis::X);
  REQUIRE(px.size() == 1);
  CHECK(px.front()->id == s1.id);

  const ProximityKind kx = proximity_kind(s1, Axis::X, b);
  CHECK(kx.kind == ProximityKind::Kind::NonConvenient);
  REQUIRE(kx.edge.has_value());
  CHECK(kx.edge->first == ExponentVector{4, 0, 1});
  CHECK(kx.edge->second == ExponentVector{4, 1, 0});
  CHECK(proximity_kind(s1, Axis::Y, b).kind == ProximityKind::Kind::Convenient);
  CHECK(proximity_kind(s3, Axis::Z, b).kind == ProximityKind::Kind::Convenient);
  CHECK_THROWS_AS(proximity_kind(s3, Axis::X, b), PreconditionError);
}

TEST_CASE("xz + yz + y^3: one face, exceptional for z") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x*z + y*z + y^3", 3));
  REQUIRE(b.facets().size() == 1);
  const Face& f = b.facets().front();
  CHECK(exceptional_axes(f, 3) == AxisSet{Axis::Z});
  CHECK(proximity_axes(f, b) == AxisSet{Axis::X, Axis::Y});
  CHECK(proximate_faces(b, Axis::Z).empty());
  const ProximityKind kx = proximity_kind(f, Axis::X, b);
  CHECK(kx.kind == ProximityKind::Kind::NonConvenient);
  REQUIRE(kx.edge.has_value());
  CHECK(kx.edge->first == ExponentVector{1, 0, 1});
  CHECK(kx.edge->second == ExponentVector{0, 3, 0});

  const auto h = detect_hyperbolic_edge(b);
  REQUIRE(h.has_value());
  CHECK(h->axis == Axis::Y);
  CHECK(h->alpha == 3);
  CHECK(b.face(h->edge_id).vertices == std::vector<ExponentVector>{{0, 3, 0}, {1, 0, 1}});
}

TEST_CASE("hyperbolic edges") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x*y + z^5", 3));
  const auto all = hyperbolic_edges(b);
  REQUIRE(all.size() == 1);
  CHECK(all.front().axis == Axis::Z);
  CHECK(all.front().alpha == 5);
  CHECK(detect_hyperbolic_edge(build_boundary(parse_polynomial("x^2 + y^3 + z^6", 3))) == std::nullopt);
  CHECK(detect_hyperbolic_edge(build_boundary(parse_polynomial("x^2 + y^2 + z^2", 3))) == std::nullopt);
  const auto yz = detect_hyperbolic_edge(build_boundary(parse_polynomial("y*z + x^4 + y^3 + z^3", 3)));
  REQUIRE(yz.has_value());
  CHECK(yz->axis == Axis::X);
  CHECK(yz->alpha == 4);
}

TEST_CASE("lines meeting an axis") {
  CHECK_FALSE(line_meets_axis({4, 0, 1}, {4, 1, 0}, Axis::X));
  CHECK_FALSE(line_meets_axis({4, 0, 1}, {0, 3, 1}, Axis::X));
  CHECK(line_meets_axis({1, 1, 0}, {0, 0, 5}, Axis::Z));
  CHECK_FALSE(line_meets_axis({1, 1, 0}, {0, 0, 5}, Axis::X));
  CHECK(line_meets_axis({2, 1, 1}, {3, 2, 2}, Axis::X));
}

TEST_CASE("classification table indexes every 2-face") {
  const NewtonBoundary b = build_boundary(parse_polynomial(kSurface, 3));
  const auto table = classify_faces(b);
  REQUIRE(table.size() == b.facets().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Face& f = b.facets()[i];
    CHECK(table[i].face_id == f.id);
    CHECK(table[i].exceptional == exceptional_axes(f, 3));
    CHECK(table[i].proximate == proximity_axes(f, b));
    for (Axis a : kAllAxes) {
      if (table[i].proximate.contains(a)) CHECK(table[i].kinds[index(a)] == proximity_kind(f, a, b));
      else CHECK(table[i].kinds[index(a)].kind == ProximityKind::Kind::NotProximate);
    }
  }
}

TEST_CASE("property: exceptional sets agree with the pyramid oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomOptions ro;
    ro.points = 3 + seed % 10;
    ro.max_exponent = 4 + static_cast<std::int64_t>(seed % 8);
    ro.seed = mix_seed(91, seed);
    const NewtonBoundary b = build_boundary(random_support(ro));
    for (const Face& f : b.facets()) {
      std::vector<oracle::Pt> pts;
      for (const auto& p : f.points) pts.emplace_back(p.begin(), p.end());
      std::set<std::size_t> got;
      for (Axis a : exceptional_axes(f, 3).members()) got.insert(index(a));
      CHECK(got == oracle::exceptional_axes(pts));
    }
  }
}

TEST_CASE("property: proximate faces match the definition and exist iff a face is not exceptional") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomOptions ro;
    ro.points = 3 + seed % 10;
    ro.seed = mix_seed(92, seed);
    const NewtonBoundary b = build_boundary(random_support(ro));
    for (Axis a : kAllAxes) {
      std::set<int> proximate, expected;
      bool some_not_exceptional = false;
      for (const Face* f : proximate_faces(b, a)) proximate.insert(f->id);
      for (const Face& f : b.facets()) {
        // Meets both coordinate planes through the axis and has a vertex
        // within distance one of it.
        bool meets_both = true, near = false;
        for (const ExponentVector& v : f.vertices) {
          long long off = 0;
          for (Axis o : kAllAxes)
            if (o != a) off += v[o];
          near |= off <= 1;
        }
        for (Axis o : kAllAxes) {
          if (o == a) continue;
          bool zero = false;
          for (const ExponentVector& v : f.vertices) zero |= v[o] == 0;
          meets_both &= zero;
        }
        const bool exc = exceptional_axes(f, 3).contains(a);
        some_not_exceptional |= !exc;
        if (meets_both && near && !exc) expected.insert(f.id);
        CHECK(exceptional_axes(f, 3).size() <= 1);
        if (proximity_axes(f, b).contains(a)) CHECK(axis_line_audit(f, a, b));
      }
      CHECK(proximate == expected);
      CHECK(proximate.empty() != some_not_exceptional);
      for (int id : proximate) CHECK_FALSE(exceptional_axes(b.face(id), 3).contains(a));
    }
  }
}
