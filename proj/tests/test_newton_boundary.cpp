#include <algorithm>

#include "doctest.h"
#include "newtloj/errors.hpp"
#include "newtloj/newton_boundary.hpp"
#include "newtloj/oracle.hpp"
#include "newtloj/random.hpp"
#include "newtloj/report_io.hpp"
#include "oracles.hpp"

using namespace newtloj;

namespace {

Support pts3(std::initializer_list<ExponentVector> pts) {
  const std::vector<ExponentVector> v(pts);
  return Support(v.front().size(), v);
}

const Face* facet_with_normal(const NewtonBoundary& b, const WeightVector& w) {
  for (const Face& f : b.facets())
    if (f.supporting == w) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("worked surface example: three 2-faces with their data") {
  const NewtonBoundary b = build_boundary(parse_polynomial("(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5", 3));
  REQUIRE(b.facets().size() == 3);
  CHECK(b.vertices().size() == 6);

  const Face* s1 = facet_with_normal(b, {3, 4, 4});
  REQUIRE(s1 != nullptr);
  CHECK(s1->level == 16);
  CHECK(s1->vertices == std::vector<ExponentVector>{{0, 3, 1}, {0, 4, 0}, {4, 0, 1}, {4, 1, 0}});
  CHECK(s1->facet->intercepts == std::vector<Rational>{Rational(16, 3), 4, 4});
  CHECK(s1->facet->m == Rational(16, 3));
  CHECK(b.edges_of(s1->id).size() == 4);

  const Face* s3 = facet_with_normal(b, {3, 4, 3});
  REQUIRE(s3 != nullptr);
  CHECK(s3->level == 15);
  CHECK(s3->facet->intercepts == std::vector<Rational>{5, Rational(15, 4), 5});
  CHECK(s3->facet->m == 5);

  const Face* s2 = facet_with_normal(b, {1, 2, 2});
  REQUIRE(s2 != nullptr);
  CHECK(s2->level == 6);
  CHECK(s2->vertices == std::vector<ExponentVector>{{4, 0, 1}, {4, 1, 0}, {6, 0, 0}});
}

TEST_CASE("faces are ordered by dimension and vertex list") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x^2 + y^3 + z^6", 3));
  CHECK(b.vertex_faces().size() == 3);
  CHECK(b.edges().size() == 3);
  CHECK(b.facets().size() == 1);
  for (std::size_t i = 1; i < b.faces().size(); ++i) {
    const Face& p = b.faces()[i - 1];
    const Face& q = b.faces()[i];
    CHECK(q.id == static_cast<int>(i));
    CHECK((p.dim < q.dim || (p.dim == q.dim && p.vertices < q.vertices)));
  }
  CHECK_THROWS_AS(b.face(99), PreconditionError);
  CHECK(&face_data(b, 6) == &b.face(6));
}

TEST_CASE("hyperbolic support has one edge and no 2-face") {
  const NewtonBoundary b = build_boundary(pts3({{1, 1, 0}, {0, 0, 5}}));
  CHECK(b.facets().empty());
  CHECK(b.edges().size() == 1);
  CHECK(b.vertices() == std::vector<ExponentVector>{{0, 0, 5}, {1, 1, 0}});
}

TEST_CASE("dominated and interior points lie on no compact face") {
  const Support s = parse_polynomial("x^2 + y^3 + z^6 + x^3*y*z + x*y*z", 3);
  const NewtonBoundary b = build_boundary(s);
  for (const Face& f : b.faces()) CHECK_FALSE(f.has_point({3, 1, 1}));
  CHECK(minimal_points(s.points()).size() == 4);
}

TEST_CASE("non-vertex lattice points on a face are recorded as points") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x^4 + x^2*y^2 + y^4 + z^2", 3));
  REQUIRE(b.facets().size() == 1);
  const Face& f = b.facets().front();
  CHECK(f.vertices.size() == 3);
  CHECK(f.points.size() == 4);
  CHECK(f.has_point({2, 2, 0}));
  CHECK_FALSE(f.has_vertex({2, 2, 0}));
}

TEST_CASE("plane curves: segments are the top faces") {
  const NewtonBoundary b = build_boundary(parse_polynomial("x^5 + x^2*y + y^3", 2));
  REQUIRE(b.facets().size() == 2);
  CHECK(b.facets()[0].supporting == WeightVector{1, 1});
  CHECK(b.facets()[1].supporting == WeightVector{1, 3});
}

TEST_CASE("convenience flags") {
  const auto flags = convenience_flags(parse_polynomial("x^3*y + y^4 + z*y", 3));
  CHECK_FALSE(flags[0].convenient);
  CHECK(flags[0].nearly_convenient);
  CHECK(flags[1].convenient);
  CHECK_FALSE(flags[2].convenient);
  CHECK(flags[2].nearly_convenient);
  const auto none = convenience_flags(pts3({{2, 2, 0}, {0, 0, 3}}));
  CHECK_FALSE(none[0].nearly_convenient);
  CHECK_FALSE(none[1].nearly_convenient);
  CHECK(none[2].convenient);
}

TEST_CASE("supported face of a positive weight") {
  const NewtonBoundary b = build_boundary(parse_polynomial("(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5", 3));
  CHECK(supported_face(b, {3, 4, 4}).dim == 2);
  CHECK(supported_face(b, {3, 6, 5}).vertices == std::vector<ExponentVector>{{4, 0, 1}});
  CHECK(supported_face(b, {1, 1, 1}).vertices == std::vector<ExponentVector>{{0, 3, 1}, {0, 4, 0}});
  for (const Face& f : b.faces()) CHECK(supported_face(b, f.supporting).id == f.id);
}

TEST_CASE("constructor rejects inconsistent seeds") {
  const Support s = pts3({{2, 0, 0}, {0, 3, 0}, {0, 0, 6}});
  std::vector<FaceSeed> ok{{{{2, 0, 0}}, {1, 1, 1}}};
  CHECK_NOTHROW(NewtonBoundary(s, ok));
  std::vector<FaceSeed> outside{{{{1, 0, 0}}, {1, 1, 1}}};
  CHECK_THROWS_AS(NewtonBoundary(s, outside), CrossCheckFailure);
  std::vector<FaceSeed> off_plane{{{{2, 0, 0}}, {1, 1, 1}}, {{{0, 3, 0}}, {1, 1, 1}},
                                  {{{2, 0, 0}, {0, 3, 0}}, {1, 1, 1}}};
  CHECK_THROWS_AS(NewtonBoundary(s, off_plane), CrossCheckFailure);
  std::vector<FaceSeed> duplicate{{{{2, 0, 0}}, {1, 1, 1}}, {{{2, 0, 0}}, {1, 2, 2}}};
  CHECK_THROWS_AS(NewtonBoundary(s, duplicate), CrossCheckFailure);
}

TEST_CASE("property: top faces agree with the hyperplane oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomOptions ro;
    ro.dimension = seed % 3 == 0 ? 2 : 3;
    ro.points = 3 + seed % 9;
    ro.seed = mix_seed(77, seed);
    const Support s = random_support(ro);
    const NewtonBoundary b = build_boundary(s);
    const auto expected = oracle::facets(oracle::to_pts(s));
    REQUIRE(b.facets().size() == expected.size());
    for (const Face& f : b.facets()) {
      const oracle::Pt key(f.supporting.begin(), f.supporting.end());
      REQUIRE(expected.count(key) == 1);
      const auto& of = expected.at(key);
      CHECK(of.level == f.level);
      std::vector<oracle::Pt> pts;
      for (const auto& p : f.points) pts.emplace_back(p.begin(), p.end());
      CHECK(pts == of.points);
    }
  }
}

TEST_CASE("property: boundary invariants on random supports") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomOptions ro;
    ro.points = 4 + seed % 9;
    ro.seed = mix_seed(78, seed);
    const Support s = random_support(ro);
    const NewtonBoundary b = build_boundary(s);
    const auto all = s.points();
    for (const Face& f : b.faces()) {
      CHECK(f.supporting.positive());
      CHECK(f.supporting.is_primitive());
      // Exactly the face points minimize the supporting vector.
      CHECK(weighted_min(f.supporting, all).argmin == f.points);
      CHECK(affine_dimension(f.vertices) == f.dim);
      for (const ExponentVector& v : f.vertices) CHECK(std::binary_search(all.begin(), all.end(), v));
      for (int e : b.edges_of(f.id)) CHECK(std::includes(f.points.begin(), f.points.end(), b.face(e).vertices.begin(), b.face(e).vertices.end()));
    }
    // Every edge of a 2-face belongs to one or two 2-faces.
    for (const Face& e : b.edges()) CHECK(b.facets_containing(e.id).size() <= 2);
  }
}
