#include "newtloj/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "newtloj/cli.hpp"
#include "newtloj/errors.hpp"
#include "newtloj/exponent_engine.hpp"
#include "newtloj/face_classify.hpp"
#include "newtloj/mixed_volume.hpp"
#include "newtloj/oracle.hpp"
#include "newtloj/random.hpp"
#include "newtloj/report_io.hpp"

namespace newtloj {

namespace {

// Failed expectation inside a criterion.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

const char* const kMainFixture = "(x^4+y^3)*z + x^4*y + (1/4)*y^4 + x^6 + z^5";

Support support_of(std::size_t n, std::initializer_list<ExponentVector> pts) {
  const std::vector<ExponentVector> v(pts);
  return Support(n, v);
}

std::string s(const Rational& r) { return to_string(r); }

// ------------------------------------------------------------ criteria

std::string hyperbolic_edges_criterion(const Rational& offset) {
  for (std::int64_t k = 2; k <= 9; ++k) {
    const ExponentReport r = lojasiewicz_3d(support_of(3, {{1, 1, 0}, {0, 0, k}}));
    expect(r.exponent == Rational(k) - offset, "k=" + std::to_string(k) + ": got " + s(r.exponent));
    expect(r.exponent_case.kind == CaseKind::HyperbolicEdge, "k=" + std::to_string(k) + ": wrong case");
    expect(r.exponent_case.alpha == k, "k=" + std::to_string(k) + ": wrong alpha");
  }
  return "k = 2..9 give k - 1";
}

std::string brieskorn_criterion(const Rational& offset, std::uint64_t seed) {
  int count = 0;
  for (std::int64_t m = 2; m <= 6; ++m)
    for (std::int64_t n = 2; n <= 6; ++n)
      for (std::int64_t k = 2; k <= 6; ++k) {
        const Support sup = support_of(3, {{m, 0, 0}, {0, n, 0}, {0, 0, k}});
        const Rational expected = Rational(std::max({m, n, k})) - offset;
        const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
        const ExponentReport r = lojasiewicz_3d(sup);
        expect(r.exponent == expected, tag + ": exponent " + s(r.exponent));
        const SweepResult sw = sweep_lower_bound(sup, seed);
        expect(sw.bound == expected, tag + ": sweep bound " + s(sw.bound));
        std::size_t finite = 0;
        for (const auto& e : sw.witness.exponents) finite += e.has_value();
        expect(finite == 1, tag + ": witness " + sw.witness.str() + " is not an axis path");
        ++count;
      }
  return std::to_string(count) + " triples, exponent and axis-path bound equal max - 1";
}

std::string main_fixture_criterion(const Rational& offset) {
  const Support f = parse_polynomial(kMainFixture, 3);
  const NewtonBoundary b = build_boundary(f);
  expect(b.facets().size() == 3, "expected 3 two-faces, got " + std::to_string(b.facets().size()));
  int exceptional = 0;
  const Face* s1 = nullptr;
  for (const Face& face : b.facets()) {
    const AxisSet e = exceptional_axes(face, 3);
    if (!e.empty()) {
      ++exceptional;
      expect(e == AxisSet{Axis::X}, "exceptional face not for axis x");
    }
    if (face.supporting == WeightVector{3, 4, 4}) s1 = &face;
  }
  expect(exceptional == 1, "expected exactly one exceptional face, got " + std::to_string(exceptional));
  expect(s1 != nullptr, "no face with normal (3,4,4)");
  const ChartSystem cs = chart_system(*s1, Axis::X, b);
  const Support p = parse_polynomial("1 + x^3 + 3*x^2*y", 2);  // chart variables (y, z) renamed (x, y)
  const Support q = parse_polynomial("1 + x^3", 2);
  expect(cs.first_derivative_chart == p, "chart of d/dy is " + serialize_support(cs.first_derivative_chart));
  expect(cs.second_derivative_chart == q, "chart of d/dz is " + serialize_support(cs.second_derivative_chart));
  expect(cs.mixed_volume == 3, "mixed volume " + s(cs.mixed_volume));
  const ExponentReport r = lojasiewicz_3d(f);
  const Rational expected = Rational(16, 3) - offset;
  expect(r.exponent == expected, "exponent " + s(r.exponent));
  expect(!r.attaining.empty() && r.attaining.front().face_id == s1->id && r.attaining.front().axis == Axis::X,
         "attaining pair is not the (3,4,4) face on axis x");
  expect(proximate_route(b).exponent == expected, "proximate-face route disagrees");
  return "3 faces, 1 exceptional, MV = 3, exponent 13/3";
}

std::string exceptional_face_criterion() {
  const Support g = parse_polynomial("x*z + y*z + y^3", 3);
  const NewtonBoundary b = build_boundary(g);
  expect(b.facets().size() == 1, "expected one 2-face");
  const Face& face = b.facets().front();
  expect(exceptional_axes(face, 3) == AxisSet{Axis::Z}, "face not exceptional for z");
  expect(proximity_axes(face, b).contains(Axis::X), "face not proximate for x");
  expect(proximate_faces(b, Axis::Z).empty(), "axis z has a proximate face");
  return "exceptional for z, proximate for x, no proximate face for z";
}

std::string plane_curve_criterion() {
  struct Case {
    std::initializer_list<ExponentVector> pts;
    Rational expected;
    CaseKind kind;
  };
  const Case cases[] = {
      {{{3, 0}, {0, 2}}, 2, CaseKind::Generic},
      {{{1, 1}}, 1, CaseKind::TwoDimDefault},
      {{{5, 0}, {2, 1}, {0, 3}}, 2, CaseKind::Generic},
  };
  for (const Case& c : cases) {
    const ExponentReport r = lojasiewicz_2d(support_of(2, c.pts));
    expect(r.exponent == c.expected, "got " + s(r.exponent) + ", expected " + s(c.expected));
    expect(r.exponent_case.kind == c.kind, "wrong case tag");
  }
  return "{(3,0),(0,2)} -> 2, {(1,1)} -> 1, {(5,0),(2,1),(0,3)} -> 2";
}

std::string property_criterion(std::uint64_t seed) {
  constexpr int kInstances = 300;
  int generic = 0;
  for (int i = 0; i < kInstances; ++i) {
    const std::uint64_t inst_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    Rng pick(inst_seed);
    RandomOptions ro;
    ro.points = static_cast<std::size_t>(pick.uniform(4, 12));
    ro.seed = inst_seed;
    const Support sup = random_support(ro);
    const std::string tag = "instance " + std::to_string(i) + " [" + serialize_support(sup) + "]";
    expect(check_isolated(sup).ok, tag + ": generator produced a non-isolated support");

    const NewtonBoundary b = build_boundary(sup);
    expect(b == brute_force_boundary(sup), tag + ": (a) boundary differs from brute force");

    const ExponentReport r = lojasiewicz_3d(b);
    bool any_non_exceptional = false;
    for (const Face& f : b.facets()) any_non_exceptional |= exceptional_axes(f, 3).empty();
    if (any_non_exceptional) {
      ++generic;
      expect(proximate_route(b).exponent == r.exponent, tag + ": (b) proximate route disagrees");
    }

    for (Axis a : kAllAxes) {
      bool non_exc_for_axis = false, proximate = false;
      for (const Face& f : b.facets()) {
        non_exc_for_axis |= !exceptional_axes(f, 3).contains(a);
        if (proximity_axes(f, b).contains(a)) {
          proximate = true;
          expect(axis_line_audit(f, a, b), tag + ": (f) audit fails on face " + std::to_string(f.id));
        }
      }
      expect(proximate == non_exc_for_axis, tag + ": (c) proximate faces vs non-exceptional faces");
    }
    for (const Face& f : b.facets())
      expect(exceptional_axes(f, 3).size() <= 1, tag + ": (d) face exceptional for two axes");

    if (r.exponent_case.kind == CaseKind::Generic) {
      bool attained = false;
      for (const Face& f : b.facets())
        for (Axis a : proximity_axes(f, b).members()) attained |= f.facet->intercepts[index(a)] - 1 == r.exponent;
      expect(attained, tag + ": (e) maximum not attained by a proximate face");
    }

    const SweepResult sw = sweep_lower_bound(sup, inst_seed);
    expect(sw.bound <= r.exponent, tag + ": (g) sweep bound " + s(sw.bound) + " exceeds " + s(r.exponent));

    expect(lojasiewicz_3d(sup.instantiate(inst_seed ^ 0x9e3779b97f4a7c15ULL)) == r,
           tag + ": (h) report changes with the coefficients");
  }
  return std::to_string(kInstances) + " instances (" + std::to_string(generic) + " with non-exceptional faces)";
}

// Independent polygon oracle: hull of all pairwise vertex sums, triangle
// fan area.
Rational fan_area(const std::vector<Point2>& v) {
  Rational twice = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  return twice / 2;
}

Polygon2 random_polygon(Rng& rng, const Polygon2* parallel_to) {
  auto pt = [&] { return Point2{rng.uniform(0, 10), rng.uniform(0, 10)}; };
  const std::int64_t kind = rng.uniform(0, 9);
  if (kind == 0) return Polygon2::hull({pt()});
  if (kind <= 3) {
    const Point2 a = pt();
    if (parallel_to && parallel_to->is_segment() && rng.coin()) {
      const Point2 d = parallel_to->vertices()[1] - parallel_to->vertices()[0];
      const Rational k = rng.uniform(1, 3);
      return Polygon2::hull({a, Point2{a.x + k * d.x, a.y + k * d.y}});
    }
    return Polygon2::hull({a, pt()});
  }
  std::vector<Point2> pts;
  const std::int64_t count = rng.uniform(3, 7);
  for (std::int64_t i = 0; i < count; ++i) pts.push_back(pt());
  return Polygon2::hull(pts);
}

std::string mixed_volume_criterion(std::uint64_t seed) {
  constexpr int kPairs = 200;
  Rng rng(mix_seed(seed, 7));
  int zeros = 0;
  for (int i = 0; i < kPairs; ++i) {
    const Polygon2 p = random_polygon(rng, nullptr);
    const Polygon2 q = random_polygon(rng, &p);
    const std::string tag = "pair " + std::to_string(i) + " " + to_string(p) + " " + to_string(q);
    const Rational mv = mixed_volume_2(p, q);
    expect(mv == mixed_volume_2(q, p), tag + ": not symmetric");
    expect(mv >= 0, tag + ": negative");
    const Point2 t{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    expect(mixed_volume_2(p.translated(t), q) == mv, tag + ": not translation invariant");
    const std::int64_t k = rng.uniform(0, 4);
    expect(mixed_volume_2(p.scaled(k), q) == k * mv, tag + ": not linear under scaling by " + std::to_string(k));

    std::vector<Point2> sums;
    for (const Point2& a : p.vertices())
      for (const Point2& b : q.vertices()) sums.push_back(a + b);
    const Rational oracle =
        fan_area(Polygon2::hull(sums).vertices()) - fan_area(p.vertices()) - fan_area(q.vertices());
    expect(oracle == mv, tag + ": area identity gives " + s(oracle) + ", merge gives " + s(mv));

    bool degenerate = p.vertices().size() == 1 || q.vertices().size() == 1;
    if (p.vertices().size() == 2 && q.vertices().size() == 2)
      degenerate |= cross(p.vertices()[1] - p.vertices()[0], q.vertices()[1] - q.vertices()[0]) == 0;
    expect(degenerate == (mv == 0), tag + ": zero iff point factor or parallel segments");
    expect((mv_zero_reason(p, q) == MvZeroReason::None) == (mv != 0), tag + ": zero reason tag");
    zeros += mv == 0;
  }
  return std::to_string(kPairs) + " pairs (" + std::to_string(zeros) + " with MV = 0)";
}

Support random_coefficient_support(Rng& rng, std::size_t n, bool allow_generic) {
  Support sup(n);
  const std::int64_t terms = rng.uniform(1, 12);
  for (std::int64_t t = 0; t < terms; ++t) {
    IntVec e = IntVec::zero(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = rng.uniform(0, 12);
    Coefficient c;
    if (!(allow_generic && rng.coin(1, 4))) {
      Rational v(rng.uniform(1, 1000), rng.uniform(1, 20));
      c = rng.coin() ? -v : v;
    }
    sup.add(ExponentVector(e), c);
  }
  if (sup.empty()) sup.add(ExponentVector(IntVec::unit(n, 0)), Rational(1));
  return sup;
}

int cli_exit(std::vector<std::string> args, std::string* stdout_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (stdout_text) *stdout_text = out.str();
  return code;
}

std::string parser_criterion(std::uint64_t seed) {
  constexpr int kSupports = 300;
  Rng rng(mix_seed(seed, 8));
  for (int i = 0; i < kSupports; ++i) {
    const std::size_t n = rng.coin() ? 3 : 2;
    const Support text_sup = random_coefficient_support(rng, n, false);
    const std::string text = serialize_support(text_sup);
    expect(parse_polynomial(text, n) == text_sup, "text round trip failed for " + text);
    const Support json_sup = random_coefficient_support(rng, n, true);
    expect(parse_support_json(support_to_json(json_sup)) == json_sup,
           "JSON round trip failed for " + support_to_json(json_sup).dump());
  }
  const std::pair<const char*, std::size_t> fixtures[] = {
      {kMainFixture, 3}, {"x*z + y*z + y^3", 3}, {"x*y + z^5", 3}, {"x^2 + y^3 + z^6", 3},
      {"x^5 + x^2*y + y^3", 2}, {"x^3 + y^2", 2}, {"x*y", 2},
  };
  for (const auto& [text, n] : fixtures) {
    const Support sup = parse_polynomial(text, n);
    expect(parse_polynomial(serialize_support(sup), n) == sup, std::string("fixture round trip: ") + text);
  }
  const char* const bad[] = {"x - x", "", "x^^2", "x + w", "(x + y", "2*/x"};
  for (const char* b : bad) {
    std::string out;
    const int code = cli_exit({"compute", "--dim", "3", "--poly", b}, &out);
    expect(code == kExitParse, std::string("'") + b + "' exits with " + std::to_string(code));
    expect(out.empty(), std::string("'") + b + "' wrote to standard output");
  }
  return std::to_string(kSupports) + " random supports, 7 fixtures, 6 error paths";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  const Rational offset = opt.mutate ? 2 : 1;
  struct Criterion {
    int id;
    const char* title;
    double limit;
    bool quick;
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "hyperbolic edge {xy, z^k}", 1.0, true, [&] { return hyperbolic_edges_criterion(offset); }},
      {2, "Brieskorn sweep", 5.0, true, [&] { return brieskorn_criterion(offset, opt.seed); }},
      {3, "worked surface example", 1.0, true, [&] { return main_fixture_criterion(offset); }},
      {4, "xz + yz + y^3 classification", 1.0, true, [&] { return exceptional_face_criterion(); }},
      {5, "plane curves", 1.0, true, [&] { return plane_curve_criterion(); }},
      {6, "random property suite", 60.0, false, [&] { return property_criterion(opt.seed); }},
      {7, "mixed volume identities", 10.0, false, [&] { return mixed_volume_criterion(opt.seed); }},
      {8, "parser round trips and error exits", 5.0, false, [&] { return parser_criterion(opt.seed); }},
  };
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria) {
    if (opt.quick && !c.quick) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = c.body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (time limit exceeded)";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.seconds << "s / "
     << r.limit_seconds << "s  " << r.title << ": " << r.detail;
  return os.str();
}

}  // namespace newtloj
