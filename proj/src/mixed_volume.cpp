#include "newtloj/mixed_volume.hpp"

#include <algorithm>
#include <sstream>

#include "newtloj/errors.hpp"
#include "newtloj/face_classify.hpp"

namespace newtloj {

Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

Polygon2 Polygon2::hull(std::vector<Point2> pts) {
  if (pts.empty()) throw PreconditionError("hull of an empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon2 out;
  if (pts.size() <= 2) {
    out.vertices_ = std::move(pts);
    return out;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.vertices_ = std::move(h);
  return out;
}

Polygon2 Polygon2::of_support(const Support& s) {
  if (s.dimension() != 2) throw DimensionError("Newton polygon needs a bivariate support");
  std::vector<Point2> pts;
  for (const ExponentVector& e : s.points()) pts.push_back({Rational(e[0]), Rational(e[1])});
  return hull(std::move(pts));
}

Polygon2 Polygon2::translated(const Point2& t) const {
  Polygon2 out = *this;
  for (Point2& v : out.vertices_) v = v + t;
  return out;
}

Polygon2 Polygon2::scaled(const Rational& lambda) const {
  if (lambda < 0) throw PreconditionError("negative scaling factor");
  if (lambda == 0) return hull({Point2{}});
  Polygon2 out = *this;
  for (Point2& v : out.vertices_) v = {v.x * lambda, v.y * lambda};
  return out;
}

std::string to_string(const Polygon2& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const Point2& v = p.vertices()[i];
    s += (i ? ", (" : "(") + to_string(v.x) + "," + to_string(v.y) + ")";
  }
  return s + "]";
}

Support restrict_to_chart(const Support& s, Axis axis) {
  if (s.dimension() != 3) throw DimensionError("charts restrict trivariate supports");
  Support out(2);
  for (const auto& [e, c] : s.terms()) {
    IntVec v = IntVec::zero(2);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != index(axis)) v[k++] = e[i];
    out.add(ExponentVector(v), c);
  }
  return out;
}

Support face_chart(const Face& face, const Support& s, Axis axis) {
  const Support fs = s.restricted_to(face.points);
  Support chart = restrict_to_chart(fs, axis);
  if (chart.size() != fs.size()) throw CrossCheckFailure("face points collide in the chart");
  return chart;
}

namespace {

int half(const Point2& d) { return (d.x > 0 || (d.x == 0 && d.y > 0)) ? 0 : 1; }

// Angular order of edge directions, starting just after the downward
// vertical; the boundary walk from the lexicographically smallest vertex
// visits edges in this order.
bool direction_less(const Point2& a, const Point2& b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::vector<Point2> edge_vectors(const Polygon2& p) {
  std::vector<Point2> out;
  const auto& v = p.vertices();
  if (v.size() < 2) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(i + 1) % v.size()] - v[i]);
  return out;
}

}  // namespace

Polygon2 minkowski_sum(const Polygon2& p, const Polygon2& q) {
  const auto ep = edge_vectors(p);
  const auto eq = edge_vectors(q);
  std::vector<Point2> out;
  Point2 cur = p.vertices().front() + q.vertices().front();
  out.push_back(cur);
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    if (j == eq.size() || (i < ep.size() && direction_less(ep[i], eq[j]))) cur = cur + ep[i++];
    else if (i == ep.size() || direction_less(eq[j], ep[i])) cur = cur + eq[j++];
    else cur = cur + ep[i++] + eq[j++];  // parallel edges merge
    out.push_back(cur);
  }
  // The walk closes on the start; hull() only removes collinear joints.
  return Polygon2::hull(std::move(out));
}

Rational area2(const Polygon2& p) {
  const auto& v = p.vertices();
  if (v.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice / 2;
}

Rational mixed_volume_2(const Polygon2& p, const Polygon2& q) {
  return area2(minkowski_sum(p, q)) - area2(p) - area2(q);
}

std::string to_string(MvZeroReason r) {
  switch (r) {
    case MvZeroReason::None: return "none";
    case MvZeroReason::ParallelSegments: return "parallel_segments";
    case MvZeroReason::PointFactor: return "point_factor";
  }
  return "?";
}

MvZeroReason mv_zero_reason(const Polygon2& p, const Polygon2& q) {
  MvZeroReason r = MvZeroReason::None;
  if (p.is_point() || q.is_point()) {
    r = MvZeroReason::PointFactor;
  } else if (p.is_segment() && q.is_segment()) {
    const Point2 dp = p.vertices()[1] - p.vertices()[0];
    const Point2 dq = q.vertices()[1] - q.vertices()[0];
    if (cross(dp, dq) == 0) r = MvZeroReason::ParallelSegments;
  }
  const Rational mv = mixed_volume_2(p, q);
  if ((r == MvZeroReason::None) != (mv > 0))
    throw CrossCheckFailure("mixed volume " + to_string(mv) + " contradicts zero reason " + to_string(r));
  return r;
}

namespace {

std::pair<std::size_t, std::size_t> off_indices(Axis a) {
  switch (a) {
    case Axis::X: return {1, 2};
    case Axis::Y: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace

bool generic_B_nondegenerate(const Face& face, Axis axis, const NewtonBoundary& b) {
  if (b.dimension() != 3 || face.dim != 2) throw PreconditionError("generic_B_nondegenerate needs a 2-face in 3D");
  if (face.points != face.vertices)
    throw NotVertexSupportedError("face " + std::to_string(face.id) + " carries support points that are not vertices");
  const auto [u, w] = off_indices(axis);
  const auto& vs = face.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const ExponentVector& p = vs[i];
      const ExponentVector& q = vs[j];
      if (p[u] < 1 || p[w] < 1 || q[u] < 1 || q[w] < 1) continue;  // touches a plane through the axis
      const std::int64_t du = checked_sub(q[u], p[u]);
      const std::int64_t dw = checked_sub(q[w], p[w]);
      // Binomial y^l z^m (a + b y^s z^t) with s, t > 0 up to orientation.
      const bool second_form = (du > 0 && dw > 0) || (du < 0 && dw < 0);
      if (second_form && line_meets_axis(p, q, axis)) return false;
    }
  return true;
}

ChartSystem chart_system(const Face& face, Axis axis, const NewtonBoundary& b) {
  if (b.dimension() != 3 || face.dim != 2) throw PreconditionError("chart_system needs a 2-face in 3D");
  const auto [u, w] = off_indices(axis);
  ChartSystem cs;
  cs.face_poly = b.support().restricted_to(face.points);
  cs.first_derivative_chart = restrict_to_chart(cs.face_poly.derivative(u), axis);
  cs.second_derivative_chart = restrict_to_chart(cs.face_poly.derivative(w), axis);
  cs.first = Polygon2::of_support(cs.first_derivative_chart);
  cs.second = Polygon2::of_support(cs.second_derivative_chart);
  cs.sum = minkowski_sum(cs.first, cs.second);
  cs.area_first = area2(cs.first);
  cs.area_second = area2(cs.second);
  cs.area_sum = area2(cs.sum);
  cs.mixed_volume = cs.area_sum - cs.area_first - cs.area_second;
  cs.reason = mv_zero_reason(cs.first, cs.second);
  if (face.points == face.vertices) cs.generic_b_nondegenerate = generic_B_nondegenerate(face, axis, b);
  return cs;
}

}  // namespace newtloj
