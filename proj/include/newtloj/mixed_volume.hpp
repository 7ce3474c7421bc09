#pragma once

// Lattice polygons in the plane: charts of face polynomials, Minkowski
// sums, areas and the two-dimensional mixed volume
//   MV(P, Q) = area(P + Q) - area(P) - area(Q).

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "newtloj/lattice.hpp"
#include "newtloj/newton_boundary.hpp"
#include "newtloj/polynomial.hpp"

namespace newtloj {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
};

Rational cross(const Point2& a, const Point2& b);

/// Convex polygon, possibly degenerate (segment: 2 vertices, point: 1).
/// Vertices counterclockwise from the lexicographically smallest, with no
/// three consecutive vertices collinear.
class Polygon2 {
 public:
  /// Convex hull of a non-empty point set.
  static Polygon2 hull(std::vector<Point2> pts);
  /// Newton polygon of a bivariate support.
  static Polygon2 of_support(const Support& s);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  bool is_point() const noexcept { return vertices_.size() == 1; }
  bool is_segment() const noexcept { return vertices_.size() == 2; }

  Polygon2 translated(const Point2& t) const;
  /// lambda * P for lambda >= 0.
  Polygon2 scaled(const Rational& lambda) const;

  friend bool operator==(const Polygon2&, const Polygon2&) = default;

 private:
  std::vector<Point2> vertices_;
};

std::string to_string(const Polygon2& p);

/// Drops the coordinate of `axis` from every exponent (sets that variable
/// to 1), combining like terms.
Support restrict_to_chart(const Support& s, Axis axis);

/// Chart of the face polynomial f_S. Throws CrossCheckFailure if two face
/// points collide in the chart.
Support face_chart(const Face& face, const Support& s, Axis axis);

/// Edge-direction merge of the two boundaries.
Polygon2 minkowski_sum(const Polygon2& p, const Polygon2& q);
Rational area2(const Polygon2& p);
Rational mixed_volume_2(const Polygon2& p, const Polygon2& q);

enum class MvZeroReason { None, ParallelSegments, PointFactor };
std::string to_string(MvZeroReason r);

/// Why MV(P, Q) vanishes, or None when it is positive. Throws
/// CrossCheckFailure if the geometric reason and the computed value
/// disagree.
MvZeroReason mv_zero_reason(const Polygon2& p, const Polygon2& q);

/// Bernstein non-degeneracy of the charted pair of derivatives of a face
/// polynomial along the two variables other than `axis`, for generic
/// coefficients supported on the vertices of the face. Fails exactly when
/// some edge or diagonal of the face avoids both coordinate planes through
/// the axis, charts to a binomial y^l z^m (a + b y^s z^t) with s, t > 0,
/// and lies on a line meeting the axis.
bool generic_B_nondegenerate(const Face& face, Axis axis, const NewtonBoundary& b);

/// Everything the `mv` subcommand prints for one face and axis.
struct ChartSystem {
  Support face_poly{3};
  Support first_derivative_chart{2}; // d f_S / d u, charted (u < w the off-axis variables)
  Support second_derivative_chart{2}; // d f_S / d w, charted
  Polygon2 first;
  Polygon2 second;
  Polygon2 sum;
  Rational area_first, area_second, area_sum, mixed_volume;
  MvZeroReason reason = MvZeroReason::None;
  std::optional<bool> generic_b_nondegenerate;  // absent if not vertex-supported
};

ChartSystem chart_system(const Face& face, Axis axis, const NewtonBoundary& b);

}  // namespace newtloj
