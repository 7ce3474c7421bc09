#pragma once

// Exceptional and proximate faces, the hyperbolic-edge configuration, and
// audits of the structural facts about proximate faces.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "newtloj/lattice.hpp"
#include "newtloj/newton_boundary.hpp"

namespace newtloj {

/// A face is exceptional for axis i when, for some other variable j, the
/// derivative of the face polynomial in z_j is a pure power z_i^m (m >= 1).
/// Decided on the support points of the face, never on coefficients.
AxisSet exceptional_axes(const Face& face, std::size_t dimension);

/// Proximate for an axis: not exceptional for it, some vertex has off-axis
/// coordinates summing to at most 1, and the face touches both coordinate
/// planes containing the axis. 3D, 2-faces only.
AxisSet proximity_axes(const Face& face, const NewtonBoundary& b);

/// All 2-faces proximate for the axis, ascending id. Throws
/// CrossCheckFailure if emptiness disagrees with the absence of
/// axis-non-exceptional faces.
std::vector<const Face*> proximate_faces(const NewtonBoundary& b, Axis axis);

struct ProximityKind {
  enum class Kind { NotProximate, Convenient, NonConvenient };
  Kind kind = Kind::NotProximate;
  // For NonConvenient: the characteristic edge. `first` is the vertex at
  // distance 1 from the axis (x^k z, k >= 1, for the x axis), `second` the
  // vertex in the other coordinate plane through the axis (x^m y^n, n >= 1);
  // the roles of the two off-axis variables may be swapped.
  std::optional<std::pair<ExponentVector, ExponentVector>> edge;

  friend bool operator==(const ProximityKind&, const ProximityKind&) = default;
};

/// Throws PreconditionError when the face is not proximate for the axis,
/// CrossCheckFailure when a non-convenient proximate face has no
/// characteristic edge.
ProximityKind proximity_kind(const Face& face, Axis axis, const NewtonBoundary& b);

struct HyperbolicEdge {
  Axis axis;         // the variable of the pure power
  std::int64_t alpha;  // its exponent, >= 2
  int edge_id;

  friend bool operator==(const HyperbolicEdge&, const HyperbolicEdge&) = default;
};

/// All edges joining z_i z_j to z_k^alpha (alpha >= 2, {i,j,k} = {x,y,z}),
/// ascending edge id.
std::vector<HyperbolicEdge> hyperbolic_edges(const NewtonBoundary& b);
/// First of hyperbolic_edges(b), if any.
std::optional<HyperbolicEdge> detect_hyperbolic_edge(const NewtonBoundary& b);

/// True iff every edge of the face whose line meets the axis has a vertex
/// in one of the two coordinate planes containing the axis.
bool axis_line_audit(const Face& face, Axis axis, const NewtonBoundary& b);

/// The line through p and q meets the coordinate axis (exact).
bool line_meets_axis(const ExponentVector& p, const ExponentVector& q, Axis axis);

struct FaceClassification {
  int face_id = -1;
  AxisSet exceptional;
  AxisSet proximate;
  std::array<ProximityKind, 3> kinds{};  // indexed by axis

  friend bool operator==(const FaceClassification&, const FaceClassification&) = default;
};

/// Classification of every top-dimensional face, ascending id. Throws
/// CrossCheckFailure if a face is exceptional for two axes.
std::vector<FaceClassification> classify_faces(const NewtonBoundary& b);

}  // namespace newtloj
