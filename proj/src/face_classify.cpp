#include "newtloj/face_classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "newtloj/errors.hpp"

namespace newtloj {

namespace {

// The two other axes, in increasing order.
std::pair<Axis, Axis> off_axes(Axis a) {
  switch (a) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::X, Axis::Z};
    default: return {Axis::X, Axis::Y};
  }
}

void require_facet_3d(const Face& face, const NewtonBoundary& b, const char* op) {
  if (b.dimension() != 3) throw DimensionError(std::string(op) + " is defined for surfaces only");
  if (face.dim != 2) throw PreconditionError(std::string(op) + " needs a 2-dimensional face");
}

std::pair<ExponentVector, ExponentVector> endpoints(const Face& edge) {
  return {edge.vertices.front(), edge.vertices.back()};
}

}  // namespace

AxisSet exceptional_axes(const Face& face, std::size_t dimension) {
  if (face.dim != static_cast<int>(dimension) - 1)
    throw PreconditionError("exceptional_axes needs a face of dimension n-1");
  AxisSet out;
  for (std::size_t j = 0; j < dimension; ++j) {
    // Support of the derivative of the face polynomial in variable j.
    const ExponentVector* only = nullptr;
    int count = 0;
    for (const ExponentVector& p : face.points)
      if (p[j] >= 1) {
        only = &p;
        ++count;
      }
    if (count != 1) continue;
    IntVec q = only->vec();
    q[j] -= 1;
    for (std::size_t i = 0; i < dimension; ++i) {
      if (i == j || q[i] < 1) continue;
      bool pure = true;
      for (std::size_t k = 0; k < dimension; ++k)
        if (k != i && q[k] != 0) pure = false;
      if (pure) out.insert(static_cast<Axis>(i));
    }
  }
  return out;
}

AxisSet proximity_axes(const Face& face, const NewtonBoundary& b) {
  require_facet_3d(face, b, "proximity_axes");
  const AxisSet exc = exceptional_axes(face, 3);
  AxisSet out;
  for (Axis a : kAllAxes) {
    if (exc.contains(a)) continue;
    const auto [u, w] = off_axes(a);
    const bool near = std::any_of(face.vertices.begin(), face.vertices.end(),
                                  [&](const ExponentVector& v) { return v[u] + v[w] <= 1; });
    if (near && face.touches_hyperplane(u) && face.touches_hyperplane(w)) out.insert(a);
  }
  return out;
}

std::vector<const Face*> proximate_faces(const NewtonBoundary& b, Axis axis) {
  if (b.dimension() != 3) throw DimensionError("proximate faces are defined for surfaces only");
  std::vector<const Face*> out;
  bool some_non_exceptional_for_axis = false;
  for (const Face& f : b.facets()) {
    some_non_exceptional_for_axis |= !exceptional_axes(f, 3).contains(axis);
    if (proximity_axes(f, b).contains(axis)) out.push_back(&f);
  }
  if (out.empty() == some_non_exceptional_for_axis) {
    std::ostringstream os;
    os << "axis " << axis_name(axis) << ": proximate faces "
       << (out.empty() ? "absent although a face is not exceptional for it" : "present although every face is exceptional for it");
    throw CrossCheckFailure(os.str());
  }
  return out;
}

ProximityKind proximity_kind(const Face& face, Axis axis, const NewtonBoundary& b) {
  if (!proximity_axes(face, b).contains(axis))
    throw PreconditionError("face " + std::to_string(face.id) + " is not proximate for axis " + axis_name(axis));
  const auto [u, w] = off_axes(axis);
  ProximityKind out;
  const bool on_axis = std::any_of(face.vertices.begin(), face.vertices.end(),
                                   [&](const ExponentVector& v) { return v[u] == 0 && v[w] == 0; });
  if (on_axis) {
    out.kind = ProximityKind::Kind::Convenient;
    return out;
  }
  out.kind = ProximityKind::Kind::NonConvenient;
  // near: axis^k * s (k >= 1); far: axis^m * t^n (n >= 1), s and t the two off-axis variables.
  auto matches = [&](const ExponentVector& near, const ExponentVector& far, Axis s, Axis t) {
    return near[axis] >= 1 && near[t] == 0 && near[s] == 1 && far[s] == 0 && far[t] >= 1;
  };
  for (const auto& [s, t] : {std::pair{w, u}, std::pair{u, w}}) {
    for (int id : b.edges_of(face.id)) {
      const auto [p, q] = endpoints(b.face(id));
      if (matches(p, q, s, t)) out.edge = std::pair{p, q};
      else if (matches(q, p, s, t)) out.edge = std::pair{q, p};
      if (out.edge) return out;
    }
  }
  throw CrossCheckFailure("non-convenient proximate face " + std::to_string(face.id) + " has no characteristic edge");
}

std::vector<HyperbolicEdge> hyperbolic_edges(const NewtonBoundary& b) {
  std::vector<HyperbolicEdge> out;
  if (b.dimension() != 3) return out;
  auto is_pair = [](const ExponentVector& p, Axis k) {
    const auto [i, j] = off_axes(k);
    return p[i] == 1 && p[j] == 1 && p[k] == 0;
  };
  auto is_power = [](const ExponentVector& p, Axis k) {
    const auto [i, j] = off_axes(k);
    return p[i] == 0 && p[j] == 0 && p[k] >= 2;
  };
  for (const Face& e : b.edges()) {
    const auto [p, q] = endpoints(e);
    for (Axis k : kAllAxes) {
      if (is_pair(p, k) && is_power(q, k)) out.push_back({k, q[k], e.id});
      else if (is_pair(q, k) && is_power(p, k)) out.push_back({k, p[k], e.id});
    }
  }
  return out;
}

std::optional<HyperbolicEdge> detect_hyperbolic_edge(const NewtonBoundary& b) {
  const auto all = hyperbolic_edges(b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool line_meets_axis(const ExponentVector& p, const ExponentVector& q, Axis axis) {
  const auto [u, w] = off_axes(axis);
  const std::int64_t pu = p[u], pw = p[w];
  const std::int64_t du = checked_sub(q[u], pu), dw = checked_sub(q[w], pw);
  if (du == 0 && dw == 0) return pu == 0 && pw == 0;
  return checked_sub(checked_mul(pu, dw), checked_mul(pw, du)) == 0;
}

bool axis_line_audit(const Face& face, Axis axis, const NewtonBoundary& b) {
  require_facet_3d(face, b, "axis_line_audit");
  const auto [u, w] = off_axes(axis);
  auto in_axis_plane = [&](const ExponentVector& v) { return v[u] == 0 || v[w] == 0; };
  for (int id : b.edges_of(face.id)) {
    const auto [p, q] = endpoints(b.face(id));
    if (line_meets_axis(p, q, axis) && !in_axis_plane(p) && !in_axis_plane(q)) return false;
  }
  return true;
}

std::vector<FaceClassification> classify_faces(const NewtonBoundary& b) {
  std::vector<FaceClassification> out;
  for (const Face& f : b.facets()) {
    FaceClassification c;
    c.face_id = f.id;
    c.exceptional = exceptional_axes(f, b.dimension());
    if (c.exceptional.size() > 1)
      throw CrossCheckFailure("face " + std::to_string(f.id) + " is exceptional for several axes");
    if (b.dimension() == 3) {
      c.proximate = proximity_axes(f, b);
      for (Axis a : c.proximate.members()) c.kinds[index(a)] = proximity_kind(f, a, b);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace newtloj
