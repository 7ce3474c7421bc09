#include "newtloj/exponent_engine.hpp"

#include <algorithm>

#include "newtloj/errors.hpp"

namespace newtloj {

std::string Violation::str() const {
  switch (kind) {
    case Kind::NotSingularAtZero: return "not_singular_at_zero";
    case Kind::ConstantTermPresent: return "constant_term_present";
    case Kind::NotNearlyConvenient: return std::string("not_nearly_convenient(") + axis_name(*axis) + ")";
    case Kind::MissingCoordinatePlane: {
      std::string plane = "0";
      for (Axis a : kAllAxes)
        if (a != *axis) plane += axis_name(a);
      return "missing_coordinate_plane(" + plane + ")";
    }
  }
  return "?";
}

std::string IsolatedVerdict::str() const {
  if (ok) return "ok";
  std::string s;
  for (const Violation& v : violations) s += (s.empty() ? "" : ", ") + v.str();
  return s;
}

IsolatedVerdict check_isolated(const Support& s) {
  const std::size_t n = s.dimension();
  IsolatedVerdict out;
  bool constant = false, linear = false;
  for (const ExponentVector& e : s.points()) {
    if (e.degree() == 0) constant = true;
    if (e.degree() == 1) linear = true;
  }
  if (constant) out.violations.push_back({Violation::Kind::ConstantTermPresent, std::nullopt});
  if (linear) out.violations.push_back({Violation::Kind::NotSingularAtZero, std::nullopt});
  if (n == 3) {
    const auto flags = convenience_flags(s);
    for (Axis a : kAllAxes)
      if (!flags[index(a)].nearly_convenient) out.violations.push_back({Violation::Kind::NotNearlyConvenient, a});
    for (Axis a : kAllAxes) {
      const auto pts = s.points();
      if (std::none_of(pts.begin(), pts.end(), [&](const ExponentVector& e) { return e[a] == 0; }))
        out.violations.push_back({Violation::Kind::MissingCoordinatePlane, a});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Generic: return "generic";
    case CaseKind::HyperbolicEdge: return "hyperbolic_edge";
    case CaseKind::TwoDimDefault: return "two_dim_default";
  }
  return "?";
}

CaseKind case_kind_from_string(std::string_view s) {
  if (s == "generic") return CaseKind::Generic;
  if (s == "hyperbolic_edge") return CaseKind::HyperbolicEdge;
  if (s == "two_dim_default") return CaseKind::TwoDimDefault;
  throw ParseError("unknown case '" + std::string(s) + "'");
}

Integer sufficiency_degree(const Rational& L) {
  if (L < 1) throw PreconditionError("sufficiency degree needs an exponent >= 1, got " + to_string(L));
  return floor(L) + 1;
}

namespace {

void require_isolated(const Support& s) {
  const IsolatedVerdict v = check_isolated(s);
  if (!v.ok) throw NotIsolatedError("not an isolated singularity: " + v.str());
}

std::vector<FaceEntry> face_table(const NewtonBoundary& b, const std::vector<FaceClassification>& cls) {
  std::vector<FaceEntry> out;
  for (const Face& f : b.faces()) {
    FaceEntry e{f, {}};
    e.classification.face_id = f.id;
    for (const FaceClassification& c : cls)
      if (c.face_id == f.id) e.classification = c;
    out.push_back(std::move(e));
  }
  return out;
}

// Max of m(S) - 1 over the non-exceptional top-dimensional faces, with the
// (face, axis) pairs attaining it. nullopt when there are none.
std::optional<std::pair<Rational, std::vector<Attaining>>> generic_max(const NewtonBoundary& b,
                                                                       const std::vector<FaceClassification>& cls) {
  std::optional<Rational> best;
  std::vector<Attaining> att;
  for (const FaceClassification& c : cls) {
    if (!c.exceptional.empty()) continue;
    const Face& f = b.face(c.face_id);
    const FacetData& d = *f.facet;
    if (!best || d.m > *best) {
      best = d.m;
      att.clear();
    }
    if (d.m == *best)
      for (std::size_t i = 0; i < b.dimension(); ++i)
        if (d.intercepts[i] == d.m) att.push_back({f.id, static_cast<Axis>(i)});
  }
  if (!best) return std::nullopt;
  std::sort(att.begin(), att.end());
  return std::pair{*best - 1, att};
}

}  // namespace

ExponentReport lojasiewicz_3d(const NewtonBoundary& b) {
  if (b.dimension() != 3) throw DimensionError("lojasiewicz_3d needs a trivariate support");
  require_isolated(b.support());
  const auto cls = classify_faces(b);
  ExponentReport r;
  r.dimension = 3;
  if (auto g = generic_max(b, cls)) {
    r.exponent = g->first;
    r.attaining = std::move(g->second);
    r.exponent_case = {CaseKind::Generic, std::nullopt, 0};
  } else {
    const auto edges = hyperbolic_edges(b);
    if (edges.size() != 1)
      throw MalformedBoundaryError("every 2-face is exceptional but there are " + std::to_string(edges.size()) +
                                   " hyperbolic edges");
    const HyperbolicEdge& h = edges.front();
    if (h.alpha < 2) throw MalformedBoundaryError("hyperbolic edge exponent below 2");
    r.exponent = Rational(h.alpha - 1);
    r.attaining = {{h.edge_id, h.axis}};
    r.exponent_case = {CaseKind::HyperbolicEdge, h.axis, h.alpha};
  }
  if (r.exponent < 1) throw CrossCheckFailure("exponent " + to_string(r.exponent) + " below 1");
  r.sufficiency_degree = sufficiency_degree(r.exponent);
  r.face_table = face_table(b, cls);
  return r;
}

ExponentReport lojasiewicz_3d(const Support& s) {
  if (s.dimension() != 3) throw DimensionError("lojasiewicz_3d needs a trivariate support");
  require_isolated(s);
  return lojasiewicz_3d(build_boundary(s));
}

ExponentReport lojasiewicz_2d(const Support& s) {
  if (s.dimension() != 2) throw DimensionError("lojasiewicz_2d needs a bivariate support");
  require_isolated(s);
  const auto flags = convenience_flags(s);
  for (std::size_t i = 0; i < 2; ++i)
    if (!flags[i].nearly_convenient)
      throw NotIsolatedError(std::string("not an isolated singularity: not_nearly_convenient(") +
                             axis_name(static_cast<Axis>(i)) + ")");
  const NewtonBoundary b = build_boundary(s);
  const auto cls = classify_faces(b);
  ExponentReport r;
  r.dimension = 2;
  if (auto g = generic_max(b, cls)) {
    r.exponent = g->first;
    r.attaining = std::move(g->second);
    r.exponent_case = {CaseKind::Generic, std::nullopt, 0};
  } else {
    r.exponent = 1;
    r.exponent_case = {CaseKind::TwoDimDefault, std::nullopt, 0};
  }
  if (r.exponent < 1) throw CrossCheckFailure("exponent " + to_string(r.exponent) + " below 1");
  r.sufficiency_degree = sufficiency_degree(r.exponent);
  r.face_table = face_table(b, cls);
  return r;
}

ExponentReport lojasiewicz(const Support& s) {
  return s.dimension() == 2 ? lojasiewicz_2d(s) : lojasiewicz_3d(s);
}

ProximateRoute proximate_route(const NewtonBoundary& b) {
  if (b.dimension() != 3) throw DimensionError("proximate faces are defined for surfaces only");
  ProximateRoute r;
  std::optional<Rational> best;
  for (Axis a : kAllAxes) {
    const auto faces = proximate_faces(b, a);
    if (faces.empty()) throw NoProximateFaceError(std::string("no proximate face for axis ") + axis_name(a));
    const Face& f = *faces.front();
    r.face_ids[index(a)] = f.id;
    r.intercepts[index(a)] = f.facet->intercepts[index(a)];
    if (!best || r.intercepts[index(a)] > *best) best = r.intercepts[index(a)];
  }
  r.exponent = *best - 1;
  return r;
}

Rational exponent_via_proximate(const Support& s) {
  if (s.dimension() != 3) throw DimensionError("exponent_via_proximate needs a trivariate support");
  require_isolated(s);
  return proximate_route(build_boundary(s)).exponent;
}

}  // namespace newtloj
