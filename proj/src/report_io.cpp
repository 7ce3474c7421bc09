#include "newtloj/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "newtloj/errors.hpp"
#include "newtloj/random.hpp"

namespace newtloj {

using nlohmann::json;

namespace {

json vec_json(const ExponentVector& v) { return std::vector<std::int64_t>(v.begin(), v.end()); }
json vec_json(const WeightVector& v) { return std::vector<std::int64_t>(v.begin(), v.end()); }

json vecs_json(const std::vector<ExponentVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

IntVec intvec_from(const json& j) {
  const auto c = j.get<std::vector<std::int64_t>>();
  if (c.size() < 2 || c.size() > 3) throw ParseError("vector of length " + std::to_string(c.size()));
  return IntVec(std::span<const std::int64_t>(c));
}

std::vector<ExponentVector> vecs_from(const json& j) {
  std::vector<ExponentVector> out;
  for (const json& e : j) out.emplace_back(intvec_from(e));
  return out;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

AxisSet axes_from(const json& j) {
  AxisSet s;
  for (char c : j.get<std::string>()) s.insert(axis_from_name(std::string(1, c)));
  return s;
}

json integer_json(const Integer& i) {
  if (i >= std::numeric_limits<std::int64_t>::min() && i <= std::numeric_limits<std::int64_t>::max())
    return i.convert_to<std::int64_t>();
  return i.str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  return Integer(j.get<std::string>());
}

std::string kind_name(ProximityKind::Kind k) {
  switch (k) {
    case ProximityKind::Kind::NotProximate: return "not_proximate";
    case ProximityKind::Kind::Convenient: return "convenient";
    case ProximityKind::Kind::NonConvenient: return "non_convenient";
  }
  return "?";
}

ProximityKind::Kind kind_from(const std::string& s) {
  if (s == "not_proximate") return ProximityKind::Kind::NotProximate;
  if (s == "convenient") return ProximityKind::Kind::Convenient;
  if (s == "non_convenient") return ProximityKind::Kind::NonConvenient;
  throw ParseError("unknown proximity kind '" + s + "'");
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

json face_to_json(const FaceEntry& e) {
  const Face& f = e.face;
  json j;
  j["id"] = f.id;
  j["dim"] = f.dim;
  j["vertices"] = vecs_json(f.vertices);
  j["points"] = vecs_json(f.points);
  j["supporting"] = vec_json(f.supporting);
  j["level"] = f.level;
  if (f.facet) {
    json intercepts = json::array();
    for (const Rational& r : f.facet->intercepts) intercepts.push_back(to_string(r));
    j["facet"] = {{"normal", vec_json(f.facet->normal)},
                  {"level", f.facet->level},
                  {"intercepts", intercepts},
                  {"m", to_string(f.facet->m)}};
  } else {
    j["facet"] = nullptr;
  }
  j["exceptional"] = e.classification.exceptional.str();
  j["proximate"] = e.classification.proximate.str();
  json prox = json::object();
  for (Axis a : e.classification.proximate.members()) {
    const ProximityKind& k = e.classification.kinds[index(a)];
    json pk = {{"kind", kind_name(k.kind)}};
    if (k.edge) pk["edge"] = vecs_json({k.edge->first, k.edge->second});
    prox[std::string(1, axis_name(a))] = pk;
  }
  j["proximity"] = prox;
  return j;
}

FaceEntry face_from_json(const json& j) {
  return guarded([&] {
    FaceEntry e;
    Face& f = e.face;
    f.id = j.at("id").get<int>();
    f.dim = j.at("dim").get<int>();
    f.vertices = vecs_from(j.at("vertices"));
    f.points = vecs_from(j.at("points"));
    f.supporting = WeightVector(intvec_from(j.at("supporting")));
    f.level = j.at("level").get<std::int64_t>();
    if (!j.at("facet").is_null()) {
      const json& fj = j.at("facet");
      FacetData d;
      d.normal = WeightVector(intvec_from(fj.at("normal")));
      d.level = fj.at("level").get<std::int64_t>();
      for (const json& r : fj.at("intercepts")) d.intercepts.push_back(rational_from(r));
      d.m = rational_from(fj.at("m"));
      f.facet = std::move(d);
    }
    e.classification.face_id = f.id;
    e.classification.exceptional = axes_from(j.at("exceptional"));
    e.classification.proximate = axes_from(j.at("proximate"));
    for (const auto& [name, pk] : j.at("proximity").items()) {
      ProximityKind& k = e.classification.kinds[index(axis_from_name(name))];
      k.kind = kind_from(pk.at("kind").get<std::string>());
      if (pk.contains("edge")) {
        const auto ends = vecs_from(pk.at("edge"));
        if (ends.size() != 2) throw ParseError("proximity edge needs two endpoints");
        k.edge = std::pair{ends[0], ends[1]};
      }
    }
    return e;
  });
}

json report_to_json(const ExponentReport& r) {
  json j;
  j["dimension"] = r.dimension;
  j["exponent"] = to_string(r.exponent);
  j["case"] = to_string(r.exponent_case.kind);
  if (r.exponent_case.kind == CaseKind::HyperbolicEdge) {
    j["hyperbolic_axis"] = std::string(1, axis_name(*r.exponent_case.axis));
    j["alpha"] = r.exponent_case.alpha;
  }
  json att = json::array();
  for (const Attaining& a : r.attaining) att.push_back({{"face", a.face_id}, {"axis", std::string(1, axis_name(a.axis))}});
  j["attaining"] = att;
  j["sufficiency_degree"] = integer_json(r.sufficiency_degree);
  json faces = json::array();
  for (const FaceEntry& e : r.face_table) faces.push_back(face_to_json(e));
  j["faces"] = faces;
  return j;
}

ExponentReport report_from_json(const json& j) {
  return guarded([&] {
    ExponentReport r;
    r.dimension = j.at("dimension").get<std::size_t>();
    r.exponent = rational_from(j.at("exponent"));
    r.exponent_case.kind = case_kind_from_string(j.at("case").get<std::string>());
    if (r.exponent_case.kind == CaseKind::HyperbolicEdge) {
      r.exponent_case.axis = axis_from_name(j.at("hyperbolic_axis").get<std::string>());
      r.exponent_case.alpha = j.at("alpha").get<std::int64_t>();
    }
    for (const json& a : j.at("attaining"))
      r.attaining.push_back({a.at("face").get<int>(), axis_from_name(a.at("axis").get<std::string>())});
    r.sufficiency_degree = integer_from(j.at("sufficiency_degree"));
    for (const json& f : j.at("faces")) r.face_table.push_back(face_from_json(f));
    return r;
  });
}

// ------------------------------------------------------------------ OFF

namespace {

int half(std::int64_t x, std::int64_t y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

}  // namespace

std::string export_off(const NewtonBoundary& b) {
  if (b.dimension() != 3) throw DimensionError("OFF export needs a trivariate support");
  const std::vector<ExponentVector> verts = b.vertices();
  auto vindex = [&](const ExponentVector& v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };

  std::ostringstream os;
  os << std::setprecision(12);
  os << "OFF\n" << verts.size() << ' ' << b.facets().size() << ' ' << b.edges().size() << '\n';
  for (const ExponentVector& v : verts)
    os << static_cast<double>(v[0]) << ' ' << static_cast<double>(v[1]) << ' ' << static_cast<double>(v[2]) << '\n';

  for (const Face& f : b.facets()) {
    // Angular order around the centroid in the projection to the xy-plane
    // (the normal has a positive z entry, so the projection is injective),
    // reversed so the polygon is counterclockwise seen along the outward
    // normal.
    const std::int64_t k = static_cast<std::int64_t>(f.vertices.size());
    std::int64_t cx = 0, cy = 0;
    for (const ExponentVector& v : f.vertices) {
      cx = checked_add(cx, v[0]);
      cy = checked_add(cy, v[1]);
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> d;
    for (const ExponentVector& v : f.vertices) d.push_back({checked_sub(checked_mul(k, v[0]), cx), checked_sub(checked_mul(k, v[1]), cy)});
    std::vector<std::size_t> order(f.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
      const auto [ax, ay] = d[a];
      const auto [bx, by] = d[c];
      if (half(ax, ay) != half(bx, by)) return half(ax, ay) < half(bx, by);
      return checked_sub(checked_mul(ax, by), checked_mul(ay, bx)) > 0;
    });
    std::reverse(order.begin(), order.end());
    os << f.vertices.size();
    for (std::size_t i : order) os << ' ' << vindex(f.vertices[i]);
    os << '\n';
  }
  for (const Face& e : b.edges())
    if (b.facets_containing(e.id).empty())
      os << "# edge " << vindex(e.vertices.front()) << ' ' << vindex(e.vertices.back()) << '\n';
  return os.str();
}

// --------------------------------------------------------------- random

Support random_support(const RandomOptions& opt) {
  const std::size_t n = opt.dimension;
  if (n != 2 && n != 3) throw DimensionError("random supports live in dimension 2 or 3");
  if (opt.points < n) throw PreconditionError("at least one point per variable is required");
  if (opt.max_exponent < 2) throw PreconditionError("max exponent must be at least 2");
  const std::int64_t B = opt.max_exponent;
  Rng rng(opt.seed);

  for (std::size_t draw = 0; draw < opt.max_draws; ++draw) {
    Support s(n);
    const bool minimal = opt.points == n;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e = IntVec::zero(n);
      if (minimal || rng.coin()) {
        e[i] = rng.uniform(2, B);
      } else {
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) ++j;
        e[i] = rng.uniform(1, B - 1);
        e[j] = 1;
      }
      s.add(ExponentVector(e), std::nullopt);
    }
    for (std::size_t attempt = 0; s.size() < opt.points && attempt < 64 * opt.points; ++attempt) {
      IntVec e = IntVec::zero(n);
      std::int64_t deg = 0;
      for (std::size_t i = 0; i < n; ++i) deg += e[i] = rng.uniform(0, B);
      if (deg < 2 || deg > B) continue;
      s.add(ExponentVector(e), std::nullopt);
    }
    if (s.size() == opt.points && check_isolated(s).ok) return s;
  }
  throw PreconditionError("random support: rejection cap of " + std::to_string(opt.max_draws) + " draws exceeded");
}

}  // namespace newtloj
