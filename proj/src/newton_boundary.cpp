#include "newtloj/newton_boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "newtloj/errors.hpp"

namespace newtloj {

bool Face::has_point(const ExponentVector& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool Face::has_vertex(const ExponentVector& p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

bool Face::touches_hyperplane(Axis axis) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const ExponentVector& v) { return v[axis] == 0; });
}

// --------------------------------------------------------- NewtonBoundary

NewtonBoundary::NewtonBoundary(Support support, std::vector<FaceSeed> seeds) : support_(std::move(support)) {
  const std::size_t n = support_.dimension();
  std::set<ExponentVector> vertex_set;
  for (FaceSeed& s : seeds) {
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    if (s.points.size() == 1) vertex_set.insert(s.points.front());
  }

  for (FaceSeed& s : seeds) {
    if (s.points.empty()) throw CrossCheckFailure("face without points");
    if (!s.supporting.positive() || !s.supporting.is_primitive() || s.supporting.size() != n)
      throw CrossCheckFailure("supporting vector must be strictly positive and primitive");
    Face f;
    f.dim = affine_dimension(s.points);
    f.points = std::move(s.points);
    for (const ExponentVector& p : f.points) {
      if (!support_.contains(p)) throw CrossCheckFailure("face point outside the support");
      if (vertex_set.count(p)) f.vertices.push_back(p);
    }
    if (f.vertices.empty() || affine_dimension(f.vertices) != f.dim) {
      std::ostringstream os;
      os << "face through " << f.points.front() << " is not spanned by its vertices";
      throw CrossCheckFailure(os.str());
    }
    f.supporting = s.supporting;
    f.level = inner_product(f.supporting, f.points.front());
    for (const ExponentVector& p : f.points)
      if (inner_product(f.supporting, p) != f.level) throw CrossCheckFailure("face points off the supporting plane");
    if (f.dim == static_cast<int>(n) - 1) {
      FacetData d;
      d.normal = f.supporting;
      d.level = f.level;
      for (std::size_t i = 0; i < n; ++i) {
        d.intercepts.emplace_back(Rational(f.level, f.supporting[i]));
        if (i == 0 || d.intercepts.back() > d.m) d.m = d.intercepts.back();
      }
      f.facet = std::move(d);
    }
    faces_.push_back(std::move(f));
  }

  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  for (std::size_t i = 1; i < faces_.size(); ++i)
    if (faces_[i].dim == faces_[i - 1].dim && faces_[i].vertices == faces_[i - 1].vertices)
      throw CrossCheckFailure("duplicate face");

  dim_begin_.assign(n + 1, faces_.size());
  for (std::size_t i = faces_.size(); i-- > 0;) {
    faces_[i].id = static_cast<int>(i);
    dim_begin_[static_cast<std::size_t>(faces_[i].dim)] = i;
  }
  for (std::size_t k = n; k-- > 0;) dim_begin_[k] = std::min(dim_begin_[k], dim_begin_[k + 1]);

  auto contains_all = [](const Face& big, const Face& small) {
    return std::includes(big.points.begin(), big.points.end(), small.vertices.begin(), small.vertices.end());
  };
  edges_of_.assign(faces_.size(), {});
  facets_containing_.assign(faces_.size(), {});
  for (const Face& f : faces_) {
    for (const Face& e : edges())
      if (e.dim <= f.dim && contains_all(f, e)) edges_of_[static_cast<std::size_t>(f.id)].push_back(e.id);
    for (const Face& t : facets())
      if (contains_all(t, f)) facets_containing_[static_cast<std::size_t>(f.id)].push_back(t.id);
  }
}

std::span<const Face> NewtonBoundary::faces_of_dim(int k) const {
  if (k < 0 || k >= static_cast<int>(dimension())) return {};
  const auto b = dim_begin_[static_cast<std::size_t>(k)];
  const auto e = dim_begin_[static_cast<std::size_t>(k) + 1];
  return std::span<const Face>(faces_.data() + b, e - b);
}

std::vector<ExponentVector> NewtonBoundary::vertices() const {
  std::vector<ExponentVector> out;
  for (const Face& f : vertex_faces()) out.push_back(f.vertices.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t NewtonBoundary::checked(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= faces_.size())
    throw PreconditionError("unknown face id " + std::to_string(id));
  return static_cast<std::size_t>(id);
}

const Face& NewtonBoundary::face(int id) const { return faces_[checked(id)]; }

// ------------------------------------------------------------- builders

std::vector<ExponentVector> minimal_points(std::span<const ExponentVector> pts) {
  std::vector<ExponentVector> out;
  for (const ExponentVector& p : pts) {
    bool dominated = false;
    for (const ExponentVector& q : pts) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t i = 0; i < p.size() && le; ++i) le = q[i] <= p[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Relative-interior vector of the cone
//   { v : v >= 0, <v, r - t0> >= 0 for r in pts, <v, t - t0> = 0 for t in T },
// i.e. the normal cone of the smallest face containing T. Returns nullopt
// when the cone is {0}. The cone lies in the closed orthant, hence is
// pointed, and the sum of its primitive extreme rays is relative-interior.
std::optional<IntVec> normal_cone_interior(std::span<const ExponentVector> pts, std::span<const ExponentVector> T) {
  const std::size_t n = pts.front().size();
  std::vector<IntVec> eq;
  for (std::size_t i = 1; i < T.size(); ++i) eq.push_back(T[i] - T[0]);

  std::set<IntVec> ineq_set;
  for (std::size_t i = 0; i < n; ++i) ineq_set.insert(IntVec::unit(n, i));
  for (const ExponentVector& r : pts) {
    if (std::find(T.begin(), T.end(), r) != T.end()) continue;
    ineq_set.insert(primitive(r - T[0]));
  }
  const std::vector<IntVec> ineq(ineq_set.begin(), ineq_set.end());

  auto feasible = [&](const IntVec& u) {
    for (const IntVec& a : ineq)
      if (dot(u, a) < 0) return false;
    return true;
  };

  std::set<IntVec> rays;
  auto consider = [&](std::vector<IntVec> basis) {
    IntVec u = primitive(generalized_cross(basis, n));
    if (u.is_zero()) return;
    if (feasible(u)) rays.insert(u);
    const IntVec neg = -u;
    if (feasible(neg)) rays.insert(neg);
  };

  const std::size_t free_dims = n - eq.size();
  if (free_dims == 0) return std::nullopt;
  if (free_dims == 1) {
    consider(eq);
  } else if (free_dims == 2) {
    for (const IntVec& a : ineq) {
      std::vector<IntVec> basis = eq;
      basis.push_back(a);
      consider(std::move(basis));
    }
  } else {  // n == 3, T a single point
    for (std::size_t i = 0; i < ineq.size(); ++i)
      for (std::size_t j = i + 1; j < ineq.size(); ++j) consider({ineq[i], ineq[j]});
  }
  if (rays.empty()) return std::nullopt;
  IntVec sum = IntVec::zero(n);
  for (const IntVec& r : rays) sum = sum + r;
  return primitive(sum);
}

}  // namespace

NewtonBoundary build_boundary(const Support& s) {
  if (s.empty()) throw PreconditionError("build_boundary on an empty support");
  const std::size_t n = s.dimension();
  const std::vector<ExponentVector> all = s.points();
  const std::vector<ExponentVector> pts = minimal_points(all);

  std::map<std::vector<ExponentVector>, IntVec> found;
  std::vector<ExponentVector> T;
  auto visit = [&] {
    if (affine_dimension(T) != static_cast<int>(T.size()) - 1) return;
    const auto v = normal_cone_interior(pts, T);
    if (!v || !v->strictly_positive()) return;
    const WeightedMin wm = weighted_min(WeightVector(*v), pts);
    found.emplace(wm.argmin, *v);
  };

  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    T = {pts[i]};
    visit();
    for (std::size_t j = i + 1; j < m; ++j) {
      T = {pts[i], pts[j]};
      visit();
      if (n < 3) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        T = {pts[i], pts[j], pts[k]};
        visit();
      }
    }
  }

  std::vector<FaceSeed> seeds;
  seeds.reserve(found.size());
  for (auto& [points, v] : found) seeds.push_back({points, WeightVector(v)});
  return NewtonBoundary(s, std::move(seeds));
}

const Face& face_data(const NewtonBoundary& b, int face_id) { return b.face(face_id); }

std::vector<ConvenienceFlags> convenience_flags(const Support& s) {
  const std::size_t n = s.dimension();
  std::vector<ConvenienceFlags> out(n);
  for (const auto& [e, c] : s.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t off = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) off += e[j];
      if (off == 0) out[i].convenient = out[i].nearly_convenient = true;
      else if (off == 1 && e[i] >= 1) out[i].nearly_convenient = true;
    }
  }
  return out;
}

const Face& supported_face(const NewtonBoundary& b, const WeightVector& w) {
  const auto pts = b.support().points();
  const WeightedMin wm = weighted_min(w, pts);
  for (const Face& f : b.faces())
    if (f.points == wm.argmin) return f;
  throw CrossCheckFailure("minimizing set of a positive weight is not a boundary face");
}

}  // namespace newtloj
