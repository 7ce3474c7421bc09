#include "newtloj/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "newtloj/errors.hpp"
#include "newtloj/random.hpp"

namespace newtloj {

void MonomialPath::validate() const {
  if (exponents.size() != coefficients.size() || exponents.size() < 2 || exponents.size() > 3)
    throw PreconditionError("malformed path");
  bool finite = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!exponents[i]) continue;
    finite = true;
    if (*exponents[i] < 1) throw PreconditionError("path exponents must be >= 1");
    if (coefficients[i] == 0) throw PreconditionError("path coefficients must be non-zero");
  }
  if (!finite) throw PreconditionError("path is identically zero");
}

std::int64_t MonomialPath::order() const {
  std::optional<std::int64_t> m;
  for (const auto& e : exponents)
    if (e && (!m || *e < *m)) m = e;
  if (!m) throw PreconditionError("path is identically zero");
  return *m;
}

std::string MonomialPath::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ", ";
    if (!exponents[i]) s += "0";
    else s += to_string(coefficients[i]) + "*t^" + std::to_string(*exponents[i]);
  }
  return s + ")";
}

bool path_less(const MonomialPath& a, const MonomialPath& b) {
  auto key = [](const std::optional<std::int64_t>& e) {
    return e ? std::pair{0, *e} : std::pair{1, std::int64_t{0}};
  };
  for (std::size_t i = 0; i < std::min(a.exponents.size(), b.exponents.size()); ++i)
    if (key(a.exponents[i]) != key(b.exponents[i])) return key(a.exponents[i]) < key(b.exponents[i]);
  if (a.exponents.size() != b.exponents.size()) return a.exponents.size() < b.exponents.size();
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    if (a.coefficients[i] != b.coefficients[i]) return a.coefficients[i] < b.coefficients[i];
  return false;
}

MonomialPath axis_path(std::size_t dimension, Axis axis, const Rational& c) {
  MonomialPath p;
  p.exponents.assign(dimension, std::nullopt);
  p.coefficients.assign(dimension, Rational(1));
  p.exponents[index(axis)] = 1;
  p.coefficients[index(axis)] = c;
  return p;
}

namespace {

Rational power(Rational base, std::int64_t e) {
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Order of the substituted monomial, or nullopt if it vanishes on the path.
std::optional<std::int64_t> monomial_order(const ExponentVector& e, const MonomialPath& path) {
  std::int64_t ord = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!path.exponents[j]) return std::nullopt;
    ord = checked_add(ord, checked_mul(e[j], *path.exponents[j]));
  }
  return ord;
}

std::optional<std::int64_t> substituted_order(const Support& poly, const MonomialPath& path) {
  std::map<std::int64_t, Rational> series;
  for (const auto& [e, c] : poly.terms()) {
    const auto ord = monomial_order(e, path);
    if (!ord) continue;
    Rational term = *c;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) term *= power(path.coefficients[j], e[j]);
    series[*ord] += term;
  }
  for (const auto& [ord, c] : series)
    if (c != 0) return ord;
  return std::nullopt;
}

}  // namespace

PathOrders path_orders(const Support& s, const MonomialPath& path, std::uint64_t seed) {
  path.validate();
  if (path.exponents.size() != s.dimension()) throw DimensionError("path and support dimensions differ");
  const Support concrete = s.all_concrete() ? s : s.instantiate(seed);
  PathOrders out;
  out.path_order = path.order();
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const auto ord = substituted_order(concrete.derivative(i), path);
    if (ord && (!out.gradient_order || *ord < *out.gradient_order)) out.gradient_order = ord;
  }
  if (out.gradient_order) out.ratio = Rational(*out.gradient_order, out.path_order);
  return out;
}

std::vector<std::optional<std::int64_t>> expected_partial_orders(const Support& s, const MonomialPath& path) {
  std::vector<std::optional<std::int64_t>> out;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    std::optional<std::int64_t> m;
    const Support d = s.derivative(i);
    for (const auto& [e, c] : d.terms()) {
      const auto ord = monomial_order(e, path);
      if (ord && (!m || *ord < *m)) m = ord;
    }
    out.push_back(m);
  }
  return out;
}

namespace {

std::string vec_label(const WeightVector& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

constexpr int kRedraws = 64;

}  // namespace

SweepResult sweep_lower_bound(const Support& s, std::uint64_t seed) {
  const std::size_t n = s.dimension();
  const Support concrete = s.all_concrete() ? s : s.instantiate(mix_seed(seed, 0));
  const NewtonBoundary b = build_boundary(s);

  // Ties go to the earlier kind (axis, normal, edge), then to path_less.
  struct Member {
    std::vector<std::optional<std::int64_t>> exponents;
    std::string name;
    int kind;
  };
  std::vector<Member> family;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::optional<std::int64_t>> e(n);
    e[i] = 1;
    family.push_back({e, std::string("axis ") + axis_name(static_cast<Axis>(i)), 0});
  }
  for (const Face& f : b.facets())
    family.push_back({{f.supporting.begin(), f.supporting.end()}, "normal " + vec_label(f.supporting), 1});
  for (const Face& f : b.faces_of_dim(static_cast<int>(n) - 2))
    family.push_back({{f.supporting.begin(), f.supporting.end()}, "edge " + vec_label(f.supporting), 2});

  SweepResult best;
  bool have = false;
  int best_kind = 0;
  std::uint64_t label = 1;
  for (const auto& [exps, name, kind] : family) {
    Rng rng(mix_seed(seed, label++));
    MonomialPath path;
    path.exponents = exps;
    std::optional<Rational> ratio;
    for (int attempt = 0; attempt < kRedraws; ++attempt) {
      path.coefficients.clear();
      for (std::size_t i = 0; i < n; ++i) path.coefficients.push_back(draw_path_coefficient(rng));
      const auto expected = expected_partial_orders(concrete, path);
      std::optional<std::int64_t> got;
      bool cancelled = false;
      for (std::size_t i = 0; i < n; ++i) {
        const auto ord = substituted_order(concrete.derivative(i), path);
        if (ord != expected[i]) cancelled = true;
        if (ord && (!got || *ord < *got)) got = ord;
      }
      ratio = got ? std::optional<Rational>(Rational(*got, path.order())) : std::nullopt;
      if (!cancelled) break;
    }
    ++best.paths_tried;
    if (!ratio) continue;
    const bool tie_wins = *ratio == best.bound && (kind < best_kind || (kind == best_kind && path_less(path, best.witness)));
    if (!have || *ratio > best.bound || tie_wins) {
      best_kind = kind;
      best.bound = *ratio;
      best.witness = path;
      best.witness_label = name;
      have = true;
    }
  }
  if (!have) throw CrossCheckFailure("every sweep path lies in the critical locus");
  return best;
}

// ----------------------------------------------------------- brute force

NewtonBoundary brute_force_boundary(const Support& s, std::size_t cap) {
  const std::size_t n = s.dimension();
  const std::vector<ExponentVector> pts = s.points();
  if (pts.size() > cap)
    throw PreconditionError("brute force boundary limited to " + std::to_string(cap) + " points, got " +
                            std::to_string(pts.size()));

  std::vector<IntVec> dirs;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.push_back(pts[j] - pts[i]);
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(IntVec::unit(n, i));

  std::set<IntVec> candidates;
  auto offer = [&](const IntVec& c) {
    const IntVec u = primitive(c);
    if (u.is_zero()) return;
    if (u.non_negative()) candidates.insert(u);
    if ((-u).non_negative()) candidates.insert(-u);
  };
  if (n == 2) {
    for (const IntVec& d : dirs) offer(IntVec{-d[1], d[0]});
  } else {
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const IntVec pair[2] = {dirs[i], dirs[j]};
        offer(generalized_cross(pair, 3));
      }
  }

  struct Facet {
    IntVec normal;
    std::set<ExponentVector> points;
  };
  std::vector<Facet> facets;
  for (const IntVec& u : candidates) {
    std::int64_t lo = 0;
    bool first = true;
    std::set<ExponentVector> argmin;
    for (const ExponentVector& p : pts) {
      const std::int64_t l = dot(u, p.vec());
      if (first || l < lo) {
        lo = l;
        argmin.clear();
        first = false;
      }
      if (l == lo) argmin.insert(p);
    }
    std::vector<IntVec> span;
    for (const ExponentVector& p : argmin) span.push_back(p - *argmin.begin());
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] == 0) span.push_back(IntVec::unit(n, i));
    if (rank(span) == n - 1) facets.push_back({u, std::move(argmin)});
  }

  std::map<std::vector<ExponentVector>, IntVec> found;
  std::vector<ExponentVector> T;
  auto close = [&] {
    std::optional<std::set<ExponentVector>> closure;
    IntVec sum = IntVec::zero(n);
    std::vector<bool> positive(n, false);
    for (const Facet& f : facets) {
      if (!std::all_of(T.begin(), T.end(), [&](const ExponentVector& p) { return f.points.count(p) != 0; })) continue;
      if (!closure) {
        closure = f.points;
      } else {
        std::set<ExponentVector> meet;
        std::set_intersection(closure->begin(), closure->end(), f.points.begin(), f.points.end(),
                              std::inserter(meet, meet.begin()));
        closure = std::move(meet);
      }
      sum = sum + f.normal;
      for (std::size_t i = 0; i < n; ++i) positive[i] = positive[i] || f.normal[i] > 0;
    }
    if (!closure || std::find(positive.begin(), positive.end(), false) != positive.end()) return;
    found.emplace(std::vector<ExponentVector>(closure->begin(), closure->end()), primitive(sum));
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    T = {pts[i]};
    close();
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      T = {pts[i], pts[j]};
      close();
      if (n < 3) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        T = {pts[i], pts[j], pts[k]};
        close();
      }
    }
  }

  std::vector<FaceSeed> seeds;
  for (auto& [points, v] : found) seeds.push_back({points, WeightVector(v)});
  return NewtonBoundary(s, std::move(seeds));
}

}  // namespace newtloj
