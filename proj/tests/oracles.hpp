#pragma once

// Test-side oracles written from the definitions, sharing no code with the
// library beyond the number types and the parser output.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "newtloj/lattice.hpp"
#include "newtloj/polynomial.hpp"

namespace oracle {

using newtloj::Rational;
using Pt = std::vector<long long>;

inline std::vector<Pt> to_pts(const newtloj::Support& s) {
  std::vector<Pt> out;
  for (const auto& e : s.points()) out.push_back(Pt(e.begin(), e.end()));
  return out;
}

inline long long gcd_all(const Pt& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline long long ip(const Pt& a, const Pt& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Facet {
  Pt normal;
  long long level;
  std::vector<Pt> points;  // sorted
};

/// Compact top-dimensional faces: every strictly positive primitive normal
/// of a hyperplane through n support points that leaves all support points
/// on its non-negative side, keyed by normal.
inline std::map<Pt, Facet> facets(const std::vector<Pt>& pts) {
  const std::size_t n = pts.front().size();
  std::map<Pt, Facet> out;
  auto consider = [&](Pt u) {
    const long long g = gcd_all(u);
    if (g == 0) return;
    for (long long& x : u) x /= g;
    if (u[0] < 0)
      for (long long& x : u) x = -x;
    for (long long x : u)
      if (x <= 0) return;
    long long lo = ip(u, pts.front());
    for (const Pt& p : pts) lo = std::min(lo, ip(u, p));
    Facet f{u, lo, {}};
    for (const Pt& p : pts)
      if (ip(u, p) == lo) f.points.push_back(p);
    std::sort(f.points.begin(), f.points.end());
    // The minimizers must span a hyperplane, not just a lower-dimensional set.
    bool spans = false;
    if (n == 2) {
      spans = f.points.size() >= 2;
    } else {
      for (std::size_t i = 1; i < f.points.size() && !spans; ++i)
        for (std::size_t j = i + 1; j < f.points.size() && !spans; ++j) {
          Pt a(3), b(3);
          for (int k = 0; k < 3; ++k) {
            a[k] = f.points[i][k] - f.points[0][k];
            b[k] = f.points[j][k] - f.points[0][k];
          }
          spans = a[1] * b[2] - a[2] * b[1] != 0 || a[2] * b[0] - a[0] * b[2] != 0 || a[0] * b[1] - a[1] * b[0] != 0;
        }
    }
    if (spans) out.emplace(u, f);
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Pt a(n);
      for (std::size_t k = 0; k < n; ++k) a[k] = pts[j][k] - pts[i][k];
      if (n == 2) {
        consider({-a[1], a[0]});
        continue;
      }
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        Pt b(3);
        for (int k = 0; k < 3; ++k) b[k] = pts[l][k] - pts[i][k];
        consider({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
      }
    }
  return out;
}

/// Pyramid test: all face points but one lie in {x_j = 0}, and that apex is
/// x_j * x_i^m with m >= 1.
inline std::set<std::size_t> exceptional_axes(const std::vector<Pt>& face_points) {
  const std::size_t n = face_points.front().size();
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Pt> off;
    for (const Pt& p : face_points)
      if (p[j] != 0) off.push_back(p);
    if (off.size() != 1 || off[0][j] != 1) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || off[0][i] < 1) continue;
      bool rest_zero = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && off[0][k] != 0) rest_zero = false;
      if (rest_zero) out.insert(i);
    }
  }
  return out;
}

/// Exponent by the face formula, with the hyperbolic-edge fallback found by
/// scanning support pairs {z_i z_j, z_k^a} whose segment is a boundary edge.
inline std::optional<Rational> exponent(const newtloj::Support& s) {
  const std::vector<Pt> pts = to_pts(s);
  const std::size_t n = pts.front().size();
  std::optional<Rational> best;
  for (const auto& [u, f] : facets(pts)) {
    if (!exceptional_axes(f.points).empty()) continue;
    Rational m = 0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, Rational(f.level, u[i]));
    if (!best || m - 1 > *best) best = m - 1;
  }
  if (best) return best;
  if (n == 2) return Rational(1);
  // Hyperbolic edge {z_i z_j, z_k^a}: either the only two non-dominated
  // points, or a side of some compact 2-face polygon.
  std::vector<Pt> minimal;
  for (const Pt& p : pts) {
    bool dominated = false;
    for (const Pt& q : pts)
      if (q != p && q[0] <= p[0] && q[1] <= p[1] && q[2] <= p[2]) dominated = true;
    if (!dominated) minimal.push_back(p);
  }
  const auto all_facets = facets(pts);
  auto is_edge = [&](const Pt& p, const Pt& q) {
    if (minimal.size() == 2 && std::count(minimal.begin(), minimal.end(), p) && std::count(minimal.begin(), minimal.end(), q))
      return true;
    for (const auto& [u, f] : all_facets) {
      if (!std::count(f.points.begin(), f.points.end(), p) || !std::count(f.points.begin(), f.points.end(), q)) continue;
      int pos = 0, neg = 0;
      for (const Pt& r : f.points) {
        if (r == p || r == q) continue;
        Pt a(3), b(3);
        for (int k = 0; k < 3; ++k) {
          a[k] = q[k] - p[k];
          b[k] = r[k] - p[k];
        }
        const Pt c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        const long long side = ip(c, u);
        pos += side > 0;
        neg += side < 0;
      }
      if (pos == 0 || neg == 0) return true;
    }
    return false;
  };
  std::optional<Rational> found;
  int count = 0;
  for (const Pt& p : pts)
    for (const Pt& q : pts)
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
        if (!(p[i] == 1 && p[j] == 1 && p[k] == 0)) continue;
        if (!(q[i] == 0 && q[j] == 0 && q[k] >= 2)) continue;
        if (is_edge(p, q)) {
          ++count;
          found = Rational(q[k] - 1);
        }
      }
  if (count != 1) return std::nullopt;
  return found;
}

// --------------------------------------------------- expression evaluator

/// Evaluates polynomial text at a rational point, following the grammar
/// directly (no expansion into monomials).
class Evaluator {
 public:
  Evaluator(std::string_view text, std::vector<Rational> at) : t_(text), at_(std::move(at)) {}

  Rational run() {
    Rational v = sum();
    skip();
    if (i_ != t_.size()) throw std::runtime_error("trailing input");
    return v;
  }

 private:
  void skip() {
    while (i_ < t_.size() && t_[i_] == ' ') ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long long nat() {
    skip();
    if (i_ >= t_.size() || !isdigit(static_cast<unsigned char>(t_[i_]))) throw std::runtime_error("digit expected");
    long long v = 0;
    while (i_ < t_.size() && isdigit(static_cast<unsigned char>(t_[i_]))) v = v * 10 + (t_[i_++] - '0');
    return v;
  }
  Rational sum() {
    Rational v = 0;
    bool neg = eat('-');
    if (!neg) eat('+');
    v = neg ? Rational(-term()) : term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Rational term() {
    Rational v = factor();
    for (;;) {
      skip();
      if (eat('*')) v *= factor();
      else if (eat('/')) v /= Rational(nat());
      else if (i_ < t_.size() && (t_[i_] == '(' || isalpha(static_cast<unsigned char>(t_[i_])))) v *= factor();
      else return v;
    }
  }
  Rational factor() {
    skip();
    if (eat('(')) {
      Rational v = sum();
      if (!eat(')')) throw std::runtime_error(") expected");
      return v;
    }
    if (i_ < t_.size() && isalpha(static_cast<unsigned char>(t_[i_]))) {
      const char c = t_[i_++];
      const std::size_t var = static_cast<std::size_t>(c - 'x');
      if (var >= at_.size()) throw std::runtime_error("unknown variable");
      Rational v = 1;
      long long e = 1;
      if (eat('^')) e = nat();
      for (long long k = 0; k < e; ++k) v *= at_[var];
      return v;
    }
    return Rational(nat());
  }

  std::string_view t_;
  std::vector<Rational> at_;
  std::size_t i_ = 0;
};

inline Rational evaluate_support(const newtloj::Support& s, const std::vector<Rational>& at) {
  Rational total = 0;
  for (const auto& [e, c] : s.terms()) {
    Rational v = c ? *c : Rational(1);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (long long k = 0; k < e[i]; ++k) v *= at[i];
    total += v;
  }
  return total;
}

}  // namespace oracle
