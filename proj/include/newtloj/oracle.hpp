#pragma once

// Independent checks: monomial-path lower bounds for the exponent and a
// definition-level reconstruction of the Newton boundary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newtloj/lattice.hpp"
#include "newtloj/newton_boundary.hpp"
#include "newtloj/polynomial.hpp"

namespace newtloj {

/// z_i = c_i t^{v_i}; an absent exponent means z_i is identically zero.
struct MonomialPath {
  std::vector<std::optional<std::int64_t>> exponents;
  std::vector<Rational> coefficients;

  /// At least one finite exponent, finite exponents >= 1, non-zero
  /// coefficients. Throws PreconditionError otherwise.
  void validate() const;
  std::int64_t order() const;  // min of the finite exponents
  std::string str() const;

  friend bool operator==(const MonomialPath&, const MonomialPath&) = default;
};

/// Lexicographic on exponents (infinite last), then on coefficients.
bool path_less(const MonomialPath& a, const MonomialPath& b);

MonomialPath axis_path(std::size_t dimension, Axis axis, const Rational& c = 1);

struct PathOrders {
  std::optional<std::int64_t> gradient_order;  // nullopt: gradient vanishes identically on the path
  std::int64_t path_order = 0;
  std::optional<Rational> ratio;  // nullopt when gradient_order is
};

/// Exact orders of grad f along the path. Generic coefficients of the
/// support are instantiated from `seed`.
PathOrders path_orders(const Support& s, const MonomialPath& path, std::uint64_t seed = 0);

/// Order each partial derivative would have without cancellation: min of
/// <v, e> over its monomials avoiding infinite variables.
std::vector<std::optional<std::int64_t>> expected_partial_orders(const Support& s, const MonomialPath& path);

struct SweepResult {
  Rational bound;
  MonomialPath witness;
  std::string witness_label;  // "axis x", "normal (3,4,4)", "edge (4,2,1)"
  std::size_t paths_tried = 0;
};

/// Maximum ratio over the axis paths, the normals of the top-dimensional
/// faces and the supporting vectors of the codimension-2 faces, each with
/// seeded generic coefficients. A lower bound for the exponent.
SweepResult sweep_lower_bound(const Support& s, std::uint64_t seed);

inline constexpr std::size_t kBruteForceCap = 16;

/// Boundary rebuilt from facet normals found by cross products of point
/// differences and unit vectors. Throws PreconditionError above `cap`
/// support points.
NewtonBoundary brute_force_boundary(const Support& s, std::size_t cap = kBruteForceCap);

}  // namespace newtloj
