#pragma once

// Combinatorial isolatedness check and the Lojasiewicz exponent of a
// non-degenerate singularity read off its Newton boundary.

#include <optional>
#include <string>
#include <vector>

#include "newtloj/face_classify.hpp"
#include "newtloj/lattice.hpp"
#include "newtloj/newton_boundary.hpp"
#include "newtloj/polynomial.hpp"

namespace newtloj {

struct Violation {
  enum class Kind { NotSingularAtZero, ConstantTermPresent, NotNearlyConvenient, MissingCoordinatePlane };
  Kind kind;
  // NotNearlyConvenient: the axis. MissingCoordinatePlane: the axis normal
  // to the plane (Z for the plane 0xy).
  std::optional<Axis> axis;

  std::string str() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct IsolatedVerdict {
  bool ok = true;
  std::vector<Violation> violations;

  std::string str() const;
};

/// In 3D: no constant or linear term, nearly convenient along every axis,
/// and points in each coordinate plane. In 2D only the first two checks.
IsolatedVerdict check_isolated(const Support& s);

enum class CaseKind { Generic, HyperbolicEdge, TwoDimDefault };
std::string to_string(CaseKind k);
CaseKind case_kind_from_string(std::string_view s);

struct ExponentCase {
  CaseKind kind = CaseKind::Generic;
  std::optional<Axis> axis;  // HyperbolicEdge only
  std::int64_t alpha = 0;    // HyperbolicEdge only

  friend bool operator==(const ExponentCase&, const ExponentCase&) = default;
};

struct Attaining {
  int face_id;
  Axis axis;

  friend bool operator==(const Attaining&, const Attaining&) = default;
  friend auto operator<=>(const Attaining&, const Attaining&) = default;
};

struct FaceEntry {
  Face face;
  FaceClassification classification;  // empty sets below the top dimension

  friend bool operator==(const FaceEntry&, const FaceEntry&) = default;
};

struct ExponentReport {
  std::size_t dimension = 3;
  Rational exponent;
  ExponentCase exponent_case;
  std::vector<Attaining> attaining;  // sorted; front() is canonical
  Integer sufficiency_degree;
  std::vector<FaceEntry> face_table;

  friend bool operator==(const ExponentReport&, const ExponentReport&) = default;
};

/// floor(L) + 1. Throws PreconditionError for L < 1.
Integer sufficiency_degree(const Rational& L);

/// Throws NotIsolatedError when check_isolated fails, MalformedBoundaryError
/// when every 2-face is exceptional and there is no unique hyperbolic edge.
ExponentReport lojasiewicz_3d(const Support& s);
ExponentReport lojasiewicz_3d(const NewtonBoundary& b);

/// Plane curves: max over non-exceptional segments of m(S) - 1, else 1.
ExponentReport lojasiewicz_2d(const Support& s);

/// Dispatches on the support dimension.
ExponentReport lojasiewicz(const Support& s);

struct ProximateRoute {
  Rational exponent;
  std::array<int, 3> face_ids{};        // chosen proximate face per axis
  std::array<Rational, 3> intercepts;  // its intercept on that axis
};

/// One proximate face per axis (smallest id), exponent = max of their axis
/// intercepts - 1. Throws NoProximateFaceError naming the first axis
/// without a proximate face.
ProximateRoute proximate_route(const NewtonBoundary& b);
Rational exponent_via_proximate(const Support& s);

}  // namespace newtloj
