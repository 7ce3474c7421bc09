#pragma once

// Compact faces of the Newton polyhedron conv(supp f) + R^n_+.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newtloj/lattice.hpp"
#include "newtloj/polynomial.hpp"

namespace newtloj {

/// Data attached to a top-dimensional compact face: its supporting
/// hyperplane <normal, x> = level and where that hyperplane meets the axes.
struct FacetData {
  WeightVector normal;              // strictly positive, primitive
  std::int64_t level = 0;
  std::vector<Rational> intercepts;  // level / normal[i], one per axis
  Rational m;                        // max of intercepts

  friend bool operator==(const FacetData&, const FacetData&) = default;
};

struct Face {
  int id = -1;
  int dim = 0;
  std::vector<ExponentVector> vertices;  // ascending
  std::vector<ExponentVector> points;    // all support points on the face, ascending
  // Primitive, strictly positive, and in the relative interior of the
  // face's normal cone, so its minimizers over the support are exactly
  // `points`. Equals facet->normal for top-dimensional faces.
  WeightVector supporting;
  std::int64_t level = 0;
  std::optional<FacetData> facet;

  bool has_point(const ExponentVector& p) const;
  bool has_vertex(const ExponentVector& p) const;
  /// Some vertex has coordinate 0 along `axis` (the face touches the
  /// coordinate hyperplane orthogonal to `axis`).
  bool touches_hyperplane(Axis axis) const;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Input record for NewtonBoundary; ids, vertices and facet data are
/// derived by the constructor.
struct FaceSeed {
  std::vector<ExponentVector> points;
  WeightVector supporting;
};

class NewtonBoundary {
 public:
  /// Orders the faces by (dim, vertex list), assigns ids, derives vertex
  /// lists, facet data and adjacency. Throws CrossCheckFailure when the
  /// seeds do not describe a consistent face lattice.
  NewtonBoundary(Support support, std::vector<FaceSeed> seeds);

  std::size_t dimension() const noexcept { return support_.dimension(); }
  const Support& support() const noexcept { return support_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::span<const Face> faces_of_dim(int k) const;
  /// Faces of dimension n-1.
  std::span<const Face> facets() const { return faces_of_dim(static_cast<int>(dimension()) - 1); }
  std::span<const Face> edges() const { return faces_of_dim(1); }
  std::span<const Face> vertex_faces() const { return faces_of_dim(0); }
  /// Vertices of the polyhedron, ascending.
  std::vector<ExponentVector> vertices() const;

  const Face& face(int id) const;
  /// Ids of the edges contained in face `id`.
  const std::vector<int>& edges_of(int id) const { return edges_of_.at(checked(id)); }
  /// Ids of the top-dimensional faces containing face `id`.
  const std::vector<int>& facets_containing(int id) const { return facets_containing_.at(checked(id)); }

  /// Same faces with the same data, ids included.
  friend bool operator==(const NewtonBoundary& a, const NewtonBoundary& b) {
    return a.dimension() == b.dimension() && a.faces_ == b.faces_;
  }

 private:
  std::size_t checked(int id) const;

  Support support_;
  std::vector<Face> faces_;
  std::vector<std::size_t> dim_begin_;  // offsets into faces_, size n+1
  std::vector<std::vector<int>> edges_of_;
  std::vector<std::vector<int>> facets_containing_;
};

/// Dual construction: for every affinely independent set of at most n
/// non-dominated support points, the smallest face containing it is read
/// off a relative-interior vector of its normal cone.
NewtonBoundary build_boundary(const Support& s);

/// Throws PreconditionError for an unknown id.
const Face& face_data(const NewtonBoundary& b, int face_id);

struct ConvenienceFlags {
  bool convenient = false;         // some pure power of the variable
  bool nearly_convenient = false;  // pure power, or power times another variable
};

/// One entry per variable.
std::vector<ConvenienceFlags> convenience_flags(const Support& s);

/// The compact face on which w attains its minimum over the support.
const Face& supported_face(const NewtonBoundary& b, const WeightVector& w);

/// Points of the support not dominated (componentwise >=) by another point.
std::vector<ExponentVector> minimal_points(std::span<const ExponentVector> pts);

}  // namespace newtloj
