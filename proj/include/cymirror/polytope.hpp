#pragma once

// Exact rational polytopes of small dimension: convex hulls with full face
// lattices, polar duals, lattice points, normalized volumes and the Fano
// classifications (canonical, reflexive, pseudoreflexive, almost
// pseudoreflexive).
//
// Coordinates are exact rationals. A polytope that does not span its
// ambient space keeps its vertices in ambient coordinates; its facet
// inequalities are then expressed in "intrinsic" coordinates, the projection
// onto a set of coordinate axes that is injective on the affine hull.

#include "cymirror/exact.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cymirror {

using RatPoint = RatVector;
using IntPoint = IntVector;

/// {x : <normal, x> >= -offset} in intrinsic coordinates. The normal is a
/// primitive integer covector.
struct Facet {
  IntVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;
};

struct Face {
  int dim = 0;
  std::vector<std::size_t> vertices;  // sorted indices into Polytope::vertices()
  std::vector<std::size_t> facets;    // sorted indices of facets containing the face
  std::vector<std::size_t> children;  // faces of dimension dim - 1 inside this one
};

class Polytope {
public:
  using LatticeSource = std::function<std::vector<IntPoint>()>;

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return static_cast<std::size_t>(dim_) == ambient_dim_; }
  bool is_lattice() const;

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// faces()[0] is the polytope itself; then facets, ridges, ..., vertices.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<std::size_t> faces_of_dim(int k) const;
  /// f_0, f_1, ..., f_{dim-1}.
  std::vector<std::size_t> f_vector() const;
  std::optional<std::size_t> find_face(std::span<const std::size_t> sorted_vertices) const;

  /// Coordinates used by the facet inequalities.
  RatVector intrinsic(std::span<const Rational> x) const;
  bool in_affine_hull(std::span<const Rational> x) const;
  bool contains(std::span<const Rational> x) const;
  /// Relative interior.
  bool contains_in_interior(std::span<const Rational> x) const;
  bool contains(std::span<const Integer> x) const { return contains(to_rational(x)); }
  bool contains_in_interior(std::span<const Integer> x) const {
    return contains_in_interior(to_rational(x));
  }

  /// Attaches a precomputed enumeration of the lattice points; used by
  /// lattice_points() instead of scanning.
  Polytope with_lattice_source(LatticeSource source) const;
  const LatticeSource& lattice_source() const { return lattice_source_; }

  /// Same vertex set, ignoring order.
  bool same_vertices(const Polytope& other) const;

private:
  friend Polytope hull_with_faces(std::span<const RatPoint> points);

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RatPoint> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_lookup_;
  RatPoint base_point_;                   // some point of the affine hull
  std::vector<RatVector> direction_rows_; // echelon basis of the parallel space
  std::vector<std::size_t> pivots_;       // pivot columns of direction_rows_
  std::vector<std::size_t> axes_;         // intrinsic coordinate axes, sorted
  LatticeSource lattice_source_;
};

/// Convex hull with vertex/facet incidences and the face lattice. Points may
/// be affinely dependent; the result then has dim() < ambient_dim().
/// Vertices keep the order of their first occurrence in the input.
/// Throws std::invalid_argument for empty input or ragged points.
Polytope hull_with_faces(std::span<const RatPoint> points);
Polytope hull_with_faces(std::span<const IntPoint> points);

/// Polar dual {y : <x, y> >= -1 for all x in P}. Vertex j of the dual is the
/// scaled normal of facet j of P. Throws DomainError unless P is
/// full-dimensional with the origin in its interior.
Polytope dual_polytope(const Polytope& p);

/// Index of the face of `dual` paired with face `face` of `p`.
std::size_t dual_face(const Polytope& p, const Polytope& dual, std::size_t face);

/// All integer points, sorted lexicographically.
std::vector<IntPoint> lattice_points(const Polytope& p);

/// conv(P ∩ Z^n). May be lower-dimensional. Throws DomainError if P has no
/// lattice points.
Polytope bracket(const Polytope& p);

/// Pulling triangulation of a face, as vertex index sets of size dim + 1.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, std::size_t face = 0);

/// k! * vol relative to the lattice parallel to the face's affine hull.
Rational normalized_volume(const Polytope& p, std::size_t face);
Rational normalized_volume(const Polytope& p);

/// Integral distance between facet f of a full-dimensional polytope and the
/// origin (the offset w.r.t. the primitive normal).
Rational lattice_distance(const Polytope& p, std::size_t facet);

/// sigma_theta ∩ P^*: the pyramid with apex 0 over the dual face of `face`.
/// For face 0 (P itself) this is the single point {0}.
Polytope normal_cone_section(const Polytope& p, std::size_t face);

struct FanoFlags {
  bool canonical = false;
  bool reflexive = false;
  bool pseudoreflexive = false;
  bool almost_pseudoreflexive = false;

  friend bool operator==(const FanoFlags&, const FanoFlags&) = default;
};

/// Interior lattice points of a lattice polytope.
std::vector<IntPoint> interior_lattice_points(const Polytope& p);

/// Throws DomainError if P is not a lattice polytope or has a unique interior
/// lattice point other than 0. A lower-dimensional P is reported as all false.
FanoFlags fano_classification(const Polytope& p);

/// One vertex per line, coordinates separated by single spaces.
std::string dump_vertices(const Polytope& p);

}  // namespace cymirror
