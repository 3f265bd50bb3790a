#pragma once

// Weight vectors of weighted projective spaces and the lattices attached to
// them: the monomial lattice points of the degree-w simplex and the quotient
// lattice N = Z^{d+1} / Z·w with its generators v_0, ..., v_d.

#include "cymirror/exact.hpp"
#include "cymirror/polytope.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cymirror {

class WeightVector {
public:
  /// Throws std::invalid_argument unless there are at least 3 weights, all
  /// positive.
  explicit WeightVector(std::vector<std::uint64_t> weights);

  /// "w0,w1,...,wd"; spaces around entries are tolerated. Throws ParseError.
  static WeightVector parse(std::string_view text);

  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::uint64_t operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }
  std::size_t dim() const { return weights_.size() - 1; }
  std::uint64_t degree() const { return degree_; }
  /// q_i = w_i / w.
  Rational charge(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.weights_ <=> b.weights_; }

private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t degree_ = 0;
};

/// A subset J of {0, ..., d} stored as a bitmask.
class SubsetMask {
public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}
  static SubsetMask of(std::initializer_list<std::size_t> members);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Complement inside {0, ..., n-1}.
  constexpr SubsetMask complement(std::size_t n) const { return SubsetMask(~bits_ & ((1u << n) - 1u)); }
  std::vector<std::size_t> members() const;

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

private:
  std::uint32_t bits_ = 0;
};

struct WeightFlags {
  bool well_formed = false;
  bool gorenstein = false;
};

/// well-formed: every d of the d+1 weights are coprime. gorenstein: every
/// weight divides the degree.
WeightFlags weight_flags(const WeightVector& w);

/// n_J = gcd(w, w_j : j in J); n_∅ = w.
std::uint64_t subset_gcd(const WeightVector& w, SubsetMask j);

/// Exponent vectors u >= 0 with sum w_i u_i = w, sorted lexicographically.
/// Throws DomainError when there are more than `limit` of them.
std::vector<IntPoint> newton_points(const WeightVector& w, std::size_t limit = 10'000'000);

/// The Newton points that are not the midpoint of two other Newton points
/// along an exchange direction (w_j e_i - w_i e_j) / gcd. Every vertex of the
/// Newton polytope is among them.
std::vector<IntPoint> newton_vertex_candidates(const WeightVector& w);

struct MirrorLattice {
  /// v_0, ..., v_d in Z^d.
  std::vector<IntVector> generators;
  /// d x (d+1) matrix taking a degree-zero exponent vector u (sum w_i u_i = 0)
  /// to m in the dual lattice M with <m, v_i> = u_i.
  IntMatrix to_m;

  std::size_t dim() const { return to_m.rows(); }
  /// to_m applied to a degree-zero vector; rational inputs give rational points.
  RatPoint m_coordinates(std::span<const Rational> u) const;
  IntPoint m_coordinates(std::span<const Integer> u) const;
};

/// Generators of N from a Smith normal form of the relation row w. When
/// w_0 = 1 the basis is changed so that v_i = e_i for i >= 1 and
/// v_0 = -(w_1, ..., w_d). Throws DomainError unless w is well-formed.
MirrorLattice mirror_lattice(const WeightVector& w);

/// conv(v_0, ..., v_d) in N.
Polytope mirror_simplex(const MirrorLattice& lattice);

/// The rational simplex {m : <m, v_i> >= -1} in M, the shifted degree-w
/// simplex. Its lattice points are served from the Newton points.
Polytope dual_simplex(const WeightVector& w, const MirrorLattice& lattice);

/// conv(Newton points) - (1, ..., 1) in M coordinates. May be
/// lower-dimensional when w lacks the IP property.
Polytope newton_polytope(const WeightVector& w, const MirrorLattice& lattice);

}  // namespace cymirror
