#pragma once

// Orbifold and stringy Euler numbers: Vafa's double sum, its subset-gcd
// form, the closed form for the mirror simplex, the general formula over
// faces of an almost pseudoreflexive polytope, the reflexive formula, the K3
// identity, and the mirror test tying them together.

#include "cymirror/exact.hpp"
#include "cymirror/polytope.hpp"
#include "cymirror/wps.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cymirror {

/// (1/w) sum_{l,r=0}^{w-1} prod_{i : w | l w_i and w | r w_i} (1 - w/w_i).
Rational vafa_double_sum(const WeightVector& w);

struct SubsetSum {
  Rational value;
  /// partials[c]: signed terms with |J| = c, before division by w.
  std::vector<Rational> partials;
};

/// (1/w) sum_{|J| <= d-1} (-1)^|J| n_J^2 prod_{j in J} w/w_j.
/// Throws DomainError unless w is well-formed.
SubsetSum vafa_subset_sum(const WeightVector& w);

/// (1/w) sum_{|J| >= 2} (-1)^|J| n_{J̄}^2 prod_{i in J̄} w/w_i.
/// Throws DomainError unless w has the IP property.
Rational stringy_mirror_closed(const WeightVector& w);

/// sum_{k=1}^{d} (-1)^{k-1} sum_{dim θ = k} Vol_k(θ) Vol_{d-k}(σ_θ ∩ Δ^*).
/// Throws DomainError unless Δ is canonical with [Δ^*] canonical.
Rational stringy_polytope(const Polytope& delta);
Rational stringy_polytope(const MirrorLattice& lattice);

/// sum_{k=1}^{d-2} (-1)^{k-1} sum_{dim θ = k} Vol_k(θ) Vol_{d-k-1}(θ^*).
/// Throws DomainError unless Δ is reflexive.
Rational stringy_reflexive(const Polytope& delta);

/// 24 - (Vol_3(Δ) - sum_facets Vol_2(θ)/n_θ + sum_edges Vol_1(θ) Vol_2(σ_θ ∩ Δ^*)).
/// Throws DomainError unless Δ is 3-dimensional and almost pseudoreflexive.
Rational k3_identity(const Polytope& delta);

struct EulerReport {
  explicit EulerReport(WeightVector w) : weights(std::move(w)) {}

  WeightVector weights;
  bool well_formed = false;
  bool gorenstein = false;
  bool ip = false;
  bool transverse = false;
  Rational chi_orb_formula;
  std::optional<Rational> chi_str_mirror;
  bool integral = false;
  bool methods_agree = false;
  std::vector<std::string> notes;

  // Individual routes, kept for callers that want to show them.
  std::optional<Rational> chi_orb_subset;
  std::optional<Rational> chi_str_polytope;
  std::optional<Rational> chi_newton_reflexive;
};

EulerReport mirror_test(const WeightVector& w);

}  // namespace cymirror
