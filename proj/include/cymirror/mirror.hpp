#pragma once

// Laurent polynomials on the torus of N and the Givental-Hori-Vafa mirror
// polynomial sum_i t^{v_i} of a weight vector.

#include "cymirror/exact.hpp"
#include "cymirror/polytope.hpp"
#include "cymirror/wps.hpp"

#include <string>
#include <vector>

namespace cymirror {

struct LaurentTerm {
  Rational coeff;
  IntVector exponent;

  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

class LaurentPolynomial {
public:
  explicit LaurentPolynomial(std::size_t variables) : variables_(variables) {}

  /// Adds c * t^e, merging with an existing term of the same exponent and
  /// dropping terms whose coefficient becomes zero. Terms keep insertion order.
  void add(const Rational& c, IntVector e);

  std::size_t variables() const { return variables_; }
  const std::vector<LaurentTerm>& terms() const { return terms_; }

  /// Convex hull of the exponent vectors. Throws DomainError when empty.
  Polytope newton_polytope() const;

private:
  std::size_t variables_;
  std::vector<LaurentTerm> terms_;
};

/// t^{v_0} + ... + t^{v_d} with v_i from mirror_lattice(w). For w_0 = 1 this
/// is 1/(t1^{w_1} ... td^{w_d}) + t1 + ... + td. Throws DomainError unless w
/// is well-formed.
LaurentPolynomial ghv_polynomial(const WeightVector& w);

/// "1/(t1*t2^6) + t1 + t2": terms in stored order, unit coefficients omitted.
std::string to_text(const LaurentPolynomial& f);

/// [{"coeff": "1", "exponents": [-1, -6]}, ...]
std::string to_json(const LaurentPolynomial& f);

}  // namespace cymirror
