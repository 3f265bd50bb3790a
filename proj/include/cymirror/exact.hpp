#pragma once

// Exact integer and rational arithmetic plus the small amount of integer
// linear algebra the lattice code needs (determinants, Smith normal form,
// saturated bases of rational subspaces).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cymirror {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q" with reduced terms, "n" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string(Rational). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// gcd(seed, extras...). gcd_fold(seed, {}) == seed.
std::uint64_t gcd_fold(std::uint64_t seed, std::span<const std::uint64_t> extras);
Integer gcd_fold(const Integer& seed, std::span<const Integer> extras);

/// Coordinate gcd of an integer vector (0 for the zero vector).
Integer content(std::span<const Integer> v);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> v);

RatVector to_rational(std::span<const Integer> v);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transposed() const;

  bool is_zero() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// Bareiss fraction-free determinant. Throws std::invalid_argument if not square.
Integer determinant(const IntMatrix& m);

/// Determinant of a square rational matrix given as rows.
Rational determinant(std::span<const RatVector> rows);

/// Rank of a list of rational vectors.
std::size_t rank(std::span<const RatVector> rows);

/// A = U * S * V with U, V unimodular and S diagonal, d1 | d2 | ... , d_i >= 0.
/// The inverses of U and V are returned as well.
struct SmithForm {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

/// Throws std::invalid_argument for an empty or all-zero matrix.
SmithForm smith_normal_form(const IntMatrix& a);

/// A Z-basis of span_Q(rows) ∩ Z^n. The rows may be rational and need not be
/// independent; the result has rank(rows) vectors.
std::vector<IntVector> saturated_basis(std::span<const RatVector> rows, std::size_t n);

}  // namespace cymirror
