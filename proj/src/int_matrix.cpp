#include "cymirror/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cymirror {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row echelon form in place; returns the rank and the determinant sign/product.
std::size_t eliminate(std::vector<RatVector>& a, Rational* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      d = -d;
    }
    d *= a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(std::span<const RatVector> rows) {
  std::vector<RatVector> a(rows.begin(), rows.end());
  for (const auto& r : a)
    if (r.size() != a.size()) throw std::invalid_argument("determinant of non-square matrix");
  if (a.empty()) return 1;
  Rational d;
  eliminate(a, &d);
  return d;
}

std::size_t rank(std::span<const RatVector> rows) {
  std::vector<RatVector> a(rows.begin(), rows.end());
  return eliminate(a, nullptr);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& e : diagonal())
    if (e != 0) ++r;
  return r;
}

namespace {

// Keeps A = U S V and the inverses in sync while S is reduced.
class SmithReducer {
public:
  explicit SmithReducer(const IntMatrix& a)
      : m_(a.rows()), n_(a.cols()) {
    f_.S = a;
    f_.U = f_.U_inv = IntMatrix::identity(m_);
    f_.V = f_.V_inv = IntMatrix::identity(n_);
  }

  SmithForm run() {
    const std::size_t steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!pivot_smallest(t)) break;
      reduce_at(t);
      if (f_.S(t, t) < 0) negate_row(t);
    }
    return std::move(f_);
  }

private:
  Integer& s(std::size_t r, std::size_t c) { return f_.S(r, c); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(s(i, c), s(j, c));
    for (std::size_t r = 0; r < m_; ++r) std::swap(f_.U(r, i), f_.U(r, j));
    for (std::size_t c = 0; c < m_; ++c) std::swap(f_.U_inv(i, c), f_.U_inv(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(s(r, i), s(r, j));
    for (std::size_t c = 0; c < n_; ++c) std::swap(f_.V(i, c), f_.V(j, c));
    for (std::size_t r = 0; r < n_; ++r) std::swap(f_.V_inv(r, i), f_.V_inv(r, j));
  }

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < n_; ++k) s(i, k) += c * s(j, k);
    for (std::size_t r = 0; r < m_; ++r) f_.U(r, j) -= c * f_.U(r, i);
    for (std::size_t k = 0; k < m_; ++k) f_.U_inv(i, k) += c * f_.U_inv(j, k);
  }

  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t r = 0; r < m_; ++r) s(r, i) += c * s(r, j);
    for (std::size_t k = 0; k < n_; ++k) f_.V(j, k) -= c * f_.V(i, k);
    for (std::size_t r = 0; r < n_; ++r) f_.V_inv(r, i) += c * f_.V_inv(r, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < n_; ++k) s(i, k) = -s(i, k);
    for (std::size_t r = 0; r < m_; ++r) f_.U(r, i) = -f_.U(r, i);
    for (std::size_t k = 0; k < m_; ++k) f_.U_inv(i, k) = -f_.U_inv(i, k);
  }

  // Moves the entry of least nonzero absolute value in the trailing block to (t, t).
  bool pivot_smallest(std::size_t t) {
    std::size_t br = m_, bc = n_;
    for (std::size_t r = t; r < m_; ++r)
      for (std::size_t c = t; c < n_; ++c) {
        if (s(r, c) == 0) continue;
        if (br == m_ || mpz_cmpabs(s(r, c).get_mpz_t(), s(br, bc).get_mpz_t()) < 0) {
          br = r;
          bc = c;
        }
      }
    if (br == m_) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      Integer q;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col(j, t, -q);
      }
      // Remainders are strictly smaller than the pivot; promote one and retry.
      bool dirty = false;
      for (std::size_t i = t + 1; i < m_ && !dirty; ++i)
        if (s(i, t) != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      for (std::size_t j = t + 1; j < n_ && !dirty; ++j)
        if (s(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      if (dirty) continue;
      // Divisibility d_t | every trailing entry.
      for (std::size_t i = t + 1; i < m_ && !dirty; ++i)
        for (std::size_t j = t + 1; j < n_; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row(t, i, Integer(1));
            dirty = true;
            break;
          }
      if (!dirty) return;
    }
  }

  std::size_t m_, n_;
  SmithForm f_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("smith_normal_form: empty matrix");
  if (a.is_zero()) throw std::invalid_argument("smith_normal_form: zero matrix");
  return SmithReducer(a).run();
}

std::vector<IntVector> saturated_basis(std::span<const RatVector> rows, std::size_t n) {
  std::vector<IntVector> scaled;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("saturated_basis: length mismatch");
    Integer l = common_denominator(r);
    IntVector v(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = r[i] * l;
      v[i] = x.get_num();
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero) scaled.push_back(std::move(v));
  }
  if (scaled.empty()) return {};
  SmithForm f = smith_normal_form(IntMatrix::from_rows(scaled));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < f.rank(); ++i) basis.push_back(f.V.row(i));
  return basis;
}

}  // namespace cymirror
