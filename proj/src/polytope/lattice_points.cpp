#include "cymirror/errors.hpp"
#include "cymirror/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cymirror {
namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

// Lattice points of a full-dimensional lattice simplex: one representative of
// each coset of Z^n modulo the edge lattice, reduced into the fundamental
// parallelepiped, kept when it lands in the simplex.
void simplex_points(const std::vector<IntPoint>& s, std::set<IntPoint>& out) {
  const std::size_t n = s[0].size();
  IntMatrix e(n, n);  // columns are the edges from s[0]
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) e(r, c) = s[c + 1][r] - s[0][r];
  for (const auto& v : s) out.insert(v);

  const SmithForm f = smith_normal_form(e);
  const std::vector<Integer> d = f.diagonal();
  // E^{-1} Z^n = V^{-1} S^{-1} Z^n, and the cosets are indexed by t_i mod d_i.
  std::vector<Integer> t(n, Integer(0));
  while (true) {
    RatVector lambda(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      const Rational ti = make_rational(t[i], d[i]);
      for (std::size_t r = 0; r < n; ++r) lambda[r] += f.V_inv(r, i) * ti;
    }
    Rational sum = 0;
    for (auto& l : lambda) {
      l = frac(l);
      sum += l;
    }
    if (sum <= 1) {
      IntPoint x = s[0];
      for (std::size_t r = 0; r < n; ++r) {
        Rational xr = x[r];
        for (std::size_t c = 0; c < n; ++c) xr += e(r, c) * lambda[c];
        if (!is_integer(xr)) throw std::logic_error("simplex_points: non-integral coset point");
        x[r] = xr.get_num();
      }
      out.insert(std::move(x));
    }
    std::size_t i = 0;
    while (i < n) {
      if (++t[i] < d[i]) break;
      t[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

void box_scan(const Polytope& p, std::vector<IntPoint>& out) {
  const std::size_t n = p.ambient_dim();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_of(mn);
    hi[j] = floor_of(mx);
    if (lo[j] > hi[j]) return;
  }
  IntPoint x = lo;
  while (true) {
    if (p.contains(std::span<const Integer>(x))) out.push_back(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      if (j == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<IntPoint> lattice_points(const Polytope& p) {
  if (p.lattice_source()) {
    auto pts = p.lattice_source()();
    std::sort(pts.begin(), pts.end());
    return pts;
  }
  std::vector<IntPoint> out;
  if (p.full_dimensional() && p.is_lattice() && p.dim() > 0) {
    std::vector<IntPoint> verts;
    for (const auto& v : p.vertices()) {
      IntPoint z;
      for (const auto& c : v) z.push_back(c.get_num());
      verts.push_back(std::move(z));
    }
    std::set<IntPoint> found;
    for (const auto& s : triangulate(p)) {
      std::vector<IntPoint> simplex;
      for (auto i : s) simplex.push_back(verts[i]);
      simplex_points(simplex, found);
    }
    out.assign(found.begin(), found.end());
    return out;
  }
  box_scan(p, out);
  return out;
}

std::vector<IntPoint> interior_lattice_points(const Polytope& p) {
  std::vector<IntPoint> out;
  for (auto& x : lattice_points(p))
    if (p.contains_in_interior(std::span<const Integer>(x))) out.push_back(std::move(x));
  return out;
}

}  // namespace cymirror
