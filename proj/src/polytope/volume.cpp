#include "cymirror/errors.hpp"
#include "cymirror/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cymirror {
namespace {

using Simplices = std::vector<std::vector<std::size_t>>;

// Pulling triangulation: cone from the smallest vertex over the faces that
// miss it.
const Simplices& pull(const Polytope& p, std::size_t face, std::map<std::size_t, Simplices>& memo) {
  if (auto it = memo.find(face); it != memo.end()) return it->second;
  const Face& f = p.faces()[face];
  Simplices out;
  if (f.dim == 0) {
    out.push_back({f.vertices[0]});
  } else {
    const std::size_t apex = f.vertices[0];
    for (auto c : f.children) {
      const Face& g = p.faces()[c];
      if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
      for (const auto& s : pull(p, c, memo)) {
        std::vector<std::size_t> t = s;
        t.insert(t.begin(), apex);
        out.push_back(std::move(t));
      }
    }
  }
  return memo.emplace(face, std::move(out)).first->second;
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, std::size_t face) {
  if (face >= p.faces().size()) throw std::out_of_range("triangulate: no such face");
  std::map<std::size_t, Simplices> memo;
  return pull(p, face, memo);
}

Rational normalized_volume(const Polytope& p, std::size_t face) {
  if (face >= p.faces().size()) throw std::out_of_range("normalized_volume: no such face");
  const Face& f = p.faces()[face];
  if (f.dim == 0) return 1;
  const std::size_t n = p.ambient_dim();
  const auto k = static_cast<std::size_t>(f.dim);
  const auto& verts = p.vertices();

  std::vector<RatVector> directions;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) {
    RatVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = verts[f.vertices[i]][j] - verts[f.vertices[0]][j];
    directions.push_back(std::move(d));
  }
  const std::vector<IntVector> basis = saturated_basis(directions, n);
  if (basis.size() != k) throw std::logic_error("normalized_volume: face dimension mismatch");

  // Any k coordinates on which the lattice basis is independent measure
  // volumes up to the common factor |det(basis restricted to them)|.
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < n && cols.size() < k; ++c) {
    std::vector<std::size_t> trial = cols;
    trial.push_back(c);
    std::vector<RatVector> sub(k, RatVector(trial.size()));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t t = 0; t < trial.size(); ++t) sub[r][t] = basis[r][trial[t]];
    if (rank(sub) == trial.size()) cols = std::move(trial);
  }
  std::vector<RatVector> lattice_minor(k, RatVector(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t t = 0; t < k; ++t) lattice_minor[r][t] = basis[r][cols[t]];
  Rational unit = abs(determinant(lattice_minor));

  Rational total = 0;
  for (const auto& s : triangulate(p, face)) {
    std::vector<RatVector> m(k, RatVector(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t t = 0; t < k; ++t) m[r][t] = verts[s[r + 1]][cols[t]] - verts[s[0]][cols[t]];
    total += abs(determinant(m));
  }
  return total / unit;
}

Rational normalized_volume(const Polytope& p) { return normalized_volume(p, 0); }

Rational lattice_distance(const Polytope& p, std::size_t facet) {
  if (!p.full_dimensional()) throw DomainError("lattice distance needs a full-dimensional polytope");
  return p.facets().at(facet).offset;
}

}  // namespace cymirror
