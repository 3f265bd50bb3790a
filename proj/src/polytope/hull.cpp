// Beneath-beyond convex hull over exact integers.
//
// Points are first moved into intrinsic coordinates (a subset of the axes on
// which the affine hull projects injectively) and scaled to integers. The
// placing triangulation of the boundary is grown one point at a time; its
// simplices are then merged by supporting hyperplane into the true facets.

#include "cymirror/errors.hpp"
#include "cymirror/polytope.hpp"
#include "face_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cymirror {
namespace {

using Index = std::uint32_t;

struct Frame {
  RatPoint base;
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> spanning;  // affinely independent input points, base first
};

// Reduces v against the echelon rows; v becomes zero iff it lies in their span.
void reduce(RatVector& v, const std::vector<RatVector>& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational f = v[pivots[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (rows[r][j] != 0) v[j] -= f * rows[r][j];
  }
}

Frame affine_frame(const std::vector<RatPoint>& pts) {
  Frame fr;
  fr.base = pts[0];
  fr.spanning.push_back(0);
  const std::size_t n = fr.base.size();
  for (std::size_t i = 1; i < pts.size() && fr.rows.size() < n; ++i) {
    RatVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = pts[i][j] - fr.base[j];
    reduce(v, fr.rows, fr.pivots);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (it == v.end()) continue;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    const Rational lead = v[c];
    for (auto& x : v) x /= lead;
    fr.rows.push_back(std::move(v));
    fr.pivots.push_back(c);
    fr.spanning.push_back(i);
  }
  return fr;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Simplex {
  std::vector<Index> verts;  // sorted
  IntVector normal;
  Integer offset;  // inside: <normal, x> + offset >= 0
  bool alive = true;
};

class BeneathBeyond {
public:
  BeneathBeyond(const std::vector<IntVector>& pts, std::size_t k) : pts_(pts), k_(k) {}

  void run(const std::vector<std::size_t>& spanning) {
    centroid_.assign(k_, Integer(0));
    for (auto i : spanning)
      for (std::size_t j = 0; j < k_; ++j) centroid_[j] += pts_[i][j];
    for (std::size_t omit = 0; omit < spanning.size(); ++omit) {
      std::vector<Index> f;
      for (std::size_t t = 0; t < spanning.size(); ++t)
        if (t != omit) f.push_back(static_cast<Index>(spanning[t]));
      add(std::move(f));
    }
    std::set<std::size_t> used(spanning.begin(), spanning.end());
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (!used.count(i)) insert(static_cast<Index>(i));
  }

  const std::vector<Simplex>& simplices() const { return simplices_; }

private:
  void add(std::vector<Index> verts) {
    std::sort(verts.begin(), verts.end());
    Simplex s;
    s.normal = normal_of(verts);
    s.offset = -dot(s.normal, pts_[verts[0]]);
    Integer side = dot(s.normal, centroid_) + Integer(static_cast<long>(k_ + 1)) * s.offset;
    if (side == 0) throw std::logic_error("hull: degenerate simplex");
    if (side < 0) {
      for (auto& c : s.normal) c = -c;
      s.offset = -s.offset;
    }
    s.verts = std::move(verts);
    simplices_.push_back(std::move(s));
  }

  IntVector normal_of(const std::vector<Index>& verts) const {
    const std::size_t m = k_ - 1;
    IntVector n(k_);
    for (std::size_t omit = 0; omit < k_; ++omit) {
      IntMatrix minor(m, m);
      for (std::size_t r = 0; r < m; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < k_; ++c) {
          if (c == omit) continue;
          minor(r, cc++) = pts_[verts[r + 1]][c] - pts_[verts[0]][c];
        }
      }
      n[omit] = determinant(minor);
      if (omit % 2 == 1) n[omit] = -n[omit];
    }
    Integer g = content(n);
    if (g == 0) throw std::logic_error("hull: affinely dependent facet");
    for (auto& c : n) c /= g;
    return n;
  }

  void insert(Index p) {
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < simplices_.size(); ++f) {
      const Simplex& s = simplices_[f];
      if (s.alive && dot(s.normal, pts_[p]) + s.offset < 0) visible.push_back(f);
    }
    if (visible.empty()) return;
    std::map<std::vector<Index>, int> ridges;
    for (auto f : visible) {
      const auto& v = simplices_[f].verts;
      for (std::size_t omit = 0; omit < v.size(); ++omit) {
        std::vector<Index> r;
        r.reserve(v.size() - 1);
        for (std::size_t t = 0; t < v.size(); ++t)
          if (t != omit) r.push_back(v[t]);
        ++ridges[std::move(r)];
      }
      simplices_[f].alive = false;
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<Index> f = ridge;
      f.push_back(p);
      add(std::move(f));
    }
  }

  const std::vector<IntVector>& pts_;
  std::size_t k_;
  IntVector centroid_;  // sum of the initial simplex vertices, (k+1) times its centroid
  std::vector<Simplex> simplices_;
};

}  // namespace

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (!is_integer(c)) return false;
  return true;
}

std::vector<std::size_t> Polytope::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> Polytope::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dim_, 0)), 0);
  for (const auto& face : faces_)
    if (face.dim < dim_) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

std::optional<std::size_t> Polytope::find_face(std::span<const std::size_t> sorted_vertices) const {
  auto it = face_lookup_.find(std::vector<std::size_t>(sorted_vertices.begin(), sorted_vertices.end()));
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

RatVector Polytope::intrinsic(std::span<const Rational> x) const {
  RatVector out;
  out.reserve(axes_.size());
  for (auto a : axes_) out.push_back(x[a]);
  return out;
}

bool Polytope::in_affine_hull(std::span<const Rational> x) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("point has wrong dimension");
  if (full_dimensional()) return true;
  RatVector v(ambient_dim_);
  for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] = x[j] - base_point_[j];
  reduce(v, direction_rows_, pivots_);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

namespace {

Rational evaluate(const Facet& f, const RatVector& y) {
  Rational s = f.offset;
  for (std::size_t j = 0; j < y.size(); ++j) s += f.normal[j] * y[j];
  return s;
}

}  // namespace

bool Polytope::contains(std::span<const Rational> x) const {
  if (!in_affine_hull(x)) return false;
  if (dim_ == 0) return std::equal(x.begin(), x.end(), vertices_[0].begin());
  const RatVector y = intrinsic(x);
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return evaluate(f, y) >= 0; });
}

bool Polytope::contains_in_interior(std::span<const Rational> x) const {
  if (!in_affine_hull(x)) return false;
  if (dim_ == 0) return std::equal(x.begin(), x.end(), vertices_[0].begin());
  const RatVector y = intrinsic(x);
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return evaluate(f, y) > 0; });
}

Polytope Polytope::with_lattice_source(LatticeSource source) const {
  Polytope p = *this;
  p.lattice_source_ = std::move(source);
  return p;
}

bool Polytope::same_vertices(const Polytope& other) const {
  auto a = vertices_;
  auto b = other.vertices_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Polytope hull_with_faces(std::span<const RatPoint> points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  const std::size_t n = points[0].size();
  std::vector<RatPoint> pts;
  {
    std::set<RatPoint> seen;
    for (const auto& p : points) {
      if (p.size() != n) throw std::invalid_argument("points of different dimensions");
      if (seen.insert(p).second) pts.push_back(p);
    }
  }

  Polytope out;
  out.ambient_dim_ = n;
  Frame fr = affine_frame(pts);
  const std::size_t k = fr.rows.size();
  out.dim_ = static_cast<int>(k);
  out.base_point_ = fr.base;
  out.pivots_ = fr.pivots;
  out.axes_ = fr.pivots;
  std::sort(out.axes_.begin(), out.axes_.end());
  out.direction_rows_ = fr.rows;

  if (k == 0) {
    out.vertices_ = {pts[0]};
    out.faces_ = {Face{0, {0}, {}, {}}};
    out.face_lookup_[{0}] = 0;
    return out;
  }

  // Scaled integer intrinsic coordinates.
  std::vector<RatVector> proj;
  proj.reserve(pts.size());
  Integer scale = 1;
  for (const auto& p : pts) {
    proj.push_back(out.intrinsic(p));
    Integer l = common_denominator(proj.back());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
  }
  std::vector<IntVector> ipts;
  ipts.reserve(pts.size());
  for (const auto& y : proj) {
    IntVector v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = Rational(y[j] * scale).get_num();
    ipts.push_back(std::move(v));
  }

  BeneathBeyond bb(ipts, k);
  bb.run(fr.spanning);

  std::map<std::pair<IntVector, Integer>, std::set<Index>> planes;
  for (const auto& s : bb.simplices())
    if (s.alive) planes[{s.normal, s.offset}].insert(s.verts.begin(), s.verts.end());

  std::set<Index> candidates;
  for (const auto& [key, verts] : planes) candidates.insert(verts.begin(), verts.end());

  // A candidate is a vertex iff the normals of the facets through it have rank k.
  std::vector<std::size_t> old_to_new(pts.size(), SIZE_MAX);
  for (auto c : candidates) {
    std::vector<RatVector> normals;
    for (const auto& [key, verts] : planes)
      if (dot(key.first, ipts[c]) + key.second == 0) normals.push_back(to_rational(key.first));
    if (rank(normals) == k) {
      old_to_new[c] = out.vertices_.size();
      out.vertices_.push_back(pts[c]);
    }
  }

  std::vector<std::vector<std::size_t>> facet_vertices;
  for (const auto& [key, verts] : planes) {
    Facet f;
    f.normal = key.first;
    f.offset = make_rational(key.second, scale);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (old_to_new[i] != SIZE_MAX && dot(key.first, ipts[i]) + key.second == 0)
        f.vertices.push_back(old_to_new[i]);
    std::sort(f.vertices.begin(), f.vertices.end());
    facet_vertices.push_back(f.vertices);
    out.facets_.push_back(std::move(f));
  }

  out.faces_ = detail::build_face_lattice(static_cast<int>(k), facet_vertices, out.vertices_.size());
  for (std::size_t i = 0; i < out.faces_.size(); ++i) out.face_lookup_[out.faces_[i].vertices] = i;
  return out;
}

Polytope hull_with_faces(std::span<const IntPoint> points) {
  std::vector<RatPoint> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return hull_with_faces(std::span<const RatPoint>(pts));
}

}  // namespace cymirror
