#include "cymirror/errors.hpp"
#include "cymirror/polytope.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace cymirror;

namespace {

std::vector<IntPoint> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntPoint> out;
  for (const auto& r : rows) {
    IntPoint p;
    for (long c : r) p.emplace_back(c);
    out.push_back(std::move(p));
  }
  return out;
}

Polytope hull(const std::vector<IntPoint>& p) { return hull_with_faces(std::span<const IntPoint>(p)); }

std::vector<IntPoint> cube(std::size_t d) {
  std::vector<IntPoint> out;
  for (std::size_t mask = 0; mask < (1u << d); ++mask) {
    IntPoint p;
    for (std::size_t i = 0; i < d; ++i) p.emplace_back((mask >> i) & 1 ? 1 : -1);
    out.push_back(p);
  }
  return out;
}

std::vector<IntPoint> cross(std::size_t d) {
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      IntPoint p(d, Integer(0));
      p[i] = s;
      out.push_back(p);
    }
  return out;
}

std::vector<IntPoint> int_vertices(const Polytope& p) {
  std::vector<IntPoint> out;
  for (const auto& v : p.vertices()) {
    IntPoint z;
    for (const auto& c : v) z.push_back(c.get_num());
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_euler_relation(const Polytope& p) {
  long alt = 0;
  auto f = p.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
  long expected = 1 - ((p.dim() % 2) ? -1 : 1);
  EXPECT_EQ(alt, expected);
}

}  // namespace

TEST(Hull, SquareWithCenterDropsCenter) {
  auto p = hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}}));
  EXPECT_EQ(p.dim(), 2);
  auto q = hull(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
  EXPECT_EQ(q.vertices().size(), 4u);
  EXPECT_EQ(q.facets().size(), 4u);
  EXPECT_EQ(q.f_vector(), (std::vector<std::size_t>{4, 4}));
}

TEST(Hull, QuinticSimplexFVector) {
  auto p = hull(pts({{-1, -1, -1, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(p.f_vector(), (std::vector<std::size_t>{5, 10, 10, 5}));
  EXPECT_EQ(normalized_volume(p), 5);
}

TEST(Hull, CubeAndCrossPolytope) {
  for (std::size_t d = 2; d <= 5; ++d) {
    auto c = hull(cube(d));
    auto x = hull(cross(d));
    EXPECT_EQ(c.vertices().size(), 1u << d);
    EXPECT_EQ(c.facets().size(), 2 * d);
    EXPECT_EQ(x.facets().size(), 1u << d);
    expect_euler_relation(c);
    expect_euler_relation(x);
    Integer fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
    EXPECT_EQ(normalized_volume(c), Rational(fact * (Integer(1) << d)));
    EXPECT_EQ(normalized_volume(x), Rational(Integer(1) << d));
  }
  auto c3 = hull(cube(3));
  EXPECT_EQ(c3.f_vector(), (std::vector<std::size_t>{8, 12, 6}));
}

TEST(Hull, VerticesKeepInputOrder) {
  auto p = hull(pts({{3, 0}, {1, 1}, {0, 3}, {0, 0}}));
  ASSERT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(p.vertices()[0], (RatPoint{3, 0}));
  EXPECT_EQ(p.vertices()[1], (RatPoint{0, 3}));
  EXPECT_EQ(p.vertices()[2], (RatPoint{0, 0}));
}

TEST(Hull, FacetsAreTightAndPrimitive) {
  auto p = hull(pts({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}, {-1, -1, -1}, {1, 1, 1}}));
  for (const auto& f : p.facets()) {
    EXPECT_EQ(content(f.normal), 1);
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      Rational s = f.offset;
      for (std::size_t j = 0; j < 3; ++j) s += f.normal[j] * p.vertices()[v][j];
      bool on = std::binary_search(f.vertices.begin(), f.vertices.end(), v);
      EXPECT_GE(s, 0);
      EXPECT_EQ(s == 0, on);
    }
    EXPECT_GE(f.vertices.size(), 3u);
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    std::size_t tight = 0;
    for (const auto& f : p.facets()) tight += std::binary_search(f.vertices.begin(), f.vertices.end(), v);
    EXPECT_GE(tight, 3u);
  }
}

TEST(Hull, LowerDimensionalInput) {
  auto seg = hull(pts({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {-1, -1, -1}}));
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_FALSE(seg.full_dimensional());
  EXPECT_EQ(seg.vertices().size(), 2u);
  EXPECT_EQ(normalized_volume(seg), 3);
  EXPECT_TRUE(seg.contains(IntPoint{1, 1, 1}));
  EXPECT_FALSE(seg.contains(IntPoint{1, 1, 0}));
  EXPECT_FALSE(seg.contains(IntPoint{3, 3, 3}));
  EXPECT_TRUE(seg.contains_in_interior(IntPoint{0, 0, 0}));
  EXPECT_FALSE(seg.contains_in_interior(IntPoint{2, 2, 2}));
  EXPECT_EQ(lattice_points(seg).size(), 4u);

  auto tri = hull(pts({{1, 0, 0, 5}, {0, 1, 0, 5}, {0, 0, 1, 5}, {1, 1, -1, 5}}));
  EXPECT_EQ(tri.dim(), 2);
  EXPECT_EQ(tri.vertices().size(), 4u);
  expect_euler_relation(tri);

  auto point = hull(pts({{4, 4}, {4, 4}}));
  EXPECT_EQ(point.dim(), 0);
  EXPECT_EQ(normalized_volume(point), 1);
  EXPECT_EQ(point.faces().size(), 1u);

  EXPECT_THROW(hull(std::vector<IntPoint>{}), std::invalid_argument);
}

TEST(Hull, RandomLatticePolytopesMatchBruteForce) {
  std::mt19937 rng(2024);
  for (std::size_t k = 2; k <= 4; ++k) {
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<IntPoint> input(k + 2 + trial % 7);
      for (auto& p : input) {
        p.clear();
        for (std::size_t j = 0; j < k; ++j) p.emplace_back(coord(rng));
      }
      auto p = hull(input);
      if (p.dim() != static_cast<int>(k)) continue;

      auto oracle_facets = oracle::brute_force_facets(input);
      std::set<std::pair<IntVector, Rational>> mine, theirs;
      for (const auto& f : p.facets()) mine.insert({f.normal, f.offset});
      for (const auto& h : oracle_facets) theirs.insert({h.normal, Rational(h.offset)});
      EXPECT_EQ(mine, theirs);

      // Each reported vertex must be outside the hull of the remaining points.
      for (const auto& v : int_vertices(p)) {
        std::vector<IntPoint> rest;
        for (const auto& q : input)
          if (q != v) rest.push_back(q);
        auto hs = oracle::brute_force_facets(rest);
        bool outside = std::any_of(hs.begin(), hs.end(),
                                   [&](const oracle::Halfspace& h) { return oracle::dot(h.normal, v) + h.offset < 0; });
        if (rest.size() > k && !hs.empty()) EXPECT_TRUE(outside);
      }

      EXPECT_EQ(lattice_points(p), oracle::box_points(input, oracle_facets));
      EXPECT_EQ(normalized_volume(p), oracle::ehrhart_normalized_volume(input));
      expect_euler_relation(p);

      auto shuffled = input;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto q = hull(shuffled);
      EXPECT_TRUE(q.same_vertices(p));
      EXPECT_EQ(normalized_volume(q), normalized_volume(p));
      EXPECT_EQ(q.f_vector(), p.f_vector());
    }
  }
}

TEST(Hull, FacesAreClosedUnderIncidence) {
  auto p = hull(pts({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {-2, -2, 0}, {0, 0, -2}, {1, 1, 1}}));
  for (std::size_t i = 1; i < p.faces().size(); ++i) {
    const Face& f = p.faces()[i];
    // The vertices lying on all facets through f are exactly f's vertices.
    std::vector<std::size_t> closure;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      bool all = std::all_of(f.facets.begin(), f.facets.end(), [&](std::size_t g) {
        const auto& fv = p.facets()[g].vertices;
        return std::binary_search(fv.begin(), fv.end(), v);
      });
      if (all) closure.push_back(v);
    }
    EXPECT_EQ(closure, f.vertices);
    std::vector<RatVector> dirs;
    for (auto v : f.vertices) {
      RatVector d(3);
      for (std::size_t j = 0; j < 3; ++j) d[j] = p.vertices()[v][j] - p.vertices()[f.vertices[0]][j];
      dirs.push_back(d);
    }
    EXPECT_EQ(static_cast<int>(rank(dirs)), f.dim);
    for (auto c : f.children) EXPECT_EQ(p.faces()[c].dim, f.dim - 1);
  }
}

TEST(Dual, CrossPolytopeAndCube) {
  auto x = hull(cross(3));
  auto d = dual_polytope(x);
  EXPECT_EQ(int_vertices(d), int_vertices(hull(cube(3))));
  EXPECT_TRUE(dual_polytope(d).same_vertices(x));
  for (std::size_t i = 1; i < x.faces().size(); ++i) {
    auto j = dual_face(x, d, i);
    EXPECT_EQ(d.faces()[j].dim, 3 - 1 - x.faces()[i].dim);
  }
  EXPECT_THROW(dual_face(x, d, 0), DomainError);
}

TEST(Dual, RequiresInteriorOrigin) {
  EXPECT_THROW(dual_polytope(hull(pts({{0, 0}, {1, 0}, {0, 1}}))), DomainError);
  EXPECT_THROW(dual_polytope(hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))), DomainError);
}

TEST(Dual, RationalDualOfNonReflexiveSimplex) {
  auto p = hull(pts({{-1, -1}, {2, 0}, {0, 1}}));
  auto d = dual_polytope(p);
  EXPECT_FALSE(d.is_lattice());
  EXPECT_TRUE(dual_polytope(d).same_vertices(p));
}

TEST(LatticePoints, SquareAndThinTriangle) {
  EXPECT_EQ(lattice_points(hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).size(), 4u);
  std::vector<RatPoint> thin{{0, 0}, {4, 0}, {0, make_rational(1, 2)}};
  auto t = hull_with_faces(std::span<const RatPoint>(thin));
  auto lp = lattice_points(t);
  EXPECT_EQ(lp.size(), 5u);
  for (const auto& x : lp) EXPECT_FALSE(t.contains_in_interior(x));
}

TEST(LatticePoints, RationalPolytopesAgreeWithScan) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RatPoint> input(6);
    for (auto& p : input) p = {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                                make_rational(num(rng), den(rng))};
    auto p = hull_with_faces(std::span<const RatPoint>(input));
    if (!p.full_dimensional()) continue;
    std::vector<IntPoint> expected;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b)
        for (long c = -12; c <= 12; ++c) {
          IntPoint x{a, b, c};
          if (p.contains(x)) expected.push_back(x);
        }
    EXPECT_EQ(lattice_points(p), expected);
    if (expected.empty()) {
      EXPECT_THROW(bracket(p), DomainError);
      continue;
    }
    auto b = bracket(p);
    for (const auto& v : b.vertices()) EXPECT_TRUE(p.contains(v));
    EXPECT_TRUE(bracket(b).same_vertices(b));
    EXPECT_EQ(lattice_points(b), expected);
  }
}

TEST(Volume, NormalizedAgainstFaceLattice) {
  // Edge (2,2) has lattice length 2; the square face of a cube has volume 2.
  auto seg = hull(pts({{0, 0}, {2, 2}}));
  EXPECT_EQ(normalized_volume(seg), 2);
  auto c = hull(cube(3));
  for (auto f : c.faces_of_dim(2)) EXPECT_EQ(normalized_volume(c, f), 8);
  for (auto f : c.faces_of_dim(1)) EXPECT_EQ(normalized_volume(c, f), 2);
  auto unit = hull(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(normalized_volume(unit), 1);
  std::vector<RatPoint> half{{0, 0}, {make_rational(1, 2), 0}, {0, make_rational(1, 2)}};
  EXPECT_EQ(normalized_volume(hull_with_faces(std::span<const RatPoint>(half))), make_rational(1, 4));
}

TEST(Volume, TriangulationCoversPolytope) {
  auto p = hull(pts({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {-1, -1, -1}, {1, 1, -2}, {-2, 1, 1}}));
  Rational sum = 0;
  for (const auto& s : triangulate(p)) {
    EXPECT_EQ(s.size(), 4u);
    std::vector<RatVector> m;
    for (std::size_t r = 1; r < 4; ++r) {
      RatVector row(3);
      for (std::size_t j = 0; j < 3; ++j) row[j] = p.vertices()[s[r]][j] - p.vertices()[s[0]][j];
      m.push_back(row);
    }
    Rational det = abs(determinant(m));
    EXPECT_GT(det, 0);
    sum += det;
  }
  EXPECT_EQ(sum, normalized_volume(p));
}

TEST(NormalConeSection, PointForWholePolytope) {
  auto x = hull(cross(3));
  auto pt = normal_cone_section(x, 0);
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(normalized_volume(pt), 1);
  for (auto v : x.faces_of_dim(0)) {
    auto cone = normal_cone_section(x, v);
    EXPECT_EQ(cone.dim(), 3);
    EXPECT_EQ(normalized_volume(cone), 8);  // pyramid over a square facet of the cube
  }
  for (auto f : x.faces_of_dim(2)) {
    auto cone = normal_cone_section(x, f);
    EXPECT_EQ(cone.dim(), 1);
    EXPECT_EQ(normalized_volume(cone), 1);
  }
}

TEST(Fano, ReflexiveTriangle) {
  auto p = hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
  auto flags = fano_classification(p);
  EXPECT_TRUE(flags.canonical);
  EXPECT_TRUE(flags.reflexive);
  EXPECT_TRUE(flags.pseudoreflexive);
  EXPECT_TRUE(flags.almost_pseudoreflexive);
}

TEST(Fano, NonCanonicalAndErrors) {
  auto big = hull(pts({{2, 0}, {0, 2}, {-2, 0}, {0, -2}}));
  EXPECT_EQ(fano_classification(big), FanoFlags{});
  auto shifted = hull(pts({{0, 0}, {3, 0}, {0, 3}}));
  EXPECT_THROW(fano_classification(shifted), DomainError);
  std::vector<RatPoint> rational{{-1, -1}, {make_rational(3, 2), 0}, {0, 1}};
  EXPECT_THROW(fano_classification(hull_with_faces(std::span<const RatPoint>(rational))), DomainError);
  auto flat = hull(pts({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}));
  EXPECT_EQ(fano_classification(flat), FanoFlags{});
}

TEST(Fano, CanonicalButNotReflexive) {
  // Simplex of the weights (1,1,1,2): 2 does not divide 5.
  auto q = hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}}));
  auto g = fano_classification(q);
  EXPECT_TRUE(g.canonical);
  EXPECT_FALSE(g.reflexive);
  EXPECT_TRUE(g.almost_pseudoreflexive);
  EXPECT_EQ(g.pseudoreflexive, g.reflexive);
}

TEST(Fano, ReflexiveDualsAreInvolutive) {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (const auto& p : {hull(cube(d)), hull(cross(d))}) {
      auto flags = fano_classification(p);
      EXPECT_TRUE(flags.reflexive);
      EXPECT_TRUE(flags.pseudoreflexive);
      EXPECT_TRUE(dual_polytope(dual_polytope(p)).same_vertices(p));
    }
  }
}

TEST(Dump, OneVertexPerLine) {
  std::vector<RatPoint> v{{make_rational(1, 2), -1}, {0, 3}, {2, 2}};
  EXPECT_EQ(dump_vertices(hull_with_faces(std::span<const RatPoint>(v))), "1/2 -1\n0 3\n2 2\n");
}
