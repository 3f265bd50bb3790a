#include "cymirror/errors.hpp"
#include "cymirror/polytope.hpp"

#include <memory>
#include <sstream>

namespace cymirror {

Polytope dual_polytope(const Polytope& p) {
  if (!p.full_dimensional()) throw DomainError("dual of a lower-dimensional polytope");
  std::vector<RatPoint> verts;
  verts.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw DomainError("origin is not in the interior");
    RatPoint y;
    y.reserve(f.normal.size());
    for (const auto& c : f.normal) y.push_back(Rational(c) / f.offset);
    verts.push_back(std::move(y));
  }
  return hull_with_faces(std::span<const RatPoint>(verts));
}

std::size_t dual_face(const Polytope& p, const Polytope& dual, std::size_t face) {
  const Face& f = p.faces().at(face);
  if (f.facets.empty()) throw DomainError("the polytope itself has no dual face");
  auto found = dual.find_face(f.facets);
  if (!found) throw std::logic_error("dual_face: polytopes are not dual to each other");
  return *found;
}

Polytope bracket(const Polytope& p) {
  auto pts = std::make_shared<const std::vector<IntPoint>>(lattice_points(p));
  if (pts->empty()) throw DomainError("polytope contains no lattice points");
  return hull_with_faces(std::span<const IntPoint>(*pts)).with_lattice_source([pts] { return *pts; });
}

Polytope normal_cone_section(const Polytope& p, std::size_t face) {
  if (!p.full_dimensional()) throw DomainError("normal cone of a lower-dimensional polytope");
  const Face& f = p.faces().at(face);
  std::vector<RatPoint> verts{RatPoint(p.ambient_dim(), Rational(0))};
  for (auto i : f.facets) {
    const Facet& facet = p.facets()[i];
    if (facet.offset <= 0) throw DomainError("origin is not in the interior");
    RatPoint y;
    for (const auto& c : facet.normal) y.push_back(Rational(c) / facet.offset);
    verts.push_back(std::move(y));
  }
  return hull_with_faces(std::span<const RatPoint>(verts));
}

namespace {

// 0 is the unique interior lattice point. Throws if the unique one is elsewhere.
bool canonical(const Polytope& p) {
  if (!p.full_dimensional()) return false;
  auto inner = interior_lattice_points(p);
  if (inner.size() != 1) return false;
  for (const auto& c : inner[0])
    if (c != 0) throw DomainError("interior point not at origin");
  return true;
}

}  // namespace

FanoFlags fano_classification(const Polytope& p) {
  FanoFlags flags;
  if (!p.full_dimensional()) return flags;
  if (!p.is_lattice()) throw DomainError("not a lattice polytope");
  flags.canonical = canonical(p);
  if (!flags.canonical) return flags;

  const Polytope dual = dual_polytope(p);
  flags.reflexive = dual.is_lattice();

  const Polytope dual_hull = bracket(dual);
  try {
    flags.almost_pseudoreflexive = canonical(dual_hull);
  } catch (const DomainError&) {
    flags.almost_pseudoreflexive = false;
  }
  if (flags.almost_pseudoreflexive) {
    const Polytope back = bracket(dual_polytope(dual_hull));
    flags.pseudoreflexive = back.same_vertices(p);
  }
  return flags;
}

std::string dump_vertices(const Polytope& p) {
  std::ostringstream os;
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << to_string(v[j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace cymirror
