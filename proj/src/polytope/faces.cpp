#include "face_lattice.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace cymirror::detail {
namespace {

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Face> build_face_lattice(int dim,
                                     const std::vector<std::vector<std::size_t>>& facet_vertices,
                                     std::size_t vertex_count) {
  std::vector<Face> faces;
  std::map<std::vector<std::size_t>, std::size_t> index;

  auto facets_containing = [&](const std::vector<std::size_t>& verts) {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facet_vertices.size(); ++f)
      if (is_subset(verts, facet_vertices[f])) out.push_back(f);
    return out;
  };

  Face top;
  top.dim = dim;
  for (std::size_t v = 0; v < vertex_count; ++v) top.vertices.push_back(v);
  faces.push_back(top);
  index[top.vertices] = 0;

  std::size_t level_begin = faces.size();
  for (std::size_t f = 0; f < facet_vertices.size(); ++f) {
    Face face;
    face.dim = dim - 1;
    face.vertices = facet_vertices[f];
    face.facets = facets_containing(face.vertices);
    faces[0].children.push_back(faces.size());
    index[face.vertices] = faces.size();
    faces.push_back(std::move(face));
  }

  for (int d = dim - 1; d >= 1; --d) {
    const std::size_t level_end = faces.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      // Maximal proper faces are the maximal intersections with other facets.
      std::vector<std::vector<std::size_t>> candidates;
      for (std::size_t g = 0; g < facet_vertices.size(); ++g) {
        if (std::binary_search(faces[i].facets.begin(), faces[i].facets.end(), g)) continue;
        std::vector<std::size_t> meet;
        std::set_intersection(faces[i].vertices.begin(), faces[i].vertices.end(),
                              facet_vertices[g].begin(), facet_vertices[g].end(),
                              std::back_inserter(meet));
        if (!meet.empty()) candidates.push_back(std::move(meet));
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const auto& a, const auto& b) { return a.size() > b.size() || (a.size() == b.size() && a < b); });
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      std::vector<std::vector<std::size_t>> maximal;
      for (auto& c : candidates) {
        bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                     [&](const auto& m) { return is_subset(c, m); });
        if (!dominated) maximal.push_back(std::move(c));
      }
      for (auto& m : maximal) {
        auto it = index.find(m);
        std::size_t child;
        if (it != index.end()) {
          child = it->second;
        } else {
          child = faces.size();
          Face face;
          face.dim = d - 1;
          face.facets = facets_containing(m);
          face.vertices = m;
          index[face.vertices] = child;
          faces.push_back(std::move(face));
        }
        faces[i].children.push_back(child);
      }
    }
    level_begin = level_end;
  }
  return faces;
}

}  // namespace cymirror::detail
