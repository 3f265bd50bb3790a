#pragma once

#include "cymirror/polytope.hpp"

#include <cstddef>
#include <vector>

namespace cymirror::detail {

/// Face lattice of a polytope of dimension `dim` from its facet-vertex
/// incidences. Element 0 is the polytope; faces are grouped by decreasing
/// dimension.
std::vector<Face> build_face_lattice(int dim,
                                     const std::vector<std::vector<std::size_t>>& facet_vertices,
                                     std::size_t vertex_count);

}  // namespace cymirror::detail
