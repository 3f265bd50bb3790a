#include "cymirror/quasismooth.hpp"

#include <cstdint>
#include <vector>

namespace cymirror {
namespace {

// reach[J][t]: t is a nonnegative combination of the weights indexed by J.
std::vector<std::vector<std::uint8_t>> reachability(const WeightVector& w) {
  const std::size_t n = w.size();
  const std::uint64_t deg = w.degree();
  std::vector<std::vector<std::uint8_t>> reach(std::size_t{1} << n);
  reach[0].assign(deg + 1, 0);
  reach[0][0] = 1;
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
    reach[mask] = reach[mask & (mask - 1)];
    auto& r = reach[mask];
    const std::uint64_t step = w[low];
    for (std::uint64_t t = step; t <= deg; ++t)
      if (r[t - step]) r[t] = 1;
  }
  return reach;
}

}  // namespace

bool is_transverse(const WeightVector& w) {
  const std::size_t n = w.size();
  const std::uint64_t deg = w.degree();
  const auto reach = reachability(w);
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    const auto& r = reach[mask];
    if (r[deg]) continue;
    std::size_t pointers = 0;
    for (std::size_t e = 0; e < n; ++e)
      if (!((mask >> e) & 1u) && w[e] <= deg && r[deg - w[e]]) ++pointers;
    if (pointers < static_cast<std::size_t>(__builtin_popcount(mask))) return false;
  }
  return true;
}

bool has_ip_property(const WeightVector& w) {
  const std::size_t n = w.size();
  const std::uint64_t deg = w.degree();
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;

  // Cheap necessary conditions: (1,...,1) cannot be interior if every
  // Newton point has u_i >= 1, or every Newton point has u_i <= 1.
  const auto reach = reachability(w);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reach[all & ~(1u << i)][deg]) return false;
    if (2 * w[i] > deg || !reach[all][deg - 2 * w[i]]) return false;
  }

  const auto candidates = newton_vertex_candidates(w);
  const Polytope hull = hull_with_faces(std::span<const IntPoint>(candidates));
  if (hull.dim() != static_cast<int>(w.dim())) return false;
  const IntPoint ones(n, Integer(1));
  return hull.contains_in_interior(ones);
}

}  // namespace cymirror
