#include "cymirror/wps.hpp"

#include "cymirror/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cymirror {

WeightVector::WeightVector(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 3) throw std::invalid_argument("need at least three weights");
  for (auto x : weights_) {
    if (x == 0) throw std::invalid_argument("weights must be positive");
    degree_ += x;
  }
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw ParseError("invalid weight '" + std::string(item) + "' in '" + std::string(text) + "'");
    if (value == 0) throw ParseError("weights must be positive: '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() < 3) throw ParseError("need at least three weights: '" + std::string(text) + "'");
  std::uint64_t sum = 0;
  for (auto x : out)
    if (__builtin_add_overflow(sum, x, &sum)) throw ParseError("weights too large");
  return WeightVector(std::move(out));
}

Rational WeightVector::charge(std::size_t i) const {
  return make_rational(Integer(static_cast<unsigned long>(weights_.at(i))), Integer(static_cast<unsigned long>(degree_)));
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
  return os.str();
}

SubsetMask SubsetMask::of(std::initializer_list<std::size_t> members) {
  std::uint32_t bits = 0;
  for (auto m : members) bits |= 1u << m;
  return SubsetMask(bits);
}

std::vector<std::size_t> SubsetMask::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

WeightFlags weight_flags(const WeightVector& w) {
  WeightFlags f;
  f.well_formed = true;
  for (std::size_t omit = 0; omit < w.size(); ++omit) {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != omit) g = std::gcd(g, w[i]);
    if (g != 1) f.well_formed = false;
  }
  f.gorenstein = std::all_of(w.weights().begin(), w.weights().end(),
                             [&](std::uint64_t x) { return w.degree() % x == 0; });
  return f;
}

std::uint64_t subset_gcd(const WeightVector& w, SubsetMask j) {
  std::uint64_t g = w.degree();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (j.contains(i)) g = std::gcd(g, w[i]);
  return g;
}

namespace {

// Enumerates u >= 0 with sum w_i u_i = w, visiting indices by decreasing
// weight. `keep(i, u)` may reject a partial point once u_i is assigned.
template <typename Keep, typename Emit>
void knapsack(const WeightVector& w, Keep keep, Emit emit) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return w[a] > w[b]; });
  std::vector<std::uint64_t> u(n, 0);
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t rest) -> void {
    const std::size_t i = order[k];
    if (k + 1 == n) {
      if (rest % w[i] != 0) return;
      u[i] = rest / w[i];
      if (keep(order, k, u)) emit(u);
      return;
    }
    for (std::uint64_t a = 0; a * w[i] <= rest; ++a) {
      u[i] = a;
      if (!keep(order, k, u)) continue;
      self(self, k + 1, rest - a * w[i]);
    }
    u[i] = 0;
  };
  rec(rec, 0, w.degree());
}

IntPoint to_point(const std::vector<std::uint64_t>& u) {
  IntPoint p;
  p.reserve(u.size());
  for (auto x : u) p.emplace_back(static_cast<unsigned long>(x));
  return p;
}

}  // namespace

std::vector<IntPoint> newton_points(const WeightVector& w, std::size_t limit) {
  std::vector<IntPoint> out;
  knapsack(
      w, [](const auto&, std::size_t, const auto&) { return true; },
      [&](const std::vector<std::uint64_t>& u) {
        if (out.size() == limit) throw DomainError("more than " + std::to_string(limit) + " Newton points");
        out.push_back(to_point(u));
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPoint> newton_vertex_candidates(const WeightVector& w) {
  std::vector<IntPoint> out;
  auto keep = [&](const std::vector<std::size_t>& order, std::size_t k, const std::vector<std::uint64_t>& u) {
    const std::size_t i = order[k];
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t j = order[t];
      const std::uint64_t g = std::gcd(w[i], w[j]);
      if (u[i] >= w[j] / g && u[j] >= w[i] / g) return false;
    }
    return true;
  };
  knapsack(w, keep, [&](const std::vector<std::uint64_t>& u) { out.push_back(to_point(u)); });
  std::sort(out.begin(), out.end());
  return out;
}

RatPoint MirrorLattice::m_coordinates(std::span<const Rational> u) const {
  RatPoint m(to_m.rows(), Rational(0));
  for (std::size_t r = 0; r < to_m.rows(); ++r)
    for (std::size_t c = 0; c < to_m.cols(); ++c)
      if (to_m(r, c) != 0) m[r] += to_m(r, c) * u[c];
  return m;
}

IntPoint MirrorLattice::m_coordinates(std::span<const Integer> u) const {
  IntPoint m(to_m.rows(), Integer(0));
  for (std::size_t r = 0; r < to_m.rows(); ++r)
    for (std::size_t c = 0; c < to_m.cols(); ++c)
      if (to_m(r, c) != 0) m[r] += to_m(r, c) * u[c];
  return m;
}

MirrorLattice mirror_lattice(const WeightVector& w) {
  if (!weight_flags(w).well_formed) throw DomainError("weight vector " + w.to_string() + " is not well-formed");
  const std::size_t n = w.size();
  const std::size_t d = n - 1;
  MirrorLattice lat;
  lat.to_m = IntMatrix(d, n);
  if (w[0] == 1) {
    IntVector v0(d);
    for (std::size_t i = 0; i < d; ++i) v0[i] = -Integer(static_cast<unsigned long>(w[i + 1]));
    lat.generators.push_back(v0);
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, Integer(0));
      e[i] = 1;
      lat.generators.push_back(e);
      lat.to_m(i, i + 1) = 1;
    }
    return lat;
  }
  // w^T = U S V with S = (1, 0, ..., 0): row 0 of V is ±w, and rows 1..d of V
  // map degree-zero vectors isomorphically onto Z^d.
  IntMatrix row(1, n);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = static_cast<unsigned long>(w[i]);
  const SmithForm f = smith_normal_form(row);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = f.V_inv(i, r + 1);
    lat.generators.push_back(std::move(v));
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) lat.to_m(r, c) = f.V(r + 1, c);
  return lat;
}

Polytope mirror_simplex(const MirrorLattice& lattice) {
  return hull_with_faces(std::span<const IntPoint>(lattice.generators));
}

namespace {

Polytope::LatticeSource newton_source(const WeightVector& w, const MirrorLattice& lattice) {
  return [w, lattice] {
    std::vector<IntPoint> out;
    for (auto u : newton_points(w)) {
      for (auto& c : u) c -= 1;
      out.push_back(lattice.m_coordinates(std::span<const Integer>(u)));
    }
    return out;
  };
}

}  // namespace

Polytope dual_simplex(const WeightVector& w, const MirrorLattice& lattice) {
  const std::size_t n = w.size();
  std::vector<RatPoint> verts;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector u(n, Rational(-1));
    u[i] += make_rational(Integer(static_cast<unsigned long>(w.degree())), Integer(static_cast<unsigned long>(w[i])));
    verts.push_back(lattice.m_coordinates(std::span<const Rational>(u)));
  }
  return hull_with_faces(std::span<const RatPoint>(verts)).with_lattice_source(newton_source(w, lattice));
}

Polytope newton_polytope(const WeightVector& w, const MirrorLattice& lattice) {
  std::vector<IntPoint> pts;
  for (auto u : newton_vertex_candidates(w)) {
    for (auto& c : u) c -= 1;
    pts.push_back(lattice.m_coordinates(std::span<const Integer>(u)));
  }
  return hull_with_faces(std::span<const IntPoint>(pts)).with_lattice_source(newton_source(w, lattice));
}

}  // namespace cymirror
