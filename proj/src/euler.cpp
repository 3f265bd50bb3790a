#include "cymirror/euler.hpp"

#include "cymirror/errors.hpp"
#include "cymirror/quasismooth.hpp"

#include <cstdint>

namespace cymirror {
namespace {

Integer big(std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); }

int sign_of_size(std::size_t k) { return (k % 2) ? -1 : 1; }

// prod_{i in mask} w / w_i, exactly.
Rational inverse_charge_product(const WeightVector& w, std::uint32_t mask) {
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    if ((mask >> i) & 1u) {
      num *= big(w.degree());
      den *= big(w[i]);
    }
  return make_rational(num, den);
}

}  // namespace

Rational vafa_double_sum(const WeightVector& w) {
  const std::uint64_t deg = w.degree();
  const std::size_t n = w.size();
  std::vector<std::uint32_t> mask(deg, 0);
  for (std::uint64_t l = 0; l < deg; ++l)
    for (std::size_t i = 0; i < n; ++i)
      if ((l * w[i]) % deg == 0) mask[l] |= 1u << i;

  std::vector<std::uint64_t> count(std::size_t{1} << n, 0);
  for (std::uint64_t l = 0; l < deg; ++l)
    for (std::uint64_t r = 0; r < deg; ++r) ++count[mask[l] & mask[r]];

  Rational total = 0;
  for (std::uint32_t m = 0; m < count.size(); ++m) {
    if (count[m] == 0) continue;
    // prod (1 - w/w_i) = prod (w_i - w)/w_i; the empty product is 1.
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1u) {
        num *= big(w[i]) - big(deg);
        den *= big(w[i]);
      }
    total += make_rational(num * big(count[m]), den);
  }
  return total / Rational(big(deg));
}

SubsetSum vafa_subset_sum(const WeightVector& w) {
  if (!weight_flags(w).well_formed) throw DomainError("weight vector " + w.to_string() + " is not well-formed");
  const std::size_t n = w.size();
  const std::size_t d = w.dim();
  SubsetSum out;
  out.partials.assign(d, Rational(0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const SubsetMask j(mask);
    const std::size_t k = j.size();
    if (k + 1 > d) continue;
    const Integer nj = big(subset_gcd(w, j));
    out.partials[k] += Rational(sign_of_size(k) * nj * nj) * inverse_charge_product(w, mask);
  }
  Rational total = 0;
  for (const auto& p : out.partials) total += p;
  out.value = total / Rational(big(w.degree()));
  return out;
}

Rational stringy_mirror_closed(const WeightVector& w) {
  if (!has_ip_property(w)) throw DomainError("weight vector " + w.to_string() + " does not have the IP property");
  const std::size_t n = w.size();
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  Rational total = 0;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    const SubsetMask j(mask);
    if (j.size() < 2) continue;
    const SubsetMask rest = j.complement(n);
    const Integer nr = big(subset_gcd(w, rest));
    total += Rational(sign_of_size(j.size()) * nr * nr) * inverse_charge_product(w, rest.bits());
  }
  return total / Rational(big(w.degree()));
}

Rational stringy_polytope(const Polytope& delta) {
  const FanoFlags flags = fano_classification(delta);
  if (!flags.canonical) throw DomainError("polytope is not a canonical Fano polytope");
  if (!flags.almost_pseudoreflexive) throw DomainError("lattice hull of the dual is not canonical");
  Rational total = 0;
  for (std::size_t f = 0; f < delta.faces().size(); ++f) {
    const int k = delta.faces()[f].dim;
    if (k < 1) continue;
    const Rational term = normalized_volume(delta, f) * normalized_volume(normal_cone_section(delta, f));
    if ((k - 1) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Rational stringy_polytope(const MirrorLattice& lattice) { return stringy_polytope(mirror_simplex(lattice)); }

Rational stringy_reflexive(const Polytope& delta) {
  if (!fano_classification(delta).reflexive) throw DomainError("polytope is not reflexive");
  const Polytope dual = dual_polytope(delta);
  const int d = delta.dim();
  Rational total = 0;
  for (std::size_t f = 1; f < delta.faces().size(); ++f) {
    const int k = delta.faces()[f].dim;
    if (k < 1 || k > d - 2) continue;
    const Rational term = normalized_volume(delta, f) * normalized_volume(dual, dual_face(delta, dual, f));
    if ((k - 1) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Rational k3_identity(const Polytope& delta) {
  if (delta.dim() != 3 || delta.ambient_dim() != 3) throw DomainError("the K3 identity needs a 3-dimensional polytope");
  const FanoFlags flags = fano_classification(delta);
  if (!flags.canonical || !flags.almost_pseudoreflexive)
    throw DomainError("the K3 identity needs an almost pseudoreflexive polytope");
  Rational rhs = normalized_volume(delta);
  for (std::size_t f = 0; f < delta.facets().size(); ++f) {
    const auto face = delta.find_face(delta.facets()[f].vertices);
    rhs -= normalized_volume(delta, *face) / lattice_distance(delta, f);
  }
  for (auto e : delta.faces_of_dim(1))
    rhs += normalized_volume(delta, e) * normalized_volume(normal_cone_section(delta, e));
  return Rational(24) - rhs;
}

EulerReport mirror_test(const WeightVector& w) {
  EulerReport r(w);
  const WeightFlags flags = weight_flags(w);
  r.well_formed = flags.well_formed;
  r.gorenstein = flags.gorenstein;
  r.ip = has_ip_property(w);
  r.transverse = flags.well_formed && is_transverse(w);
  r.chi_orb_formula = vafa_double_sum(w);
  r.integral = is_integer(r.chi_orb_formula);
  r.methods_agree = true;

  const int sign = (w.dim() % 2 == 1) ? 1 : -1;  // (-1)^{d-1}

  if (!r.well_formed) {
    r.notes.push_back("not well-formed: formula value only");
    return r;
  }

  r.chi_orb_subset = vafa_subset_sum(w).value;
  if (*r.chi_orb_subset != r.chi_orb_formula) {
    r.methods_agree = false;
    r.notes.push_back("inconsistency: double sum " + to_string(r.chi_orb_formula) + " differs from subset sum " +
                      to_string(*r.chi_orb_subset));
  }

  if (!r.ip) {
    r.notes.push_back("no IP property: formula value only");
    return r;
  }

  const MirrorLattice lattice = mirror_lattice(w);
  r.chi_str_mirror = stringy_mirror_closed(w);
  r.chi_str_polytope = stringy_polytope(lattice);
  if (*r.chi_str_mirror != Rational(sign) * r.chi_orb_formula) {
    r.methods_agree = false;
    r.notes.push_back("inconsistency: closed form " + to_string(*r.chi_str_mirror) +
                      " differs from the signed double sum");
  }
  if (*r.chi_str_polytope != *r.chi_str_mirror) {
    r.methods_agree = false;
    r.notes.push_back("inconsistency: polytope formula " + to_string(*r.chi_str_polytope) +
                      " differs from closed form " + to_string(*r.chi_str_mirror));
  }

  if (!r.transverse) {
    r.notes.push_back("not transverse: the mirror simplex is defined but X_w is not quasi-smooth");
    if (!is_integer(*r.chi_str_mirror))
      r.notes.push_back("chi_str_mirror = " + to_string(*r.chi_str_mirror) +
                        " is not an integer: no Landau-Ginzburg description");
  } else if (!r.integral) {
    r.methods_agree = false;
    r.notes.push_back("inconsistency: transverse weight vector with non-integral Euler number");
  }

  const Polytope newton = newton_polytope(w, lattice);
  if (fano_classification(newton).reflexive) {
    r.chi_newton_reflexive = stringy_reflexive(newton);
    const Rational expected = Rational(sign) * *r.chi_str_mirror;
    if (*r.chi_newton_reflexive != expected)
      r.notes.push_back("reflexive Newton polytope gives Euler number " + to_string(*r.chi_newton_reflexive) +
                        ", not " + to_string(expected) + ": the mirror simplex is not the mirror of that family");
  } else {
    r.notes.push_back("Newton polytope is not reflexive");
  }
  return r;
}

}  // namespace cymirror
