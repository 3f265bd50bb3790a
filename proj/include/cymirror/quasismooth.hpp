#pragma once

// Transversality (quasi-smoothness of a general member of the linear
// system) and the IP property of a weight vector.

#include "cymirror/wps.hpp"

namespace cymirror {

/// The Newton polytope of degree-w monomials is d-dimensional and has
/// (1, ..., 1) in its interior.
bool has_ip_property(const WeightVector& w);

/// For every nonempty J: either some monomial in the variables of J has
/// degree w, or at least |J| distinct indices e outside J admit a degree-w
/// monomial (monomial in J) * z_e.
bool is_transverse(const WeightVector& w);

}  // namespace cymirror
