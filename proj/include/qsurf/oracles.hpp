#pragma once

// Independent brute-force oracles. These deliberately avoid the computation
// paths they cross-check: the intersection oracle is linear algebra on
// truncated quotient rings, not substitution.

#include "qsurf/localint.hpp"

namespace qsurf::oracles {

// dim_Q Q[[x,y]]/(B, D) at the origin: rank computation over the monomials
// of total degree < N for growing N until the quotient dimension stabilizes.
// Throws when the dimension has not stabilized by n_cap (e.g. D inside B).
long long quotient_ring_mult(const localint::LocalCurve& b, const localint::GraphCurve& d, int n_cap = 16);

}  // namespace qsurf::oracles
