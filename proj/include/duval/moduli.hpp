#pragma once

#include "duval/rational.hpp"

namespace duval {

// Intersection numbers of a pencil of the genus-g family with the standard
// divisor classes on the moduli space, together with the surface invariants
// they derive from.
struct PencilInvariants {
    long g = 0;
    long lambda = 0;
    long delta0 = 0;
    long delta1 = 0;
    long delta_rest = 0;  // total over the higher boundary classes
    long chi = 0;
    long c2 = 0;
    long Ksq = 0;
};

// rho(g, r, d) = g - (r+1)(g - d + r).
long brill_noether_number(long g, long r, long d);

// chi = 1, K^2 = 1 - 2g, c2 = 2g + 11, lambda = g, delta0 = 6g + 6,
// delta1 = 1, higher boundary 0. Requires g >= 2.
PencilInvariants pencil_invariants(long g);

struct BNDivisorData {
    long g = 0, r = 0, d = 0;
    long rho = 0;  // recorded only when -1
    Rational pullback_bracket;
};

// The bracket (g+3)lambda - (g+1)/6 delta0 - sum i(g-i) delta_i paired with
// the pencil, with the overall positive constant factored out. Requires
// rho(g, r, d) = -1.
Rational bn_divisor_pullback(long g, long r, long d);
BNDivisorData bn_divisor_data(long g, long r, long d);

// min(g + 10, 3g - 3) for g >= 2.
long duval_locus_dimension(long g);

}  // namespace duval
