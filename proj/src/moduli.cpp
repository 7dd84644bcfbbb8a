#include "duval/moduli.hpp"

#include <algorithm>
#include <stdexcept>

namespace duval {

long brill_noether_number(long g, long r, long d) {
    if (g < 0 || r < 1 || d < 1)
        throw std::invalid_argument("brill_noether_number: need g >= 0, r >= 1, d >= 1");
    return g - (r + 1) * (g - d + r);
}

PencilInvariants pencil_invariants(long g) {
    if (g < 2)
        throw std::invalid_argument("pencil_invariants: g must be >= 2");
    PencilInvariants inv;
    inv.g = g;
    inv.chi = 1;
    inv.Ksq = 1 - 2 * g;  // the plane blown up at 2g + 8 points
    inv.c2 = 12 * inv.chi - inv.Ksq;
    inv.lambda = inv.chi + g - 1;
    inv.delta1 = 1;  // the single member containing the anticanonical curve
    inv.delta_rest = 0;
    inv.delta0 = inv.c2 + 4 * (g - 1) - inv.delta1 - inv.delta_rest;
    return inv;
}

Rational bn_divisor_pullback(long g, long r, long d) {
    if (brill_noether_number(g, r, d) != -1)
        throw std::invalid_argument("bn_divisor_pullback: requires rho(g,r,d) = -1");
    const PencilInvariants inv = pencil_invariants(g);
    Rational v = Rational(g + 3) * Rational(inv.lambda);
    v -= Rational(g + 1, 6) * Rational(inv.delta0);
    v -= Rational(1) * Rational(g - 1) * Rational(inv.delta1);  // i = 1 term
    // higher boundary terms vanish with delta_i = 0 for i >= 2
    return v;
}

BNDivisorData bn_divisor_data(long g, long r, long d) {
    BNDivisorData data;
    data.g = g;
    data.r = r;
    data.d = d;
    data.rho = brill_noether_number(g, r, d);
    data.pullback_bracket = bn_divisor_pullback(g, r, d);
    return data;
}

long duval_locus_dimension(long g) {
    if (g < 2)
        throw std::invalid_argument("duval_locus_dimension: g must be >= 2");
    return std::min(g + 10, 3 * g - 3);
}

}  // namespace duval
