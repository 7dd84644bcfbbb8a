#pragma once

#include "duval/matrix.hpp"
#include "duval/picard.hpp"
#include "duval/plane_poly.hpp"

#include <optional>
#include <vector>

namespace duval {

struct InterpolationProblem {
    struct Condition {
        ProjPoint point;
        int multiplicity;
    };
    int degree = 0;
    std::vector<Condition> conditions;
};

// Degree 3g with a g-fold point at the first eight configuration points and a
// (g-1)-fold point at the ninth. Supported for 1 <= g <= 8 (coefficient
// growth caps the desk scale).
InterpolationProblem duval_system_problem(const PointConfig& cfg, int g);

// Degree 3 through all nine points: the anticanonical cubic data.
InterpolationProblem cubic_problem(const PointConfig& cfg);

// d(d+3)/2 - sum nu_i(nu_i+1)/2.
long virtual_dimension(int degree, const std::vector<int>& mults);

// One row per vanishing condition: all partial derivatives of order below the
// multiplicity, taken in the two affine directions of the chart where the
// point's last nonzero coordinate is 1. Columns follow the canonical monomial
// order. Order m rows come before order m+1; within an order, the first
// chart direction's exponent descends.
RationalMatrix build_conditions(const InterpolationProblem& p);

struct LinearSystemResult {
    InterpolationProblem problem;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::vector<PlanePoly> basis;
    long projective_dimension = -1;
    long virtual_dim = 0;
};

// Exact basis via the fraction-free nullspace; every basis element is
// re-verified to meet each multiplicity condition.
LinearSystemResult solve_system(const InterpolationProblem& p);

// Smallest order m with a nonvanishing order-m partial at the point (in the
// chart of its last nonzero coordinate); 0 when f(pt) != 0, degree+1 when f
// vanishes to every order up to its degree (in particular for f = 0).
int multiplicity_at(const PlanePoly& f, const ProjPoint& pt);

struct BasePoint {
    ECPoint group_point;     // -(g(p_1+...+p_8) + (g-1)p_9)
    ProjPoint plane_point;   // (x,y,1), or (0,1,0) when the group point is the identity
    bool at_infinity = false;
};

// The common point of every member of the genus-g system with the
// anticanonical cubic, determined by the group law on the cubic.
BasePoint base_point(const PointConfig& cfg, int g);

struct SingularPoint {
    ProjPoint point;
    int multiplicity;
};

struct SingularLocus {
    std::vector<SingularPoint> points;           // rational singular points
    std::vector<int> unresolved_factor_degrees;  // nonrational eliminant factors left behind
    // The partials share a positive-dimensional component; the rational point
    // list is then not guaranteed complete.
    bool positive_dimensional = false;
};

// Common rational zeros of f and its three partials, located by resultant
// elimination with respect to y in the z = 1 chart plus a separate scan of
// the z = 0 line. Degree is capped at 9.
SingularLocus singular_locus(const PlanePoly& f);

// Deterministic pseudo-random combination of the basis: coefficients
// 1 + (r mod 997) drawn from mt19937_64 seeded as given.
PlanePoly generic_member(const std::vector<PlanePoly>& basis, unsigned long seed);

}  // namespace duval
