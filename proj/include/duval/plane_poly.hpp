#pragma once

#include "duval/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace duval {

// Exponent triple (i,j,k) of a monomial X^i Y^j Z^k.
using Exponents = std::array<int, 3>;

// Point of the projective plane, not all coordinates zero.
using ProjPoint = std::array<Rational, 3>;

// Canonical monomial order: graded reverse-lexicographic, leading monomial
// first. Within a degree, a precedes b iff the last nonzero entry of a-b is
// negative. Ties cannot occur for distinct triples of equal degree.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// All monomials of total degree d, in canonical order.
std::vector<Exponents> monomials_of_degree(int d);

// Homogeneous ternary polynomial with exact rational coefficients. The zero
// polynomial has no stored terms; zero coefficients are never stored.
class PlanePoly {
public:
    using TermMap = std::map<Exponents, Rational, MonomialOrder>;

    PlanePoly() : degree_(0) {}

    static PlanePoly monomial(const Exponents& e, const Rational& c);
    // Coefficients listed against monomials_of_degree(degree).
    static PlanePoly from_coefficients(int degree, const std::vector<Rational>& coeffs);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;

    Rational eval(const ProjPoint& pt) const;
    PlanePoly partial(int var) const;  // var: 0 = X, 1 = Y, 2 = Z

    PlanePoly operator+(const PlanePoly& o) const;
    PlanePoly operator-(const PlanePoly& o) const;
    PlanePoly operator*(const PlanePoly& o) const;
    PlanePoly scaled(const Rational& c) const;

    bool operator==(const PlanePoly& o) const;

    std::string str() const;

private:
    void insert_term(const Exponents& e, const Rational& c);

    int degree_;
    TermMap terms_;
};

}  // namespace duval
