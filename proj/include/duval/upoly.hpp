#pragma once

#include "duval/rational.hpp"

#include <vector>

namespace duval {

// Dense univariate polynomial over the integers; coefficient of x^i at
// index i. The zero polynomial stores no coefficients (degree -1).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    static ZPoly constant(const mpz_class& c);

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const mpz_class& operator[](std::size_t i) const { return coeff_[i]; }
    const mpz_class& leading() const { return coeff_.back(); }
    const std::vector<mpz_class>& coeffs() const { return coeff_; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly scaled(const mpz_class& c) const;
    ZPoly shifted(int k) const;  // multiply by x^k

    // Exact division; throws std::domain_error when the quotient is not
    // an integer polynomial.
    ZPoly divexact(const ZPoly& d) const;

    ZPoly derivative() const;
    mpz_class content() const;     // nonnegative gcd of coefficients
    ZPoly primitive_part() const;  // content removed, sign kept

    mpz_class eval(const mpz_class& x) const;
    // Homogeneous evaluation: sum a_i num^i den^(deg-i). Zero iff num/den
    // is a root (den > 0 assumed).
    mpz_class eval_homogeneous(const mpz_class& num, const mpz_class& den) const;

    bool operator==(const ZPoly& o) const { return coeff_ == o.coeff_; }

    std::string str() const;

private:
    void normalize();
    std::vector<mpz_class> coeff_;
};

// Clears denominators of exact rational coefficients (index i = coefficient
// of x^i) into a primitive-scaled integer polynomial: the result is the input
// times the lcm of denominators.
ZPoly clear_denominators(const std::vector<Rational>& coeffs);

// gcd via the primitive pseudo-remainder sequence; the result is primitive
// with positive leading coefficient (zero when both inputs are zero).
ZPoly gcd_poly(const ZPoly& a, const ZPoly& b);

// f / gcd(f, f'), primitive with positive leading coefficient.
ZPoly squarefree_part(const ZPoly& f);

// All positive divisors of |n| by trial division, unsorted. Throws when |n|
// exceeds the desk-scale factoring bound.
std::vector<mpz_class> small_divisors(const mpz_class& n);

// Integer roots found by rational-root-theorem divisor enumeration on the
// constant term; a vanishing constant term is handled by factoring out x.
// Sorted ascending, no duplicates.
std::vector<mpz_class> integer_roots(const ZPoly& f);

// All rational roots, found by root enumeration modulo a good prime, Hensel
// lifting past the coefficient bound, and rational reconstruction. Handles
// coefficients far too large for divisor enumeration. Sorted ascending.
std::vector<Rational> rational_roots(const ZPoly& f);

// Polynomial in y with coefficients in Z[x]; coefficient of y^i at index i.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<ZPoly> coeffs);

    int degree_y() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const ZPoly& operator[](std::size_t i) const { return coeff_[i]; }

private:
    void normalize();
    std::vector<ZPoly> coeff_;
};

// Resultant with respect to y, as a polynomial in x: the determinant of the
// Sylvester matrix, computed fraction-free over Z[x]. Zero iff the inputs
// share a factor of positive y-degree (or one of them is zero).
ZPoly resultant_y(const BiPoly& f, const BiPoly& g);

}  // namespace duval
