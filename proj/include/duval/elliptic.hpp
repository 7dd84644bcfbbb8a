#pragma once

#include "duval/plane_poly.hpp"
#include "duval/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace duval {

// Point of a short Weierstrass curve: the point at infinity or an affine
// rational pair.
class ECPoint {
public:
    ECPoint() : inf_(true) {}
    ECPoint(Rational x, Rational y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static ECPoint infinity() { return ECPoint(); }
    static ECPoint parse(std::string_view s);  // "x,y" or "inf"

    bool is_infinity() const { return inf_; }
    const Rational& x() const;
    const Rational& y() const;

    std::string str() const;  // "x,y" or "inf"

    bool operator==(const ECPoint& o) const;
    bool operator!=(const ECPoint& o) const { return !(*this == o); }

private:
    bool inf_;
    Rational x_, y_;
};

// In the plane, the identity embeds as (0,1,0); affine points as (x,y,1).
ProjPoint to_projective(const ECPoint& p);

// y^2 = x^3 + a x + b over the rationals, with nonzero discriminant.
class EllipticCurve {
public:
    EllipticCurve(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational discriminant() const;  // -16(4a^3 + 27b^2)

    bool contains(const ECPoint& p) const;
    void require_on_curve(const ECPoint& p) const;

    // Chord-tangent group law with the point at infinity as identity.
    ECPoint add(const ECPoint& p, const ECPoint& q) const;
    ECPoint negate(const ECPoint& p) const;
    ECPoint sub(const ECPoint& p, const ECPoint& q) const { return add(p, negate(q)); }
    ECPoint scalar_mul(const mpz_class& n, const ECPoint& p) const;

    // The raw chord-tangent step without the on-curve input check. The group
    // law is closed, so results of add/scalar_mul are always valid inputs;
    // hot loops over pre-validated points use this form.
    ECPoint add_unchecked(const ECPoint& p, const ECPoint& q) const;

private:
    Rational a_, b_;
};

// |E(F_p)| including the point at infinity, by exhaustive x-enumeration with
// quadratic-residue testing. Supported range: good-reduction primes <= 1000.
long count_points_mod(const EllipticCurve& curve, long prime);

struct TorsionCertificate {
    std::vector<long> primes;
    std::vector<long> orders;
    long order_gcd = 0;
    bool trivial = false;  // conclusive exactly when the gcd is 1
};

// Torsion injects into E(F_p) at every good prime, so gcd(orders) = 1
// certifies trivial rational torsion.
TorsionCertificate torsion_is_trivial(const EllipticCurve& curve, const std::vector<long>& primes);

// All integers t such that doubling a point with x-coordinate t lands on
// x = target_x, i.e. the integer roots of t^4 - 4c t^3 - 8b t - 4bc with
// c = target_x. Requires a = 0 and integral b. Empty list is a valid answer.
std::vector<mpz_class> integral_halving_witnesses(const EllipticCurve& curve,
                                                  const mpz_class& target_x);

struct TwoTorsionResult {
    bool trivial = false;
    std::optional<Rational> witness_root;  // rational root of x^3 + ax + b, if any
};

// E(Q)[2] = 0 iff x^3 + ax + b has no rational root; decided by
// rational-root-theorem enumeration after clearing denominators.
TwoTorsionResult two_torsion_is_trivial(const EllipticCurve& curve);

struct HalvingCheck {
    mpz_class x;
    std::vector<mpz_class> witnesses;
};

struct IndependenceCertificate {
    bool independent = false;
    std::string failure_reason;  // empty on success
    TorsionCertificate torsion;
    TwoTorsionResult two_torsion;
    std::vector<HalvingCheck> halvings;  // x(P), x(Q), x(P-Q)
};

// Certifies that no combination nP + mQ with n or m odd vanishes: trivial
// torsion and 2-torsion plus empty integral halving lists for x(P), x(Q) and
// x(P-Q). The restriction of halving preimages to integral points relies on
// the known list of integral points of the curve; the certificate covers
// exactly the integral statement.
IndependenceCertificate independence_certificate(const EllipticCurve& curve, const ECPoint& p,
                                                 const ECPoint& q,
                                                 const std::vector<long>& primes);

}  // namespace duval
