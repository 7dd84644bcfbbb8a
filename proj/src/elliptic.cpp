#include "duval/elliptic.hpp"

#include "duval/upoly.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace duval {

const Rational& ECPoint::x() const {
    if (inf_)
        throw std::domain_error("ECPoint: the point at infinity has no affine coordinates");
    return x_;
}

const Rational& ECPoint::y() const {
    if (inf_)
        throw std::domain_error("ECPoint: the point at infinity has no affine coordinates");
    return y_;
}

ECPoint ECPoint::parse(std::string_view s) {
    if (s == "inf" || s == "infinity")
        return infinity();
    const auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("ECPoint::parse: expected \"x,y\" or \"inf\"");
    return ECPoint(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
}

std::string ECPoint::str() const {
    if (inf_)
        return "inf";
    return x_.str() + "," + y_.str();
}

bool ECPoint::operator==(const ECPoint& o) const {
    if (inf_ || o.inf_)
        return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

ProjPoint to_projective(const ECPoint& p) {
    if (p.is_infinity())
        return {Rational(0), Rational(1), Rational(0)};
    return {p.x(), p.y(), Rational(1)};
}

EllipticCurve::EllipticCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant().is_zero())
        throw std::invalid_argument("EllipticCurve: singular curve (discriminant 0)");
}

Rational EllipticCurve::discriminant() const {
    return Rational(-16) * (Rational(4) * a_ * a_ * a_ + Rational(27) * b_ * b_);
}

bool EllipticCurve::contains(const ECPoint& p) const {
    if (p.is_infinity())
        return true;
    return p.y() * p.y() == p.x() * p.x() * p.x() + a_ * p.x() + b_;
}

void EllipticCurve::require_on_curve(const ECPoint& p) const {
    if (contains(p))
        return;
    throw std::domain_error("point (" + p.str() + ") violates y^2 = x^3 + " + a_.str() + "*x + " +
                            b_.str() + ": lhs " + (p.y() * p.y()).str() + " != rhs " +
                            (p.x() * p.x() * p.x() + a_ * p.x() + b_).str());
}

// chord-tangent step; callers guarantee the inputs lie on the curve
ECPoint EllipticCurve::add_unchecked(const ECPoint& p, const ECPoint& q) const {
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational lambda;
    if (x1 == x2) {
        if (y1 == -y2)
            return ECPoint::infinity();
        // tangent line at a doubled point
        lambda = (Rational(3) * x1 * x1 + a_) / (Rational(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const Rational x3 = lambda * lambda - x1 - x2;
    const Rational y3 = lambda * (x1 - x3) - y1;
    return ECPoint(x3, y3);
}

ECPoint EllipticCurve::add(const ECPoint& p, const ECPoint& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add_unchecked(p, q);
}

ECPoint EllipticCurve::negate(const ECPoint& p) const {
    require_on_curve(p);
    if (p.is_infinity())
        return p;
    return ECPoint(p.x(), -p.y());
}

ECPoint EllipticCurve::scalar_mul(const mpz_class& n, const ECPoint& p) const {
    require_on_curve(p);
    if (p.is_infinity())
        return p;
    ECPoint acc = ECPoint::infinity();
    ECPoint base = mpz_sgn(n.get_mpz_t()) < 0 ? ECPoint(p.x(), -p.y()) : p;
    mpz_class k = abs(n);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            acc = add_unchecked(acc, base);
        k >>= 1;
        if (k > 0)
            base = add_unchecked(base, base);
    }
    return acc;
}

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 reduce_rational_mod(const Rational& r, u64 p) {
    const u64 den = mpz_fdiv_ui(r.den().get_mpz_t(), p);
    if (den == 0)
        throw std::domain_error("reduction mod " + std::to_string(p) +
                                ": denominator of " + r.str() + " vanishes");
    const u64 num = mpz_fdiv_ui(r.num().get_mpz_t(), p);
    return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

long count_points_mod(const EllipticCurve& curve, long prime) {
    if (prime < 2 || prime > 1000)
        throw std::invalid_argument("count_points_mod: supported primes are 2 <= p <= 1000");
    const u64 p = static_cast<u64>(prime);
    const u64 a = reduce_rational_mod(curve.a(), p);
    const u64 b = reduce_rational_mod(curve.b(), p);
    const u64 disc = reduce_rational_mod(curve.discriminant(), p);
    if (disc == 0)
        throw std::domain_error("count_points_mod: bad reduction at " + std::to_string(prime));
    long count = 1;  // the point at infinity
    for (u64 x = 0; x < p; ++x) {
        const u64 rhs = (x * x % p * x + a * x + b) % p;
        if (rhs == 0) {
            count += 1;
        } else {
            const u64 ls = pow_mod(rhs, (p - 1) / 2, p);  // Euler's criterion
            if (ls == 1)
                count += 2;
        }
    }
    return count;
}

TorsionCertificate torsion_is_trivial(const EllipticCurve& curve, const std::vector<long>& primes) {
    if (primes.empty())
        throw std::invalid_argument("torsion_is_trivial: at least one prime required");
    TorsionCertificate cert;
    long g = 0;
    for (long p : primes) {
        const long order = count_points_mod(curve, p);
        cert.primes.push_back(p);
        cert.orders.push_back(order);
        g = std::gcd(g, order);
    }
    cert.order_gcd = g;
    cert.trivial = (g == 1);
    return cert;
}

std::vector<mpz_class> integral_halving_witnesses(const EllipticCurve& curve,
                                                  const mpz_class& target_x) {
    if (!curve.a().is_zero() || !curve.b().is_integer())
        throw std::invalid_argument(
            "integral_halving_witnesses: requires a curve y^2 = x^3 + b with integral b");
    const mpz_class b = curve.b().num();
    const mpz_class c = target_x;
    // x(2P) = (t^4 - 8bt) / (4(t^3 + b)) at P = (t, s); equating to c gives
    // t^4 - 4c t^3 - 8b t - 4bc = 0.
    const ZPoly quartic(std::vector<mpz_class>{-4 * b * c, -8 * b, 0, -4 * c, 1});
    return integer_roots(quartic);
}

TwoTorsionResult two_torsion_is_trivial(const EllipticCurve& curve) {
    // rational roots of x^3 + a x + b
    const ZPoly cubic =
        clear_denominators({curve.b(), curve.a(), Rational(0), Rational(1)});
    TwoTorsionResult res;
    std::optional<Rational> root;
    if (cubic.coeffs()[0] == 0) {
        root = Rational(0);
    } else {
        const auto nums = small_divisors(cubic.coeffs()[0]);
        const auto dens = small_divisors(cubic.leading());
        for (const auto& n : nums) {
            if (root)
                break;
            for (const auto& d : dens) {
                if (cubic.eval_homogeneous(n, d) == 0) {
                    root = Rational(n, d);
                    break;
                }
                if (cubic.eval_homogeneous(-n, d) == 0) {
                    root = Rational(-n, d);
                    break;
                }
            }
        }
    }
    res.trivial = !root.has_value();
    res.witness_root = root;
    return res;
}

IndependenceCertificate independence_certificate(const EllipticCurve& curve, const ECPoint& p,
                                                 const ECPoint& q,
                                                 const std::vector<long>& primes) {
    curve.require_on_curve(p);
    curve.require_on_curve(q);
    if (p.is_infinity() || q.is_infinity())
        throw std::invalid_argument("independence_certificate: points must be affine");
    if (!p.x().is_integer() || !p.y().is_integer() || !q.x().is_integer() || !q.y().is_integer())
        throw std::invalid_argument(
            "independence_certificate: points must have integral coordinates");

    IndependenceCertificate cert;
    cert.torsion = torsion_is_trivial(curve, primes);
    cert.two_torsion = two_torsion_is_trivial(curve);

    const ECPoint diff = curve.sub(p, q);
    if (diff.is_infinity()) {
        cert.failure_reason = "P - Q is the identity: the pair is dependent";
        return cert;
    }
    if (!diff.x().is_integer()) {
        cert.failure_reason =
            "P - Q has non-integral x-coordinate; the integral halving argument does not apply";
        return cert;
    }

    if (!cert.torsion.trivial) {
        cert.failure_reason = "torsion not certified trivial (gcd of orders " +
                              std::to_string(cert.torsion.order_gcd) + ")";
        return cert;
    }
    if (!cert.two_torsion.trivial) {
        cert.failure_reason =
            "curve has rational 2-torsion at x = " + cert.two_torsion.witness_root->str();
        return cert;
    }

    for (const Rational& x : {p.x(), q.x(), diff.x()}) {
        HalvingCheck check;
        check.x = x.num();
        check.witnesses = integral_halving_witnesses(curve, check.x);
        cert.halvings.push_back(check);
        if (!check.witnesses.empty() && cert.failure_reason.empty())
            cert.failure_reason = "x = " + check.x.get_str() + " has integral halving witness " +
                                  check.witnesses.front().get_str();
    }
    cert.independent = cert.failure_reason.empty();
    return cert;
}

}  // namespace duval
