#include "duval/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace duval {

void ZPoly::normalize() {
    while (!coeff_.empty() && coeff_.back() == 0)
        coeff_.pop_back();
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : coeff_(std::move(coeffs)) {
    normalize();
}

ZPoly ZPoly::constant(const mpz_class& c) {
    ZPoly p;
    if (c != 0)
        p.coeff_.push_back(c);
    return p;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<mpz_class> c(std::max(coeff_.size(), o.coeff_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeff_.size())
            c[i] += coeff_[i];
        if (i < o.coeff_.size())
            c[i] += o.coeff_[i];
    }
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    return *this + (-o);
}

ZPoly ZPoly::operator-() const {
    std::vector<mpz_class> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        c[i] = -coeff_[i];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero())
        return ZPoly();
    std::vector<mpz_class> c(coeff_.size() + o.coeff_.size() - 1);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j)
            c[i + j] += coeff_[i] * o.coeff_[j];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::scaled(const mpz_class& c) const {
    if (c == 0)
        return ZPoly();
    std::vector<mpz_class> out(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        out[i] = coeff_[i] * c;
    return ZPoly(std::move(out));
}

ZPoly ZPoly::shifted(int k) const {
    if (is_zero() || k == 0)
        return *this;
    if (k < 0)
        throw std::invalid_argument("ZPoly::shifted: negative shift");
    std::vector<mpz_class> out(coeff_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        out[i + static_cast<std::size_t>(k)] = coeff_[i];
    return ZPoly(std::move(out));
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero())
        throw std::domain_error("ZPoly::divexact: division by zero");
    if (is_zero())
        return ZPoly();
    if (degree() < d.degree())
        throw std::domain_error("ZPoly::divexact: not divisible");
    std::vector<mpz_class> rem = coeff_;
    std::vector<mpz_class> quot(coeff_.size() - d.coeff_.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& top = rem[k + d.coeff_.size() - 1];
        if (top == 0)
            continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (r != 0)
            throw std::domain_error("ZPoly::divexact: not divisible");
        quot[k] = q;
        for (std::size_t i = 0; i < d.coeff_.size(); ++i)
            rem[k + i] -= q * d.coeff_[i];
    }
    for (const auto& x : rem)
        if (x != 0)
            throw std::domain_error("ZPoly::divexact: nonzero remainder");
    return ZPoly(std::move(quot));
}

ZPoly ZPoly::derivative() const {
    if (coeff_.size() <= 1)
        return ZPoly();
    std::vector<mpz_class> c(coeff_.size() - 1);
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        c[i - 1] = coeff_[i] * static_cast<long>(i);
    return ZPoly(std::move(c));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeff_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero())
        return ZPoly();
    const mpz_class g = content();
    std::vector<mpz_class> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        mpz_divexact(c[i].get_mpz_t(), coeff_[i].get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(c));
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = coeff_.size(); i-- > 0;)
        acc = acc * x + coeff_[i];
    return acc;
}

mpz_class ZPoly::eval_homogeneous(const mpz_class& num, const mpz_class& den) const {
    if (is_zero())
        return 0;
    mpz_class acc = 0, den_pow = 1;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        acc = acc * num + coeff_[i] * den_pow;
        den_pow *= den;
    }
    return acc;
}

std::string ZPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        if (coeff_[i] == 0)
            continue;
        if (os.tellp() > 0)
            os << (coeff_[i] > 0 ? " + " : " - ");
        else if (coeff_[i] < 0)
            os << "-";
        mpz_class a = abs(coeff_[i]);
        if (a != 1 || i == 0)
            os << a.get_str();
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

ZPoly clear_denominators(const std::vector<Rational>& coeffs) {
    mpz_class scale = 1;
    for (const auto& c : coeffs)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i] = coeffs[i].num() * (scale / coeffs[i].den());
    return ZPoly(std::move(out));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod b, computed without fractions.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int k = a.degree() - db;
        a = a.scaled(b.leading()) - b.scaled(a.leading()).shifted(k);
    }
    return a;
}

ZPoly positive_primitive(const ZPoly& p) {
    if (p.is_zero())
        return p;
    ZPoly q = p.primitive_part();
    return q.leading() < 0 ? -q : q;
}

}  // namespace

ZPoly gcd_poly(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = positive_primitive(a0);
    ZPoly b = positive_primitive(b0);
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = positive_primitive(r);
    }
    return positive_primitive(a);
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.is_zero())
        return ZPoly();
    const ZPoly p = positive_primitive(f);
    if (p.degree() == 0)
        return ZPoly::constant(1);
    const ZPoly g = gcd_poly(p, p.derivative());
    return positive_primitive(p.divexact(g));
}

std::vector<mpz_class> small_divisors(const mpz_class& n) {
    mpz_class mz = abs(n);
    if (mz == 0)
        throw std::invalid_argument("small_divisors: zero has no divisor list");
    if (mz > mpz_class("1000000000000000"))
        throw std::invalid_argument("small_divisors: operand too large for trial division");
    std::uint64_t m = mz.get_ui();
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t d = 2; d * d <= m; d = (d == 2 ? 3 : d + 2)) {
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e > 0)
            factors.emplace_back(d, e);
    }
    if (m > 1)
        factors.emplace_back(m, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t count = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= mpz_class(static_cast<unsigned long>(p));
            for (std::size_t j = 0; j < count; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

std::vector<mpz_class> integer_roots(const ZPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("integer_roots: zero polynomial");
    ZPoly p = f;
    std::vector<mpz_class> roots;
    std::size_t low = 0;
    while (low < p.coeffs().size() && p.coeffs()[low] == 0)
        ++low;
    if (low > 0) {
        roots.push_back(0);
        std::vector<mpz_class> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
        p = ZPoly(std::move(c));
    }
    if (p.degree() >= 1) {
        for (const auto& d : small_divisors(p.coeffs()[0])) {
            if (p.eval(d) == 0)
                roots.push_back(d);
            if (p.eval(-d) == 0)
                roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

using u64 = std::uint64_t;

u64 pow_mod_u64(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = static_cast<u64>(static_cast<unsigned __int128>(r) * b % p);
        b = static_cast<u64>(static_cast<unsigned __int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

std::vector<u64> reduce_mod(const ZPoly& f, u64 p) {
    std::vector<u64> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::vector<u64> poly_mod_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    const u64 inv = pow_mod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const u64 f = static_cast<u64>(static_cast<unsigned __int128>(a.back()) * inv % p);
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const u64 sub = static_cast<u64>(static_cast<unsigned __int128>(f) * b[i] % p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        if (a.empty())
            break;
    }
    return a;
}

bool squarefree_mod(const ZPoly& f, u64 p) {
    std::vector<u64> a = reduce_mod(f, p);
    if (a.size() != f.coeffs().size())
        return false;  // leading coefficient vanished
    std::vector<u64> b(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        b[i - 1] = static_cast<u64>(static_cast<unsigned __int128>(a[i]) * (i % p) % p);
    while (!b.empty() && b.back() == 0)
        b.pop_back();
    if (b.empty())
        return false;
    // gcd(f, f') must be constant
    while (!b.empty()) {
        auto r = poly_mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

u64 eval_mod(const std::vector<u64>& f, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        acc = static_cast<u64>((static_cast<unsigned __int128>(acc) * x + f[i]) % p);
    return acc;
}

// Unique p/q with p = q*r mod M, |p| <= num_bound, 0 < q <= den_bound,
// provided 2*num_bound*den_bound < M. Returns false if none exists.
bool rational_reconstruct(const mpz_class& r, const mpz_class& M, const mpz_class& num_bound,
                          const mpz_class& den_bound, mpz_class& num, mpz_class& den) {
    mpz_class r0 = M, r1 = r % M, t0 = 0, t1 = 1;
    while (r1 > num_bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0)
        return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > den_bound)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return false;
    num = r1;
    den = t1;
    return true;
}

}  // namespace

std::vector<Rational> rational_roots(const ZPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    ZPoly p = f;
    std::size_t low = 0;
    while (low < p.coeffs().size() && p.coeffs()[low] == 0)
        ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<mpz_class> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
        p = ZPoly(std::move(c));
    }
    if (p.degree() >= 1) {
        const ZPoly g = squarefree_part(p);
        const mpz_class num_bound = abs(g.coeffs()[0]);
        const mpz_class den_bound = abs(g.leading());

        u64 prime = 10007;
        mpz_class pz;
        while (!squarefree_mod(g, prime)) {
            pz = prime;
            mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
            prime = pz.get_ui();
            if (prime > 2'000'000)
                throw std::runtime_error("rational_roots: no good prime found");
        }

        const auto gm = reduce_mod(g, prime);
        std::vector<u64> residues;
        for (u64 x = 0; x < prime; ++x)
            if (eval_mod(gm, x, prime) == 0)
                residues.push_back(x);

        mpz_class target = 2 * num_bound * den_bound + 1;
        const ZPoly gd = g.derivative();
        for (u64 r0 : residues) {
            mpz_class modulus = prime;
            mpz_class r = r0;
            while (modulus < target) {
                modulus *= modulus;
                mpz_class deriv = gd.eval(r) % modulus;
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t()) == 0)
                    throw std::runtime_error("rational_roots: lost invertibility during lifting");
                r = (r - g.eval(r) * inv) % modulus;
                if (r < 0)
                    r += modulus;
            }
            mpz_class num, den;
            if (!rational_reconstruct(r, modulus, num_bound, den_bound, num, den))
                continue;
            if (g.eval_homogeneous(num, den) == 0)
                roots.emplace_back(num, den);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

void BiPoly::normalize() {
    while (!coeff_.empty() && coeff_.back().is_zero())
        coeff_.pop_back();
}

BiPoly::BiPoly(std::vector<ZPoly> coeffs) : coeff_(std::move(coeffs)) {
    normalize();
}

ZPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        return ZPoly();
    const int m = f.degree_y();
    const int n = g.degree_y();
    if (m == 0 && n == 0)
        return ZPoly::constant(1);
    if (m == 0) {
        ZPoly acc = ZPoly::constant(1);
        for (int i = 0; i < n; ++i)
            acc = acc * f[0];
        return acc;
    }
    if (n == 0) {
        ZPoly acc = ZPoly::constant(1);
        for (int i = 0; i < m; ++i)
            acc = acc * g[0];
        return acc;
    }

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<ZPoly>> a(size, std::vector<ZPoly>(size));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + m - i)] =
                f[static_cast<std::size_t>(i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            a[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + n - i)] =
                g[static_cast<std::size_t>(i)];

    // fraction-free determinant
    ZPoly prev = ZPoly::constant(1);
    int sign = 1;
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t piv = c;
        while (piv < size && a[piv][c].is_zero())
            ++piv;
        if (piv == size)
            return ZPoly();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < size; ++i) {
            for (std::size_t j = c + 1; j < size; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]).divexact(prev);
            a[i][c] = ZPoly();
        }
        prev = a[c][c];
    }
    ZPoly det = a[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

}  // namespace duval
