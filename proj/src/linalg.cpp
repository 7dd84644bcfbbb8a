#include "duval/matrix.hpp"

#include <cstdint>
#include <string>

namespace duval {

namespace {

// Row-echelon form of the denominator-cleared integer matrix, computed with
// one-step Bareiss updates so every intermediate entry stays an exact minor.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon bareiss_echelon(const RationalMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = m.at(i, j).num() * (scale / m.at(i, j).den());
    }

    Echelon ech;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                const mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("rank_and_nullspace: inexact minor division");
                a[i][j] = std::move(q);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ech.pivot_cols.push_back(c);
        ++r;
    }
    a.resize(r);
    ech.rows = std::move(a);
    return ech;
}

std::vector<Rational> normalized_integer_vector(const std::vector<Rational>& v) {
    mpz_class scale = 1;
    for (const auto& x : v)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> iv(v.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        iv[i] = v[i].num() * (scale / v[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), iv[i].get_mpz_t());
    }
    int lead_sign = 0;
    for (const auto& x : iv) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class e = iv[i];
        if (content != 0)
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
        if (lead_sign < 0)
            e = -e;
        out[i] = Rational(e);
    }
    return out;
}

}  // namespace

RankNullspace rank_and_nullspace(const RationalMatrix& m) {
    const std::size_t nc = m.cols();
    Echelon ech = bareiss_echelon(m);
    const std::size_t rank = ech.pivot_cols.size();

    std::vector<bool> is_pivot(nc, false);
    for (auto c : ech.pivot_cols)
        is_pivot[c] = true;

    RankNullspace out;
    out.rank = rank;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<Rational> v(nc, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t ii = rank; ii-- > 0;) {
            const std::size_t pc = ech.pivot_cols[ii];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < nc; ++j) {
                if (!v[j].is_zero() && ech.rows[ii][j] != 0)
                    acc += Rational(ech.rows[ii][j]) * v[j];
            }
            v[pc] = -acc / Rational(ech.rows[ii][pc]);
        }
        out.basis.push_back(normalized_integer_vector(v));
    }
    return out;
}

BadReductionError::BadReductionError(std::size_t row_, std::size_t col_, long prime_)
    : std::runtime_error("rank_modular: denominator divisible by " + std::to_string(prime_) +
                         " at entry (" + std::to_string(row_) + "," + std::to_string(col_) + ")"),
      row(row_), col(col_), prime(prime_) {}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_modular(const RationalMatrix& m, long prime) {
    if (prime < 2 || prime > (1L << 31))
        throw std::invalid_argument("rank_modular: prime out of supported range");
    const std::size_t nr = m.rows(), nc = m.cols();
    const std::uint64_t p = static_cast<std::uint64_t>(prime);
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            const Rational& x = m.at(i, j);
            const std::uint64_t den = mpz_fdiv_ui(x.den().get_mpz_t(), p);
            if (den == 0)
                throw BadReductionError(i, j, prime);
            const std::uint64_t num = mpz_fdiv_ui(x.num().get_mpz_t(), p);
            a[i][j] = num * pow_mod(den, p - 2, p) % p;
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t piv = rank;
        while (piv < nr && a[piv][c] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(a[rank], a[piv]);
        const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            if (a[i][c] == 0)
                continue;
            const std::uint64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < nc; ++j)
                a[i][j] = (a[i][j] + p - f * a[rank][j] % p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace duval
