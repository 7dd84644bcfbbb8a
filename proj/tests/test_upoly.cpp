#include "duval/upoly.hpp"

#include <doctest.h>

#include <random>

using duval::BiPoly;
using duval::Rational;
using duval::ZPoly;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return ZPoly(std::move(c));
}

ZPoly random_zpoly(std::mt19937_64& rng, int max_deg) {
    std::vector<mpz_class> c(1 + rng() % static_cast<unsigned long>(max_deg + 1));
    for (auto& v : c)
        v = static_cast<long>(rng() % 41) - 20;
    return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and exact division") {
    const ZPoly a = zp({1, 2});       // 1 + 2x
    const ZPoly b = zp({-3, 0, 1});   // x^2 - 3
    CHECK((a * b).divexact(a) == b);
    CHECK((a * b).divexact(b) == a);
    CHECK_THROWS_AS(b.divexact(a), std::domain_error);
    CHECK(zp({0}).is_zero());
    CHECK(a.eval(3) == 7);
    CHECK(b.derivative() == zp({0, 2}));
    CHECK(zp({2, 4, 6}).content() == 2);
    CHECK(zp({2, 4, 6}).primitive_part() == zp({1, 2, 3}));
}

TEST_CASE("multiplication and division round trip on random inputs") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const ZPoly a = random_zpoly(rng, 6), b = random_zpoly(rng, 6);
        if (a.is_zero() || b.is_zero())
            continue;
        CHECK((a * b).divexact(b) == a);
    }
}

TEST_CASE("gcd and squarefree part") {
    const ZPoly x_minus_1 = zp({-1, 1});
    const ZPoly x_plus_2 = zp({2, 1});
    CHECK(duval::gcd_poly(zp({-1, 0, 1}), zp({-1, 0, 0, 1})) == x_minus_1);
    CHECK(duval::gcd_poly(zp({6}), zp({4})) == zp({1}));  // primitive convention
    const ZPoly f = x_minus_1 * x_minus_1 * x_plus_2;
    CHECK(duval::squarefree_part(f) == x_minus_1 * x_plus_2);
    // gcd is invariant under content and sign
    CHECK(duval::gcd_poly(f.scaled(-6), f.scaled(10)) == f.primitive_part());
}

TEST_CASE("divisors and integer roots") {
    auto divs = duval::small_divisors(mpz_class(136));
    CHECK(divs.size() == 8);  // 136 = 2^3 * 17
    CHECK_THROWS_AS(duval::small_divisors(mpz_class(0)), std::invalid_argument);

    // (x - 3)(x + 5)(x^2 + 1)
    const ZPoly f = zp({-3, 1}) * zp({5, 1}) * zp({1, 0, 1});
    const auto roots = duval::integer_roots(f);
    CHECK(roots == std::vector<mpz_class>{-5, 3});

    // constant-term-zero case: x is factored out first
    const ZPoly g = zp({0, 0, -4, 1});  // x^2(x - 4)
    CHECK(duval::integer_roots(g) == std::vector<mpz_class>{0, 4});
}

TEST_CASE("rational roots via modular lifting") {
    // 4(x - 1/4)(x + 2)(x - 5234)(x^2 - 2)
    const ZPoly f = zp({-1, 4}) * zp({2, 1}) * zp({-5234, 1}) * zp({-2, 0, 1});
    const auto roots = duval::rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-2));
    CHECK(roots[1] == Rational(1, 4));
    CHECK(roots[2] == Rational(5234));

    // repeated roots are reported once
    const ZPoly g = zp({-1, 1}) * zp({-1, 1}) * zp({3, 7});
    const auto groots = duval::rational_roots(g);
    REQUIRE(groots.size() == 2);
    CHECK(groots[0] == Rational(-3, 7));
    CHECK(groots[1] == Rational(1));

    // huge coefficients: scale by a 200-digit constant
    mpz_class big = 1;
    for (int i = 0; i < 200; ++i)
        big *= 10;
    big += 7;
    const auto scaled_roots = duval::rational_roots(f.scaled(big));
    CHECK(scaled_roots == roots);
}

TEST_CASE("rational roots agree with integer enumeration on random products") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        ZPoly f = zp({1});
        for (int k = 0; k < 3; ++k) {
            const long r = static_cast<long>(rng() % 39) - 19;
            f = f * zp({-r, 1});
        }
        f = f * zp({1, 0, 0, 1});  // irrational cubic factor x^3 + 1 ... has root -1
        const auto expect = duval::integer_roots(f);
        const auto got = duval::rational_roots(f);
        std::vector<mpz_class> got_ints;
        for (const auto& r : got) {
            REQUIRE(r.is_integer());
            got_ints.push_back(r.num());
        }
        CHECK(got_ints == expect);
    }
}

TEST_CASE("resultants") {
    // Res_y(y - x^2, y - x) = x^2 - x up to sign
    const BiPoly parabola({zp({0, 0, -1}), zp({1})});
    const BiPoly diagonal({zp({0, -1}), zp({1})});
    const ZPoly r = duval::resultant_y(parabola, diagonal);
    const ZPoly expect = zp({0, -1, 1});
    CHECK((r == expect || r == -expect));
    const auto roots = duval::rational_roots(r);
    CHECK(roots == std::vector<Rational>{Rational(0), Rational(1)});

    // common factor makes the resultant vanish
    const BiPoly common1({zp({0, -1}), zp({1})});                        // y - x
    const BiPoly product({zp({0, 0, 0, 1}), zp({0, -1, -1}), zp({1})});  // (y-x)(y-x^2)
    CHECK(duval::resultant_y(common1, product).is_zero());

    // degree-0 conventions
    const BiPoly const_c({zp({3, 1})});
    CHECK(duval::resultant_y(const_c, diagonal) == zp({3, 1}));
    CHECK(duval::resultant_y(BiPoly(), diagonal).is_zero());
}

TEST_CASE("resultant matches direct elimination on a known intersection") {
    // circle x^2 + y^2 - 25 and line y = x - 1 meet where 2x^2 - 2x - 24 = 0
    const BiPoly circle({zp({-25, 0, 1}), ZPoly(), zp({1})});
    const BiPoly line({zp({1, -1}), zp({1})});
    const ZPoly r = duval::resultant_y(circle, line);
    const auto roots = duval::rational_roots(r);
    CHECK(roots == std::vector<Rational>{Rational(-3), Rational(4)});
}
