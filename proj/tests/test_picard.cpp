#include "duval/picard.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace duval;

namespace {

const PointConfig& cfg() {
    return fixtures::paper_config();
}

DivisorClass duval_class_on_s(long g) {
    std::vector<long> m(10, g);
    m[8] = g - 1;
    m[9] = 1;
    return DivisorClass(3 * g, std::move(m));
}

ECPoint frozen(const char* x, const char* y) {
    return ECPoint(Rational::parse(x), Rational::parse(y));
}

// Halphen negative control: the ninth point is replaced by -(p1+...+p8).
PointConfig halphen_negative_config() {
    std::vector<ECPoint> pts(cfg().points().begin(), cfg().points().end() - 1);
    pts.push_back(frozen(fixtures::kNegSum8X, fixtures::kNegSum8Y));
    return PointConfig(cfg().curve(), std::move(pts));
}

// Cremona negative control: the second point is replaced by -(p1+p3), so the
// first three points sum to zero.
PointConfig cremona_negative_config() {
    std::vector<ECPoint> pts = cfg().points();
    pts[1] = ECPoint(Rational(1, 4), Rational(33, 8));
    return PointConfig(cfg().curve(), std::move(pts));
}

}  // namespace

TEST_CASE("intersection form") {
    const DivisorClass l(1, std::vector<long>(9, 0));
    CHECK(intersect(l, l) == 1);

    const DivisorClass j(3, std::vector<long>(10, 1));
    CHECK(intersect(duval_class_on_s(5), j) == 0);
    CHECK(intersect(duval_class_on_s(3), duval_class_on_s(3)) == 4);  // 2g - 2

    CHECK_THROWS_AS(intersect(l, j), std::invalid_argument);
    CHECK_THROWS_AS(DivisorClass(1, std::vector<long>(8, 0)), std::invalid_argument);
}

TEST_CASE("canonical class and adjunction") {
    const DivisorClass k9 = canonical_class(9);
    CHECK(intersect(k9, k9) == 0);
    const DivisorClass k10 = canonical_class(10);
    CHECK(intersect(k10, k10) == -1);
    CHECK_THROWS_AS(canonical_class(8), std::invalid_argument);

    for (long g : {2L, 3L, 4L, 7L}) {
        const DivisorClass c = duval_class_on_s(g);
        CHECK(intersect(c, c) == 2 * g - 2);
        CHECK((intersect(c, c) + intersect(c, k10)) / 2 + 1 == g);
    }
}

TEST_CASE("nagata class enumeration") {
    const auto k3 = nagata_classes(3);
    CHECK(k3.size() == 240);
    const auto k1 = nagata_classes(1);
    CHECK(k1.size() == 84);
    const auto k30 = nagata_classes(30);
    CHECK(k30.size() == 2400);
    CHECK_THROWS_AS(nagata_classes(0), std::invalid_argument);

    // canonical order: families ascend, n ascends, patterns lexicographic
    CHECK(k3[0].family == 1);
    CHECK(k3[0].n == 0);
    CHECK(k3[0].pattern == std::vector<int>{0, 1, 2});
    CHECK(k3[0].cls == DivisorClass(1, {1, 1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(k3[1].pattern == std::vector<int>{0, 1, 3});
    CHECK(k3[84].family == 2);
    CHECK(k3[168].family == 3);
    CHECK(k3[168].pattern == std::vector<int>{0, 1});
    CHECK(k3[168].cls == DivisorClass(3, {2, 0, 1, 1, 1, 1, 1, 1, 1}));

    const DivisorClass antik(3, std::vector<long>(9, 1));
    for (const auto& nc : k3) {
        CHECK(intersect(nc.cls, antik) == 0);
        if (nc.n == 0)
            CHECK(intersect(nc.cls, nc.cls) == -2);
    }

    // counts per family at k = 60
    const auto k60 = nagata_classes(60);
    CHECK(k60.size() == 4800);
    long fam[4] = {0, 0, 0, 0};
    for (const auto& nc : k60)
        fam[nc.family]++;
    CHECK(fam[1] == 20 * 84);
    CHECK(fam[2] == 20 * 84);
    CHECK(fam[3] == 20 * 72);
}

TEST_CASE("configuration validation") {
    std::vector<ECPoint> pts = cfg().points();
    CHECK_THROWS_AS(PointConfig(cfg().curve(), std::vector<ECPoint>(pts.begin(), pts.end() - 1)),
                    std::invalid_argument);
    std::vector<ECPoint> dup = pts;
    dup[8] = dup[3];  // duplicate (4, 9)
    CHECK_THROWS_AS(PointConfig(cfg().curve(), dup), std::invalid_argument);
    std::vector<ECPoint> off = pts;
    off[4] = ECPoint(Rational(52), Rational(374));
    CHECK_THROWS_AS(PointConfig(cfg().curve(), off), std::domain_error);
    std::vector<ECPoint> inf = pts;
    inf[0] = ECPoint::infinity();
    CHECK_THROWS_AS(PointConfig(cfg().curve(), inf), std::invalid_argument);

    LatticeCoords bad;
    bad.basis = {1, 3};
    bad.coords = {{1, 0}, {2, -1}, {0, 1}, {1, -1}, {3, -1}, {4, -3}, {2, 0}, {-1, 2}, {1, -1}};
    CHECK_THROWS_AS(PointConfig(cfg().curve(), pts, bad), std::invalid_argument);
}

TEST_CASE("restriction to the anticanonical cubic") {
    const DivisorClass b(3, std::vector<long>(9, 1));
    const ECPoint sum = restrict_to_anticanonical(b, cfg());
    CHECK(sum == frozen(fixtures::kSum9X, fixtures::kSum9Y));

    // the sum is 13p1 - 2p3, not 13p1 - p3
    const EllipticCurve& e = cfg().curve();
    const ECPoint combo2 =
        e.add(e.scalar_mul(13, cfg().points()[0]), e.scalar_mul(-2, cfg().points()[2]));
    const ECPoint combo1 =
        e.add(e.scalar_mul(13, cfg().points()[0]), e.scalar_mul(-1, cfg().points()[2]));
    CHECK(sum == combo2);
    CHECK(sum != combo1);
    CHECK(combo1 == frozen(fixtures::kCombo13m1X, fixtures::kCombo13m1Y));

    const DivisorClass a1(1, {1, 1, 1, 0, 0, 0, 0, 0, 0});
    const ECPoint p123 = restrict_to_anticanonical(a1, cfg());
    CHECK_FALSE(p123.is_infinity());
    CHECK(p123 == e.add(e.add(cfg().points()[0], cfg().points()[1]), cfg().points()[2]));

    CHECK(restrict_to_anticanonical(DivisorClass(0, std::vector<long>(9, 0)), cfg())
              .is_infinity());
    CHECK_THROWS_AS(restrict_to_anticanonical(DivisorClass(1, std::vector<long>(9, 0)), cfg()),
                    std::invalid_argument);
    // the constructed dependent configuration restricts the full cubic class
    // to the identity
    CHECK(restrict_to_anticanonical(b, halphen_negative_config()).is_infinity());
}

TEST_CASE("halphen certification") {
    const auto pass60 = certify_halphen(cfg(), 60);
    CHECK(pass60.pass);
    CHECK(pass60.checks.size() == 20);
    for (const auto& c : pass60.checks)
        CHECK(c.nonzero);

    const auto pass3 = certify_halphen(cfg(), 3);
    CHECK(pass3.pass);
    CHECK(pass3.checks.size() == 1);

    CHECK_THROWS_AS(certify_halphen(cfg(), 2), std::invalid_argument);

    const auto fail = certify_halphen(halphen_negative_config(), 9);
    CHECK_FALSE(fail.pass);
    CHECK(*fail.failing_d == 1);
    CHECK(*fail.witness == DivisorClass(3, std::vector<long>(9, 1)));
    CHECK(fail.sum.is_infinity());

    // torsion shortcut
    const auto torsion = torsion_is_trivial(cfg().curve(), {5, 7});
    const auto quick = certify_halphen(cfg(), 60, &torsion);
    CHECK(quick.pass);
    CHECK(quick.short_circuited);
    CHECK(quick.checks.size() == 1);
}

TEST_CASE("cremona certification") {
    const auto pass30 = certify_cremona(cfg(), 30);
    CHECK(pass30.pass);
    CHECK(pass30.classes_checked == 2400);
    CHECK(pass30.groups.size() == 30);  // 10 values of n per family

    const auto pass1 = certify_cremona(cfg(), 1);
    CHECK(pass1.pass);
    CHECK(pass1.classes_checked == 84);

    const auto fail = certify_cremona(cremona_negative_config(), 3);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->family == 1);
    CHECK(fail.witness->n == 0);
    CHECK(fail.witness->pattern == std::vector<int>{0, 1, 2});
    CHECK(*fail.witness_index == 0);

    // thread count must not change the outcome
    const auto pass30_mt = certify_cremona(cfg(), 30, 4);
    CHECK(pass30_mt.pass == pass30.pass);
    CHECK(pass30_mt.classes_checked == pass30.classes_checked);
    const auto fail_mt = certify_cremona(cremona_negative_config(), 3, 4);
    CHECK(*fail_mt.witness_index == 0);
}

TEST_CASE("lattice prediction agrees with the group law on every class at k = 30") {
    const auto classes = nagata_classes(30);
    REQUIRE(classes.size() == 2400);
    long zero_predictions = 0;
    for (const auto& nc : classes) {
        const auto combo = cfg().lattice_combination(nc.cls);
        const bool lattice_zero = combo[0] == 0 && combo[1] == 0;
        const bool group_zero = restrict_to_anticanonical(nc.cls, cfg()).is_infinity();
        CHECK(lattice_zero == group_zero);
        if (lattice_zero)
            ++zero_predictions;
    }
    CHECK(zero_predictions == 0);  // the configuration is 30-general
}

TEST_CASE("three-subset restrictions match the subset sums") {
    const EllipticCurve& e = cfg().curve();
    const auto classes = nagata_classes(1);
    REQUIRE(classes.size() == 84);
    std::set<std::string> distinct;
    for (const auto& nc : classes) {
        const ECPoint direct = e.add(
            e.add(cfg().points()[static_cast<std::size_t>(nc.pattern[0])],
                  cfg().points()[static_cast<std::size_t>(nc.pattern[1])]),
            cfg().points()[static_cast<std::size_t>(nc.pattern[2])]);
        CHECK(restrict_to_anticanonical(nc.cls, cfg()) == direct);
        distinct.insert(direct.str());
    }
    CHECK(distinct.size() == 36);  // sums coincide across subsets
}

TEST_CASE("all-k certification of the built-in points") {
    const auto cert = certify_all_k(cfg());
    CHECK(cert.pass);
    CHECK(cert.independence.independent);
    CHECK(cert.f_values == std::vector<long>{1, 1, 1, 0, 2, 1, 2, 1, 2});
    CHECK(cert.zero_indices == std::vector<std::size_t>{3});
    CHECK(cert.functional_nonnegative);
    CHECK(cert.zero_vectors_nonzero);
    CHECK(cert.zero_vectors_one_sided);
}

TEST_CASE("all-k pass implies finite-k passes") {
    REQUIRE(certify_all_k(cfg()).pass);
    for (int k : {3, 6, 30, 60}) {
        const auto cert = certify(cfg(), k);
        CHECK(cert.pass);
    }
}

TEST_CASE("all-k fallback on configurations the functional cannot handle") {
    // a point and its negative both present: the functional goes negative
    std::vector<ECPoint> pts = cfg().points();
    pts[1] = ECPoint(Rational(-2), Rational(-3));  // -p1
    LatticeCoords lat = *cfg().lattice();
    lat.coords[1] = {-1, 0};
    const PointConfig with_negative(cfg().curve(), pts, lat);
    const auto cert = certify_all_k(with_negative);
    CHECK_FALSE(cert.pass);
    CHECK_FALSE(cert.functional_nonnegative);

    const auto full = certify_all(with_negative);
    CHECK_FALSE(full.pass);
    CHECK(full.k.has_value());  // fell back to finite certification
    CHECK(full.halphen.has_value());
    CHECK(full.cremona.has_value());

    // two oppositely-directed vectors on the f = 0 line
    std::vector<ECPoint> pts2 = cfg().points();
    pts2[4] = ECPoint(Rational(4), Rational(-9));  // -(p1 - p3)
    LatticeCoords lat2 = *cfg().lattice();
    lat2.coords[4] = {-1, 1};
    const PointConfig opposite(cfg().curve(), pts2, lat2);
    const auto cert2 = certify_all_k(opposite);
    CHECK_FALSE(cert2.pass);
    CHECK(cert2.functional_nonnegative);
    CHECK_FALSE(cert2.zero_vectors_one_sided);

    // all f-values positive passes
    const EllipticCurve& e = cfg().curve();
    std::vector<ECPoint> pts3 = cfg().points();
    pts3[3] = e.add(cfg().points()[0], e.scalar_mul(2, cfg().points()[2]));  // p1 + 2p3
    LatticeCoords lat3 = *cfg().lattice();
    lat3.coords[3] = {1, 2};
    const PointConfig positive(cfg().curve(), pts3, lat3);
    const auto cert3 = certify_all_k(positive);
    CHECK(cert3.pass);

    CHECK_THROWS_AS(certify_all_k(PointConfig(cfg().curve(), cfg().points())),
                    std::invalid_argument);
}

TEST_CASE("negative controls certify as failures end to end") {
    const auto halphen_fail = certify(halphen_negative_config(), 6);
    CHECK_FALSE(halphen_fail.pass);
    CHECK_FALSE(halphen_fail.halphen->pass);

    const auto cremona_fail = certify(cremona_negative_config(), 3);
    CHECK_FALSE(cremona_fail.pass);
    CHECK_FALSE(cremona_fail.cremona->pass);
    CHECK(cremona_fail.cremona->witness->pattern == std::vector<int>{0, 1, 2});
}

TEST_CASE("a different curve: positive multiples of a non-torsion generator") {
    const EllipticCurve e2(Rational(0), Rational(2));
    const ECPoint gen(Rational(-1), Rational(1));
    std::vector<ECPoint> pts;
    for (long m = 1; m <= 9; ++m)
        pts.push_back(e2.scalar_mul(m, gen));
    const PointConfig cfg2(e2, pts);

    // every class restriction is a positive multiple of the generator
    const auto cert = certify(cfg2, 6);
    CHECK(cert.pass);
    CHECK(cert.halphen->pass);
    CHECK(cert.cremona->pass);
    // gcd over {5, 7} alone is 3 here; the third prime settles it
    const auto partial = torsion_is_trivial(e2, {5, 7});
    CHECK_FALSE(partial.trivial);
    CHECK(partial.order_gcd == 3);
    const auto torsion = torsion_is_trivial(e2, {5, 7, 13});
    CHECK(torsion.trivial);
}
