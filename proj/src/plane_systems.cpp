#include "duval/plane_systems.hpp"

#include "duval/upoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace duval {

namespace {

constexpr int kMaxSolveDegree = 24;   // 3 * 8
constexpr int kMaxScanDegree = 9;     // 3 * 3

// chart of the last nonzero coordinate: that coordinate scaled to 1
struct Chart {
    ProjPoint point;
    int fixed;             // index of the coordinate normalized to 1
    std::array<int, 2> dirs;  // the two affine directions, ascending
};

Chart normalize_point(const ProjPoint& pt) {
    int fixed = -1;
    for (int v = 2; v >= 0; --v) {
        if (!pt[v].is_zero()) {
            fixed = v;
            break;
        }
    }
    if (fixed < 0)
        throw std::invalid_argument("projective point must be nonzero");
    Chart c;
    c.fixed = fixed;
    for (int v = 0; v < 3; ++v)
        c.point[v] = pt[v] / pt[fixed];
    int d = 0;
    for (int v = 0; v < 3; ++v)
        if (v != fixed)
            c.dirs[d++] = v;
    return c;
}

mpz_class falling_factorial(int n, int k) {
    mpz_class acc = 1;
    for (int i = 0; i < k; ++i)
        acc *= n - i;
    return acc;
}

// value of d^a/d(dirs[0]) d^b/d(dirs[1]) applied to X^e0 Y^e1 Z^e2 at the
// chart point
Rational monomial_jet(const Exponents& e, const Chart& chart, int a, int b) {
    const int e1 = e[chart.dirs[0]], e2 = e[chart.dirs[1]];
    if (a > e1 || b > e2)
        return Rational(0);
    Rational v(falling_factorial(e1, a) * falling_factorial(e2, b));
    const int rem1 = e1 - a, rem2 = e2 - b;
    if (rem1 > 0)
        v *= pow(chart.point[chart.dirs[0]], static_cast<unsigned long>(rem1));
    if (rem2 > 0)
        v *= pow(chart.point[chart.dirs[1]], static_cast<unsigned long>(rem2));
    return v;  // the fixed coordinate is 1
}

Rational poly_jet(const PlanePoly& f, const Chart& chart, int a, int b) {
    Rational acc(0);
    for (const auto& [e, c] : f.terms())
        acc += c * monomial_jet(e, chart, a, b);
    return acc;
}

}  // namespace

InterpolationProblem duval_system_problem(const PointConfig& cfg, int g) {
    if (g < 1 || g > 8)
        throw std::invalid_argument("duval_system_problem: supported range is 1 <= g <= 8");
    InterpolationProblem p;
    p.degree = 3 * g;
    for (std::size_t i = 0; i < 8; ++i)
        p.conditions.push_back({to_projective(cfg.points()[i]), g});
    if (g > 1)
        p.conditions.push_back({to_projective(cfg.points()[8]), g - 1});
    return p;
}

InterpolationProblem cubic_problem(const PointConfig& cfg) {
    InterpolationProblem p;
    p.degree = 3;
    for (const auto& pt : cfg.points())
        p.conditions.push_back({to_projective(pt), 1});
    return p;
}

long virtual_dimension(int degree, const std::vector<int>& mults) {
    long v = static_cast<long>(degree) * (degree + 3) / 2;
    for (int m : mults)
        v -= static_cast<long>(m) * (m + 1) / 2;
    return v;
}

RationalMatrix build_conditions(const InterpolationProblem& p) {
    if (p.degree < 1)
        throw std::invalid_argument("build_conditions: degree must be >= 1");
    if (p.degree > kMaxSolveDegree)
        throw std::invalid_argument("build_conditions: degree exceeds the supported cap");
    std::vector<Chart> charts;
    for (const auto& cond : p.conditions) {
        if (cond.multiplicity < 1)
            throw std::invalid_argument("build_conditions: multiplicity must be >= 1");
        charts.push_back(normalize_point(cond.point));
    }
    for (std::size_t i = 0; i < charts.size(); ++i)
        for (std::size_t j = i + 1; j < charts.size(); ++j)
            if (charts[i].point == charts[j].point)
                throw std::invalid_argument("build_conditions: coincident condition points");

    const auto monos = monomials_of_degree(p.degree);
    std::size_t nrows = 0;
    for (const auto& cond : p.conditions)
        nrows += static_cast<std::size_t>(cond.multiplicity) * (cond.multiplicity + 1) / 2;

    RationalMatrix m(nrows, monos.size());
    std::size_t row = 0;
    for (std::size_t ci = 0; ci < p.conditions.size(); ++ci) {
        const int mult = p.conditions[ci].multiplicity;
        for (int order = 0; order < mult; ++order) {
            for (int a = order; a >= 0; --a) {
                const int b = order - a;
                for (std::size_t col = 0; col < monos.size(); ++col)
                    m.at(row, col) = monomial_jet(monos[col], charts[ci], a, b);
                ++row;
            }
        }
    }
    return m;
}

LinearSystemResult solve_system(const InterpolationProblem& p) {
    LinearSystemResult res;
    res.problem = p;
    RationalMatrix m = build_conditions(p);
    res.rows = m.rows();
    res.cols = m.cols();
    std::vector<int> mults;
    for (const auto& c : p.conditions)
        mults.push_back(c.multiplicity);
    res.virtual_dim = virtual_dimension(p.degree, mults);

    const RankNullspace rn = rank_and_nullspace(m);
    res.rank = rn.rank;
    res.projective_dimension = static_cast<long>(res.cols - rn.rank) - 1;
    for (const auto& v : rn.basis) {
        PlanePoly f = PlanePoly::from_coefficients(p.degree, v);
        for (const auto& cond : p.conditions) {
            if (multiplicity_at(f, cond.point) < cond.multiplicity)
                throw std::logic_error("solve_system: basis element misses a multiplicity condition");
        }
        res.basis.push_back(std::move(f));
    }
    return res;
}

int multiplicity_at(const PlanePoly& f, const ProjPoint& pt) {
    const Chart chart = normalize_point(pt);
    if (f.is_zero())
        return f.degree() + 1;
    for (int order = 0; order <= f.degree(); ++order)
        for (int a = order; a >= 0; --a)
            if (!poly_jet(f, chart, a, order - a).is_zero())
                return order;
    return f.degree() + 1;
}

BasePoint base_point(const PointConfig& cfg, int g) {
    if (g < 1)
        throw std::invalid_argument("base_point: g must be >= 1");
    const EllipticCurve& e = cfg.curve();
    ECPoint acc = ECPoint::infinity();
    for (std::size_t i = 0; i < 8; ++i)
        acc = e.add_unchecked(acc, cfg.points()[i]);
    acc = e.scalar_mul(g, acc);
    acc = e.add_unchecked(acc, e.scalar_mul(g - 1, cfg.points()[8]));
    BasePoint bp;
    bp.group_point = e.negate(acc);
    bp.at_infinity = bp.group_point.is_infinity();
    bp.plane_point = to_projective(bp.group_point);
    return bp;
}

PlanePoly generic_member(const std::vector<PlanePoly>& basis, unsigned long seed) {
    if (basis.empty())
        throw std::invalid_argument("generic_member: empty basis");
    std::mt19937_64 rng(seed);
    PlanePoly acc;
    for (const auto& f : basis) {
        const long c = 1 + static_cast<long>(rng() % 997);
        acc = acc + f.scaled(Rational(c));
    }
    return acc;
}

namespace {

// Bivariate image of a homogeneous polynomial in the z = 1 chart, with
// denominators cleared: coefficient of y^j is an integer polynomial in x.
BiPoly chart_z1(const PlanePoly& f) {
    if (f.is_zero())
        return BiPoly();
    mpz_class scale = 1;
    for (const auto& [e, c] : f.terms())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.den().get_mpz_t());
    const int d = f.degree();
    std::vector<std::vector<mpz_class>> grid(static_cast<std::size_t>(d + 1),
                                             std::vector<mpz_class>(static_cast<std::size_t>(d + 1)));
    for (const auto& [e, c] : f.terms())
        grid[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] =
            c.num() * (scale / c.den());
    std::vector<ZPoly> coeffs;
    coeffs.reserve(grid.size());
    for (auto& row : grid)
        coeffs.emplace_back(std::move(row));
    return BiPoly(std::move(coeffs));
}

Rational eval_zpoly(const ZPoly& f, const Rational& x) {
    if (f.is_zero())
        return Rational(0);
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), x.den().get_mpz_t(),
               static_cast<unsigned long>(f.degree()));
    return Rational(f.eval_homogeneous(x.num(), x.den()), den_pow);
}

// univariate polynomial in y obtained by fixing x = x0, denominators cleared
ZPoly fix_x(const BiPoly& g, const Rational& x0) {
    std::vector<Rational> vals;
    for (int j = 0; j <= g.degree_y(); ++j)
        vals.push_back(eval_zpoly(g[static_cast<std::size_t>(j)], x0));
    return clear_denominators(vals);
}

// restriction of a homogeneous polynomial to the z = 0 line, substituted at
// (t, 1, 0): integer polynomial in t
ZPoly restrict_z0(const PlanePoly& f) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(f.degree() + 1));
    for (const auto& [e, c] : f.terms())
        if (e[2] == 0)
            coeffs[static_cast<std::size_t>(e[0])] = c;
    return clear_denominators(coeffs);
}

struct CandidateLess {
    bool operator()(const ProjPoint& a, const ProjPoint& b) const {
        if (a[2] != b[2])
            return b[2] < a[2];  // z = 1 chart before the line at infinity
        if (a[0] != b[0])
            return a[0] < b[0];
        return a[1] < b[1];
    }
};

}  // namespace

SingularLocus singular_locus(const PlanePoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("singular_locus: zero polynomial");
    if (f.degree() > kMaxScanDegree)
        throw std::invalid_argument("singular_locus: degree exceeds the supported cap");

    const PlanePoly fx = f.partial(0), fy = f.partial(1), fz = f.partial(2);
    const std::array<const PlanePoly*, 3> partials{&fx, &fy, &fz};

    SingularLocus locus;
    if (f.degree() == 0)
        return locus;  // a nonzero constant vanishes nowhere
    // a nonzero constant partial vanishes nowhere
    for (const auto* p : partials)
        if (!p->is_zero() && p->degree() == 0)
            return locus;

    std::map<ProjPoint, int, CandidateLess> found;
    auto consider = [&](const ProjPoint& pt) {
        for (const auto* p : partials)
            if (!p->is_zero() && !p->eval(pt).is_zero())
                return;
        found.emplace(pt, 0);
    };

    // ---- affine chart z = 1 ----
    std::vector<BiPoly> g;
    for (const auto* p : partials) {
        BiPoly b = chart_z1(*p);
        if (!b.is_zero())
            g.push_back(std::move(b));
    }
    if (g.size() < 2) {
        locus.positive_dimensional = true;
    } else {
        bool constant_partial_in_chart = false;
        for (const auto& gi : g)
            if (gi.degree_y() == 0 && gi[0].degree() == 0)
                constant_partial_in_chart = true;

        if (!constant_partial_in_chart) {
            std::vector<ZPoly> eliminants;
            for (const auto& gi : g)
                if (gi.degree_y() == 0 && gi[0].degree() >= 1)
                    eliminants.push_back(gi[0]);
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = i + 1; j < g.size(); ++j) {
                    if (g[i].degree_y() == 0 && g[j].degree_y() == 0)
                        continue;
                    ZPoly r = resultant_y(g[i], g[j]);
                    if (!r.is_zero())
                        eliminants.push_back(std::move(r));
                }
            }
            if (eliminants.empty()) {
                locus.positive_dimensional = true;
            } else {
                ZPoly r = eliminants[0];
                for (std::size_t i = 1; i < eliminants.size(); ++i)
                    r = gcd_poly(r, eliminants[i]);
                if (r.degree() >= 1) {
                    const ZPoly sf = squarefree_part(r);
                    const auto xroots = rational_roots(sf);
                    const int leftover = sf.degree() - static_cast<int>(xroots.size());
                    if (leftover > 0)
                        locus.unresolved_factor_degrees.push_back(leftover);
                    for (const auto& x0 : xroots) {
                        ZPoly common;
                        bool all_zero = true;
                        for (const auto& gi : g) {
                            ZPoly u = fix_x(gi, x0);
                            if (u.is_zero())
                                continue;
                            all_zero = false;
                            common = common.is_zero() ? u : gcd_poly(common, u);
                        }
                        if (all_zero) {
                            locus.positive_dimensional = true;  // whole fiber x = x0
                            continue;
                        }
                        if (common.degree() < 1)
                            continue;  // spurious eliminant root
                        const auto yroots = rational_roots(common);
                        const int yleft =
                            squarefree_part(common).degree() - static_cast<int>(yroots.size());
                        if (yleft > 0)
                            locus.unresolved_factor_degrees.push_back(yleft);
                        for (const auto& y0 : yroots)
                            consider({x0, y0, Rational(1)});
                    }
                }
            }
        }
    }

    // ---- line z = 0, points (t : 1 : 0) ----
    {
        std::vector<ZPoly> restricted;
        bool some_partial_survives = false;
        bool nonvanishing_constant = false;
        for (const auto* p : partials) {
            if (p->is_zero())
                continue;
            ZPoly r = restrict_z0(*p);
            if (r.is_zero())
                continue;
            some_partial_survives = true;
            if (r.degree() == 0)
                nonvanishing_constant = true;  // restriction is c * Y^deg
            else
                restricted.push_back(std::move(r));
        }
        if (!some_partial_survives) {
            locus.positive_dimensional = true;  // the whole line z = 0 is singular
        } else if (!nonvanishing_constant && !restricted.empty()) {
            ZPoly r = restricted[0];
            for (std::size_t i = 1; i < restricted.size(); ++i)
                r = gcd_poly(r, restricted[i]);
            if (r.degree() >= 1) {
                const ZPoly sf = squarefree_part(r);
                const auto troots = rational_roots(sf);
                const int leftover = sf.degree() - static_cast<int>(troots.size());
                if (leftover > 0)
                    locus.unresolved_factor_degrees.push_back(leftover);
                for (const auto& t0 : troots)
                    consider({t0, Rational(1), Rational(0)});
            }
        }
    }

    // ---- the remaining point (1 : 0 : 0) ----
    consider({Rational(1), Rational(0), Rational(0)});

    for (auto& [pt, mult] : found)
        mult = multiplicity_at(f, pt);
    for (const auto& [pt, mult] : found)
        locus.points.push_back({pt, mult});
    return locus;
}

}  // namespace duval
