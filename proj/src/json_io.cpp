#include "duval/json_io.hpp"

#include <fstream>

namespace duval {

PointConfig builtin_config() {
    const EllipticCurve curve(Rational(0), Rational(17));
    // The sixth point is 4*p1 - 3*p3 = (5234, -378661); 378661^2 = 5234^3 + 17
    // exactly, while the truncated variant (5234, 37866) is not on the curve.
    std::vector<ECPoint> pts{
        ECPoint(Rational(-2), Rational(3)),      ECPoint(Rational(-1), Rational(-4)),
        ECPoint(Rational(2), Rational(5)),       ECPoint(Rational(4), Rational(9)),
        ECPoint(Rational(52), Rational(375)),    ECPoint(Rational(5234), Rational(-378661)),
        ECPoint(Rational(8), Rational(-23)),     ECPoint(Rational(43), Rational(282)),
        ECPoint(Rational(1, 4), Rational(-33, 8))};
    LatticeCoords lat;
    lat.basis = {1, 3};
    lat.coords = {{1, 0}, {2, -1}, {0, 1}, {1, -1}, {3, -1}, {4, -3}, {2, 0}, {-1, 2}, {1, 1}};
    return PointConfig(curve, std::move(pts), lat);
}

json config_to_json(const PointConfig& cfg) {
    json j;
    j["curve"]["a"] = cfg.curve().a().str();
    j["curve"]["b"] = cfg.curve().b().str();
    json pts = json::array();
    for (const auto& p : cfg.points())
        pts.push_back(json::array({p.x().str(), p.y().str()}));
    j["points"] = std::move(pts);
    if (cfg.lattice()) {
        json lat;
        lat["basis"] = json::array({cfg.lattice()->basis[0], cfg.lattice()->basis[1]});
        json coords = json::array();
        for (const auto& c : cfg.lattice()->coords)
            coords.push_back(json::array({c[0], c[1]}));
        lat["coords"] = std::move(coords);
        j["lattice"] = std::move(lat);
    }
    return j;
}

PointConfig config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("curve") || !j.contains("points"))
        throw std::invalid_argument("configuration: expected {curve, points[, lattice]}");
    const auto& jc = j.at("curve");
    EllipticCurve curve(Rational::parse(jc.at("a").get<std::string>()),
                        Rational::parse(jc.at("b").get<std::string>()));
    std::vector<ECPoint> pts;
    for (const auto& jp : j.at("points")) {
        if (!jp.is_array() || jp.size() != 2)
            throw std::invalid_argument("configuration: each point must be [\"x\",\"y\"]");
        pts.emplace_back(Rational::parse(jp.at(0).get<std::string>()),
                         Rational::parse(jp.at(1).get<std::string>()));
    }
    std::optional<LatticeCoords> lat;
    if (j.contains("lattice")) {
        LatticeCoords l;
        const auto& jl = j.at("lattice");
        l.basis = {jl.at("basis").at(0).get<int>(), jl.at("basis").at(1).get<int>()};
        for (const auto& jc2 : jl.at("coords"))
            l.coords.push_back({jc2.at(0).get<long>(), jc2.at(1).get<long>()});
        lat = std::move(l);
    }
    return PointConfig(std::move(curve), std::move(pts), std::move(lat));
}

PointConfig load_config(const std::string& path_or_name) {
    if (path_or_name == kBuiltinConfigName)
        return builtin_config();
    std::ifstream in(path_or_name);
    if (!in)
        throw std::invalid_argument("cannot open configuration file: " + path_or_name);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("configuration parse error in " + path_or_name + ": " +
                                    e.what());
    }
    return config_from_json(j);
}

json to_json(const ECPoint& p) {
    return p.str();
}

json to_json(const PlanePoly& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["exp"] = json::array({e[0], e[1], e[2]});
        t["coef"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

json to_json(const DivisorClass& d) {
    json j;
    j["degree"] = d.degree;
    j["mults"] = d.mults;
    return j;
}

json to_json(const NagataClass& c) {
    json j;
    j["family"] = c.family;
    j["n"] = c.n;
    j["pattern"] = c.pattern;
    j["class"] = to_json(c.cls);
    return j;
}

json to_json(const TorsionCertificate& c) {
    json j;
    j["primes"] = c.primes;
    j["orders"] = c.orders;
    j["gcd"] = c.order_gcd;
    j["trivial"] = c.trivial;
    return j;
}

json to_json(const TwoTorsionResult& r) {
    json j;
    j["trivial"] = r.trivial;
    if (r.witness_root)
        j["witness_root"] = r.witness_root->str();
    return j;
}

json to_json(const IndependenceCertificate& c) {
    json j;
    j["independent"] = c.independent;
    if (!c.failure_reason.empty())
        j["failure_reason"] = c.failure_reason;
    j["torsion"] = to_json(c.torsion);
    j["two_torsion"] = to_json(c.two_torsion);
    json h = json::array();
    for (const auto& check : c.halvings) {
        json e;
        e["x"] = check.x.get_str();
        json w = json::array();
        for (const auto& t : check.witnesses)
            w.push_back(t.get_str());
        e["witnesses"] = std::move(w);
        h.push_back(std::move(e));
    }
    j["halvings"] = std::move(h);
    return j;
}

json to_json(const HalphenCertificate& c) {
    json j;
    j["k"] = c.k;
    j["pass"] = c.pass;
    j["sum"] = c.sum.str();
    j["short_circuited"] = c.short_circuited;
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back(json{{"d", ch.d}, {"nonzero", ch.nonzero}});
    j["checks"] = std::move(checks);
    if (c.failing_d)
        j["failing_d"] = *c.failing_d;
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    return j;
}

json to_json(const CremonaCertificate& c) {
    json j;
    j["k"] = c.k;
    j["pass"] = c.pass;
    j["classes_checked"] = c.classes_checked;
    json groups = json::array();
    for (const auto& g : c.groups)
        groups.push_back(json{{"family", g.family},
                              {"n", g.n},
                              {"classes", g.count},
                              {"all_nonzero", g.all_nonzero}});
    j["groups"] = std::move(groups);
    if (c.witness) {
        j["witness"] = to_json(*c.witness);
        j["witness_index"] = *c.witness_index;
    }
    return j;
}

json to_json(const AllKCertificate& c) {
    json j;
    j["pass"] = c.pass;
    if (!c.failure_reason.empty())
        j["failure_reason"] = c.failure_reason;
    j["independence"] = to_json(c.independence);
    j["f_values"] = c.f_values;
    j["zero_indices"] = c.zero_indices;
    j["functional_nonnegative"] = c.functional_nonnegative;
    j["zero_vectors_nonzero"] = c.zero_vectors_nonzero;
    j["zero_vectors_one_sided"] = c.zero_vectors_one_sided;
    return j;
}

json to_json(const GeneralityCertificate& c) {
    json j;
    j["k"] = c.all_k_requested && !c.k ? json("all") : json(*c.k);
    if (c.all_k_requested)
        j["all_k_requested"] = true;
    j["pass"] = c.pass;
    if (c.all)
        j["all_k"] = to_json(*c.all);
    if (c.halphen)
        j["halphen"] = to_json(*c.halphen);
    if (c.cremona)
        j["cremona"] = to_json(*c.cremona);
    return j;
}

json to_json(const LinearSystemResult& r) {
    json j;
    j["degree"] = r.problem.degree;
    json conds = json::array();
    for (const auto& c : r.problem.conditions) {
        json e;
        e["point"] = json::array({c.point[0].str(), c.point[1].str(), c.point[2].str()});
        e["multiplicity"] = c.multiplicity;
        conds.push_back(std::move(e));
    }
    j["conditions"] = std::move(conds);
    j["rows"] = r.rows;
    j["cols"] = r.cols;
    j["rank"] = r.rank;
    j["projective_dimension"] = r.projective_dimension;
    j["virtual_dimension"] = r.virtual_dim;
    json basis = json::array();
    for (const auto& f : r.basis)
        basis.push_back(to_json(f));
    j["basis"] = std::move(basis);
    return j;
}

json to_json(const BasePoint& b) {
    json j;
    j["group_point"] = b.group_point.str();
    j["plane_point"] =
        json::array({b.plane_point[0].str(), b.plane_point[1].str(), b.plane_point[2].str()});
    j["at_infinity"] = b.at_infinity;
    return j;
}

json to_json(const SingularLocus& l) {
    json j;
    json pts = json::array();
    for (const auto& sp : l.points) {
        json e;
        e["point"] = json::array({sp.point[0].str(), sp.point[1].str(), sp.point[2].str()});
        e["multiplicity"] = sp.multiplicity;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    j["unresolved_factor_degrees"] = l.unresolved_factor_degrees;
    j["positive_dimensional"] = l.positive_dimensional;
    return j;
}

json to_json(const PencilInvariants& inv) {
    json j;
    j["g"] = inv.g;
    j["lambda"] = inv.lambda;
    j["delta0"] = inv.delta0;
    j["delta1"] = inv.delta1;
    j["delta_rest"] = inv.delta_rest;
    // the higher boundary classes are set to zero for a general pencil, not
    // computed
    j["higher_boundary_assumed_zero"] = true;
    j["chi"] = inv.chi;
    j["c2"] = inv.c2;
    j["Ksq"] = inv.Ksq;
    return j;
}

json to_json(const BNDivisorData& d) {
    json j;
    j["g"] = d.g;
    j["r"] = d.r;
    j["d"] = d.d;
    j["rho"] = d.rho;
    j["pullback_bracket"] = d.pullback_bracket.str();
    return j;
}

}  // namespace duval
