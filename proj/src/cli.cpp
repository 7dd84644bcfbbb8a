#include "duval/cli.hpp"

#include "duval/json_io.hpp"
#include "duval/moduli.hpp"
#include "duval/plane_systems.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>

namespace duval {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

struct Emitter {
    std::string command;
    json input_echo;
    bool json_mode = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(std::ostream& out, const json& results, const std::string& human) const {
        if (json_mode) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
            json report;
            report["command"] = command;
            report["config_digest"] = hex64(fnv1a(input_echo.dump()));
            report["version"] = kVersion;
            report["timing_ms"] = elapsed;
            report["results"] = results;
            out << report.dump(2) << "\n";
        } else {
            out << human;
        }
    }
};

std::vector<long> parse_prime_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    if (out.empty())
        throw std::invalid_argument("empty prime list");
    return out;
}

std::string describe_point(const ECPoint& p) {
    return p.is_infinity() ? "inf" : "(" + p.str() + ")";
}

// ---- ec ----

int run_ec(const std::string& action, const EllipticCurve& curve,
           const std::vector<std::string>& pts, long n, long prime,
           const std::vector<long>& primes, Emitter& em, std::ostream& out) {
    json results;
    std::ostringstream human;
    int code = 0;
    if (action == "add") {
        const ECPoint p = ECPoint::parse(pts.at(0)), q = ECPoint::parse(pts.at(1));
        const ECPoint r = curve.add(p, q);
        results["result"] = r.str();
        human << describe_point(p) << " + " << describe_point(q) << " = " << describe_point(r)
              << "\n";
    } else if (action == "mul") {
        const ECPoint p = ECPoint::parse(pts.at(0));
        const ECPoint r = curve.scalar_mul(n, p);
        results["result"] = r.str();
        human << n << " * " << describe_point(p) << " = " << describe_point(r) << "\n";
    } else if (action == "count") {
        const long order = count_points_mod(curve, prime);
        results["prime"] = prime;
        results["order"] = order;
        human << "|E(F_" << prime << ")| = " << order << "\n";
    } else if (action == "torsion") {
        const TorsionCertificate cert = torsion_is_trivial(curve, primes);
        results = to_json(cert);
        human << "orders:";
        for (std::size_t i = 0; i < cert.primes.size(); ++i)
            human << " |E(F_" << cert.primes[i] << ")| = " << cert.orders[i];
        human << "; gcd = " << cert.order_gcd
              << (cert.trivial ? " -> torsion trivial\n" : " -> inconclusive\n");
        code = cert.trivial ? 0 : 1;
    } else {  // independent
        const ECPoint p = ECPoint::parse(pts.at(0)), q = ECPoint::parse(pts.at(1));
        const IndependenceCertificate cert = independence_certificate(curve, p, q, primes);
        results = to_json(cert);
        if (cert.independent)
            human << "independent: torsion trivial, no 2-torsion, no integral halving witnesses\n";
        else
            human << "not certified independent: " << cert.failure_reason << "\n";
        code = cert.independent ? 0 : 1;
    }
    em.emit(out, results, human.str());
    return code;
}

// ---- certify ----

json sum_check(const PointConfig& cfg) {
    json j;
    const EllipticCurve& e = cfg.curve();
    ECPoint sum = ECPoint::infinity();
    for (const auto& p : cfg.points())
        sum = e.add(sum, p);
    j["group_sum"] = sum.str();
    if (cfg.lattice()) {
        long m = 0, nn = 0;
        for (const auto& c : cfg.lattice()->coords) {
            m += c[0];
            nn += c[1];
        }
        j["lattice_sum"] = json::array({m, nn});
        const ECPoint via_lattice = e.add(
            e.scalar_mul(m, cfg.points()[static_cast<std::size_t>(cfg.lattice()->basis[0] - 1)]),
            e.scalar_mul(nn, cfg.points()[static_cast<std::size_t>(cfg.lattice()->basis[1] - 1)]));
        j["lattice_matches_group_law"] = (via_lattice == sum);
    }
    return j;
}

int run_certify(const PointConfig& cfg, bool all, int k, int threads, Emitter& em,
                std::ostream& out) {
    const GeneralityCertificate cert = all ? certify_all(cfg, threads) : certify(cfg, k, threads);
    json results = to_json(cert);
    results["sum_check"] = sum_check(cfg);
    std::ostringstream human;
    if (all) {
        human << "all-k certification: " << (cert.all->pass ? "PASS" : "FAIL") << "\n";
        if (!cert.all->pass) {
            human << "  reason: " << cert.all->failure_reason << "\n";
            human << "  fallback finite certification at k = " << *cert.k << ": "
                  << (cert.halphen->pass && cert.cremona->pass ? "PASS" : "FAIL") << "\n";
        }
    } else {
        human << "k = " << k << ": halphen " << (cert.halphen->pass ? "pass" : "FAIL")
              << ", cremona " << (cert.cremona->pass ? "pass" : "FAIL") << " ("
              << cert.cremona->classes_checked << " classes)\n";
        if (cert.cremona->witness)
            human << "  first failing class: " << cert.cremona->witness->cls.str() << "\n";
        if (cert.halphen->failing_d)
            human << "  halphen fails at d = " << *cert.halphen->failing_d << "\n";
    }
    em.emit(out, results, human.str());
    return cert.pass ? 0 : 1;
}

// ---- system / cubic ----

int run_system(const PointConfig& cfg, int genus, bool verify_bp, bool scan, unsigned long seed,
               Emitter& em, std::ostream& out) {
    const LinearSystemResult res = solve_system(duval_system_problem(cfg, genus));
    json results = to_json(res);
    std::ostringstream human;
    human << "degree " << res.problem.degree << ", " << res.rows << "x" << res.cols
          << " conditions, rank " << res.rank << ", projective dimension "
          << res.projective_dimension << " (virtual " << res.virtual_dim << ")\n";
    int code = 0;
    if (verify_bp) {
        const BasePoint bp = base_point(cfg, genus);
        bool vanishes = true;
        for (const auto& f : res.basis)
            vanishes = vanishes && f.eval(bp.plane_point).is_zero();
        results["base_point"] = to_json(bp);
        results["base_point_on_all_members"] = vanishes;
        human << "base point " << bp.group_point.str() << ": "
              << (vanishes ? "vanishes on every basis element\n"
                           : "FAILS to vanish on some basis element\n");
        if (!vanishes)
            code = 1;
    }
    if (scan) {
        const PlanePoly member = generic_member(res.basis, seed);
        const SingularLocus locus = singular_locus(member);
        results["generic_member"] = to_json(member);
        results["singular_locus"] = to_json(locus);
        results["seed"] = seed;
        human << "generic member (seed " << seed << "): " << locus.points.size()
              << " rational singular points\n";
        for (const auto& sp : locus.points)
            human << "  (" << sp.point[0].str() << " : " << sp.point[1].str() << " : "
                  << sp.point[2].str() << ") multiplicity " << sp.multiplicity << "\n";
    }
    em.emit(out, results, human.str());
    return code;
}

int run_cubic(const PointConfig& cfg, Emitter& em, std::ostream& out) {
    const LinearSystemResult res = solve_system(cubic_problem(cfg));
    json results = to_json(res);
    std::ostringstream human;
    int code = 0;
    if (res.projective_dimension == 0) {
        human << "unique cubic: " << res.basis.front().str() << "\n";
    } else {
        human << "projective dimension " << res.projective_dimension
              << ": the cubic through the points is not unique\n";
        code = 1;
    }
    em.emit(out, results, human.str());
    return code;
}

// ---- pencil ----

int run_pencil(long genus, const std::string& bn, Emitter& em, std::ostream& out) {
    const PencilInvariants inv = pencil_invariants(genus);
    json results = to_json(inv);
    std::ostringstream human;
    human << "g = " << inv.g << ": lambda = " << inv.lambda << ", delta0 = " << inv.delta0
          << ", delta1 = " << inv.delta1 << ", higher = " << inv.delta_rest << "\n";
    if (!bn.empty()) {
        const auto comma = bn.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--bn expects \"r,d\"");
        const long r = std::stol(bn.substr(0, comma));
        const long d = std::stol(bn.substr(comma + 1));
        const BNDivisorData data = bn_divisor_data(genus, r, d);
        results["bn_divisor"] = to_json(data);
        human << "rho(" << genus << "," << r << "," << d << ") = " << data.rho
              << ", pullback bracket = " << data.pullback_bracket.str() << "\n";
    }
    em.emit(out, results, human.str());
    return 0;
}

// ---- paper-suite ----

struct SuiteStep {
    std::string name;
    bool pass;
    json details;
};

int run_suite(const PointConfig& cfg, std::optional<int> finite_k, unsigned long seed, int threads,
              Emitter& em, std::ostream& out) {
    std::vector<SuiteStep> steps;
    const EllipticCurve& e = cfg.curve();

    {
        SuiteStep step{"point-relations", true, json::array()};
        if (!cfg.lattice())
            throw std::invalid_argument("paper-suite: configuration needs lattice coordinates");
        const auto& lat = *cfg.lattice();
        const ECPoint& b1 = cfg.points()[static_cast<std::size_t>(lat.basis[0] - 1)];
        const ECPoint& b2 = cfg.points()[static_cast<std::size_t>(lat.basis[1] - 1)];
        for (std::size_t i = 0; i < 9; ++i) {
            const ECPoint expect =
                e.add(e.scalar_mul(lat.coords[i][0], b1), e.scalar_mul(lat.coords[i][1], b2));
            const bool ok = expect == cfg.points()[i];
            step.details.push_back(json{{"point", i + 1},
                                        {"coords", json::array({lat.coords[i][0], lat.coords[i][1]})},
                                        {"holds", ok}});
            step.pass = step.pass && ok;
        }
        steps.push_back(std::move(step));
    }
    {
        const TorsionCertificate cert = torsion_is_trivial(e, {5, 7});
        steps.push_back({"torsion", cert.trivial, to_json(cert)});
        const auto& lat = *cfg.lattice();
        const IndependenceCertificate ind = independence_certificate(
            e, cfg.points()[static_cast<std::size_t>(lat.basis[0] - 1)],
            cfg.points()[static_cast<std::size_t>(lat.basis[1] - 1)], {5, 7});
        steps.push_back({"independence", ind.independent, to_json(ind)});
    }
    {
        const GeneralityCertificate cert =
            finite_k ? certify(cfg, *finite_k, threads) : certify_all(cfg, threads);
        json details = to_json(cert);
        details["sum_check"] = sum_check(cfg);
        steps.push_back({"generality", cert.pass, std::move(details)});
    }
    {
        SuiteStep step{"linear-systems", true, json::array()};
        for (int g = 1; g <= 4; ++g) {
            const LinearSystemResult res = solve_system(duval_system_problem(cfg, g));
            const BasePoint bp = base_point(cfg, g);
            bool vanishes = true;
            for (const auto& f : res.basis)
                vanishes = vanishes && f.eval(bp.plane_point).is_zero();
            const bool ok = res.projective_dimension == g && vanishes;
            step.details.push_back(json{{"g", g},
                                        {"projective_dimension", res.projective_dimension},
                                        {"base_point_vanishes", vanishes},
                                        {"pass", ok}});
            step.pass = step.pass && ok;
        }
        steps.push_back(std::move(step));
    }
    {
        SuiteStep step{"pencil-invariants", true, json::array()};
        for (long g = 2; g <= 20; ++g) {
            const PencilInvariants inv = pencil_invariants(g);
            bool ok = inv.lambda == g && inv.delta0 == 6 * g + 6 && inv.delta1 == 1 &&
                      inv.delta_rest == 0 && inv.lambda == inv.chi + g - 1 &&
                      inv.delta0 + inv.delta1 + inv.delta_rest == inv.c2 + 4 * (g - 1);
            // every divisor pair with rho = -1
            for (long e2 = 2; e2 <= g + 1; ++e2) {
                if ((g + 1) % e2 != 0)
                    continue;
                const long r = e2 - 1;
                const long d = g + r - (g + 1) / e2;
                if (d < 1)
                    continue;
                ok = ok && bn_divisor_pullback(g, r, d).is_zero();
            }
            step.details.push_back(json{{"g", g}, {"pass", ok}});
            step.pass = step.pass && ok;
        }
        steps.push_back(std::move(step));
    }

    bool all_pass = true;
    json results;
    results["steps"] = json::array();
    std::ostringstream human;
    for (const auto& s : steps) {
        all_pass = all_pass && s.pass;
        results["steps"].push_back(json{{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
        human << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << "\n";
    }
    results["pass"] = all_pass;
    results["seed"] = seed;
    human << (all_pass ? "suite: PASS\n" : "suite: FAIL\n");
    em.emit(out, results, human.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certification of nine-point generality and the curves it carries", "duval"};
    app.set_version_flag("--version", kVersion);

    bool json_mode = false;
    unsigned long seed = kDefaultSeed;
    int threads = 1;
    app.add_flag("--json", json_mode, "machine-readable run report");
    app.add_option("--seed", seed, "seed for generic-member coefficients");
    app.add_option("--threads", threads, "worker threads for per-class certification");

    // ec
    auto* ec = app.add_subcommand("ec", "group-law arithmetic on y^2 = x^3 + ax + b");
    ec->fallthrough();
    std::string ec_a = "0", ec_b = "17";
    ec->add_option("--a", ec_a, "curve coefficient a")->capture_default_str();
    ec->add_option("--b", ec_b, "curve coefficient b")->capture_default_str();
    std::vector<std::string> ec_points;
    long ec_n = 0, ec_prime = 5;
    std::string ec_primes = "5,7";
    auto* ec_add = ec->add_subcommand("add", "P + Q");
    ec_add->fallthrough();
    ec_add->add_option("points", ec_points, "two points \"x,y\" or \"inf\"")->expected(2);
    auto* ec_mul = ec->add_subcommand("mul", "n * P");
    ec_mul->fallthrough();
    ec_mul->add_option("n", ec_n, "integer multiplier")->required();
    ec_mul->add_option("points", ec_points, "point \"x,y\" or \"inf\"")->expected(1);
    auto* ec_count = ec->add_subcommand("count", "|E(F_p)| by exhaustive enumeration");
    ec_count->fallthrough();
    ec_count->add_option("--prime", ec_prime, "good-reduction prime")->required();
    auto* ec_torsion = ec->add_subcommand("torsion", "gcd certificate for trivial torsion");
    ec_torsion->fallthrough();
    ec_torsion->add_option("--primes", ec_primes, "comma-separated good primes")
        ->capture_default_str();
    auto* ec_indep = ec->add_subcommand("independent", "independence certificate for a pair");
    ec_indep->fallthrough();
    ec_indep->add_option("points", ec_points, "two integral points")->expected(2);
    ec_indep->add_option("--primes", ec_primes, "comma-separated good primes")
        ->capture_default_str();

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "k-generality certificates");
    certify_cmd->fallthrough();
    std::string certify_points;
    int certify_k = 0;
    bool certify_all_flag = false;
    certify_cmd->add_option("--points", certify_points, "configuration path or \"paper\"")
        ->required();
    auto* kopt = certify_cmd->add_option("--k", certify_k, "finite k to certify");
    certify_cmd->add_flag("--all", certify_all_flag, "certify every k at once");
    // system
    auto* system_cmd = app.add_subcommand("system", "solve the genus-g linear system");
    system_cmd->fallthrough();
    std::string system_points;
    int system_genus = 1;
    bool verify_bp = false, scan_sing = false;
    system_cmd->add_option("--genus", system_genus, "genus g >= 1")->required();
    system_cmd->add_option("--points", system_points, "configuration path or \"paper\"")
        ->required();
    system_cmd->add_flag("--verify-base-point", verify_bp,
                         "check the group-law base point on every basis element");
    system_cmd->add_flag("--scan-singularities", scan_sing,
                         "resultant scan of a seeded generic member");
    // cubic
    auto* cubic_cmd = app.add_subcommand("cubic", "the unique cubic through the nine points");
    cubic_cmd->fallthrough();
    std::string cubic_points;
    cubic_cmd->add_option("--points", cubic_points, "configuration path or \"paper\"")->required();
    // pencil
    auto* pencil_cmd = app.add_subcommand("pencil", "moduli intersection numbers of the pencil");
    pencil_cmd->fallthrough();
    long pencil_genus = 2;
    std::string pencil_bn;
    pencil_cmd->add_option("--genus", pencil_genus, "genus g >= 2")->required();
    pencil_cmd->add_option("--bn", pencil_bn, "divisor parameters \"r,d\" with rho = -1");
    // paper-suite
    auto* suite_cmd = app.add_subcommand("paper-suite", "run the full certification and verification pipeline");
    suite_cmd->fallthrough();
    std::string suite_points = kBuiltinConfigName;
    int suite_k = 0;
    suite_cmd->add_option("--points", suite_points, "configuration path or \"paper\"")
        ->capture_default_str();
    auto* suite_kopt = suite_cmd->add_option("--k", suite_k, "finite k instead of the all-k argument");

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Emitter em;
    em.json_mode = json_mode;
    {
        std::ostringstream cmd;
        cmd << "duval";
        for (const auto& a : args)
            cmd << " " << a;
        em.command = cmd.str();
    }

    try {
        if (ec->parsed()) {
            const EllipticCurve curve(Rational::parse(ec_a), Rational::parse(ec_b));
            em.input_echo = json{{"a", ec_a}, {"b", ec_b}, {"points", ec_points}};
            std::string action;
            for (const char* name : {"add", "mul", "count", "torsion", "independent"})
                if (ec->get_subcommand(name)->parsed())
                    action = name;
            if (action.empty()) {
                err << ec->help();
                return 2;
            }
            return run_ec(action, curve, ec_points, ec_n, ec_prime, parse_prime_list(ec_primes),
                          em, out);
        }
        if (certify_cmd->parsed()) {
            const PointConfig cfg = load_config(certify_points);
            em.input_echo = config_to_json(cfg);
            if (!certify_all_flag && kopt->count() == 0)
                throw std::invalid_argument("certify: one of --k or --all is required");
            return run_certify(cfg, certify_all_flag, certify_k, threads, em, out);
        }
        if (system_cmd->parsed()) {
            const PointConfig cfg = load_config(system_points);
            em.input_echo = config_to_json(cfg);
            return run_system(cfg, system_genus, verify_bp, scan_sing, seed, em, out);
        }
        if (cubic_cmd->parsed()) {
            const PointConfig cfg = load_config(cubic_points);
            em.input_echo = config_to_json(cfg);
            return run_cubic(cfg, em, out);
        }
        if (pencil_cmd->parsed()) {
            em.input_echo = json{{"genus", pencil_genus}, {"bn", pencil_bn}};
            return run_pencil(pencil_genus, pencil_bn, em, out);
        }
        if (suite_cmd->parsed()) {
            const PointConfig cfg = load_config(suite_points);
            em.input_echo = config_to_json(cfg);
            std::optional<int> fk;
            if (suite_kopt->count() > 0)
                fk = suite_k;
            return run_suite(cfg, fk, seed, threads, em, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace duval
