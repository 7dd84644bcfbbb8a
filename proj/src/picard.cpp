#include "duval/picard.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace duval {

DivisorClass::DivisorClass(long d, std::vector<long> m) : degree(d), mults(std::move(m)) {
    if (mults.size() != 9 && mults.size() != 10)
        throw std::invalid_argument("DivisorClass: length must be 9 or 10");
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << "(" << degree << ";";
    for (std::size_t i = 0; i < mults.size(); ++i)
        os << (i ? "," : " ") << mults[i];
    os << ")";
    return os.str();
}

long intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.mults.size() != b.mults.size())
        throw std::invalid_argument("intersect: length mismatch");
    long v = a.degree * b.degree;
    for (std::size_t i = 0; i < a.mults.size(); ++i)
        v -= a.mults[i] * b.mults[i];
    return v;
}

DivisorClass canonical_class(int n) {
    if (n != 9 && n != 10)
        throw std::invalid_argument("canonical_class: n must be 9 or 10");
    return DivisorClass(-3, std::vector<long>(static_cast<std::size_t>(n), -1));
}

namespace {

void append_subset_patterns(std::vector<NagataClass>& out, int family, int n, int subset_size,
                            long subset_mult, long base_degree) {
    // subsets of {0..8} in lexicographic order
    std::vector<int> idx(static_cast<std::size_t>(subset_size));
    for (int i = 0; i < subset_size; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        NagataClass nc;
        nc.family = family;
        nc.n = n;
        nc.pattern = idx;
        std::vector<long> mults(9, n);
        for (int i : idx)
            mults[static_cast<std::size_t>(i)] += subset_mult;
        nc.cls = DivisorClass(base_degree + 3 * n, std::move(mults));
        out.push_back(std::move(nc));
        int i = subset_size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == 9 - subset_size + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < subset_size; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void append_double_omit_patterns(std::vector<NagataClass>& out, int n) {
    for (int dbl = 0; dbl < 9; ++dbl) {
        for (int omit = 0; omit < 9; ++omit) {
            if (omit == dbl)
                continue;
            NagataClass nc;
            nc.family = 3;
            nc.n = n;
            nc.pattern = {dbl, omit};
            std::vector<long> mults(9, static_cast<long>(n) + 1);
            mults[static_cast<std::size_t>(dbl)] += 1;
            mults[static_cast<std::size_t>(omit)] -= 1;
            nc.cls = DivisorClass(3 + 3 * n, std::move(mults));
            out.push_back(std::move(nc));
        }
    }
}

}  // namespace

std::vector<NagataClass> nagata_classes(int k) {
    if (k < 1)
        throw std::invalid_argument("nagata_classes: k must be >= 1");
    std::vector<NagataClass> out;
    for (int family = 1; family <= 3; ++family) {
        if (k - family < 0)
            continue;
        const int n_max = (k - family) / 3;
        for (int n = 0; n <= n_max; ++n) {
            switch (family) {
                case 1:
                    append_subset_patterns(out, 1, n, 3, 1, 1);
                    break;
                case 2:
                    append_subset_patterns(out, 2, n, 6, 1, 2);
                    break;
                default:
                    append_double_omit_patterns(out, n);
                    break;
            }
        }
    }
    return out;
}

PointConfig::PointConfig(EllipticCurve curve, std::vector<ECPoint> points,
                         std::optional<LatticeCoords> lattice)
    : curve_(std::move(curve)), points_(std::move(points)), lattice_(std::move(lattice)) {
    if (points_.size() != 9)
        throw std::invalid_argument("PointConfig: exactly nine points required");
    for (const auto& p : points_) {
        if (p.is_infinity())
            throw std::invalid_argument("PointConfig: the identity is not an allowed point");
        curve_.require_on_curve(p);
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw std::invalid_argument("PointConfig: points " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1) + " coincide");
    if (lattice_) {
        const auto& lat = *lattice_;
        if (lat.coords.size() != 9)
            throw std::invalid_argument("PointConfig: lattice coordinates must cover all points");
        for (int b : lat.basis)
            if (b < 1 || b > 9)
                throw std::invalid_argument("PointConfig: lattice basis index out of range");
        if (lat.basis[0] == lat.basis[1])
            throw std::invalid_argument("PointConfig: lattice basis indices coincide");
        const ECPoint& b1 = points_[static_cast<std::size_t>(lat.basis[0] - 1)];
        const ECPoint& b2 = points_[static_cast<std::size_t>(lat.basis[1] - 1)];
        for (std::size_t i = 0; i < 9; ++i) {
            const ECPoint expect = curve_.add(curve_.scalar_mul(lat.coords[i][0], b1),
                                              curve_.scalar_mul(lat.coords[i][1], b2));
            if (expect != points_[i])
                throw std::invalid_argument("PointConfig: lattice coordinates of point " +
                                            std::to_string(i + 1) +
                                            " do not reproduce it under the group law");
        }
    }
}

std::array<long, 2> PointConfig::lattice_combination(const DivisorClass& d) const {
    if (!lattice_)
        throw std::logic_error("PointConfig: no lattice coordinates available");
    if (d.mults.size() != 9)
        throw std::invalid_argument("lattice_combination: class length must be 9");
    std::array<long, 2> acc{0, 0};
    for (std::size_t i = 0; i < 9; ++i) {
        acc[0] += d.mults[i] * lattice_->coords[i][0];
        acc[1] += d.mults[i] * lattice_->coords[i][1];
    }
    return acc;
}

ECPoint restrict_to_anticanonical(const DivisorClass& d, const PointConfig& cfg) {
    if (d.mults.size() != 9)
        throw std::invalid_argument("restrict_to_anticanonical: class length must be 9");
    if (intersect(d, canonical_class(9)) != 0)
        throw std::invalid_argument(
            "restrict_to_anticanonical: class has nonzero degree on the anticanonical cubic");
    const EllipticCurve& e = cfg.curve();
    ECPoint acc = ECPoint::infinity();
    for (std::size_t i = 0; i < 9; ++i)
        acc = e.add_unchecked(acc, e.scalar_mul(d.mults[i], cfg.points()[i]));
    return acc;
}

HalphenCertificate certify_halphen(const PointConfig& cfg, int k,
                                   const TorsionCertificate* torsion) {
    if (k < 3)
        throw std::invalid_argument("certify_halphen: k must be >= 3");
    HalphenCertificate cert;
    cert.k = k;
    const EllipticCurve& e = cfg.curve();
    ECPoint sum = ECPoint::infinity();
    for (const auto& p : cfg.points())
        sum = e.add_unchecked(sum, p);
    cert.sum = sum;
    cert.short_circuited = (torsion != nullptr && torsion->trivial);
    const int max_d = cert.short_circuited ? 1 : k / 3;
    ECPoint acc = ECPoint::infinity();
    for (int d = 1; d <= max_d; ++d) {
        acc = e.add_unchecked(acc, sum);
        const bool nonzero = !acc.is_infinity();
        cert.checks.push_back({d, nonzero});
        if (!nonzero && !cert.failing_d) {
            cert.failing_d = d;
            cert.witness = DivisorClass(3L * d, std::vector<long>(9, d));
        }
    }
    cert.pass = !cert.failing_d.has_value();
    return cert;
}

CremonaCertificate certify_cremona(const PointConfig& cfg, int k, int threads) {
    CremonaCertificate cert;
    cert.k = k;
    const auto classes = nagata_classes(k);
    cert.classes_checked = static_cast<long>(classes.size());

    const EllipticCurve& e = cfg.curve();
    // cached scalar multiples of each point; multiplicities are at most
    // n_max + 2 <= (k-1)/3 + 2
    const long max_mult = (k - 1) / 3 + 2;
    std::vector<std::vector<ECPoint>> multiples(9);
    for (std::size_t i = 0; i < 9; ++i) {
        multiples[i].reserve(static_cast<std::size_t>(max_mult + 1));
        multiples[i].push_back(ECPoint::infinity());
        for (long m = 1; m <= max_mult; ++m)
            multiples[i].push_back(e.add_unchecked(multiples[i].back(), cfg.points()[i]));
    }

    std::vector<unsigned char> nonzero(classes.size(), 0);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            ECPoint acc = ECPoint::infinity();
            for (std::size_t i = 0; i < 9; ++i) {
                const long m = classes[idx].cls.mults[i];
                acc = e.add_unchecked(acc, multiples[i][static_cast<std::size_t>(m)]);
            }
            nonzero[idx] = acc.is_infinity() ? 0 : 1;
        }
    };
    const int nthreads = std::max(1, threads);
    if (nthreads == 1 || classes.size() < 64) {
        worker(0, classes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (classes.size() + static_cast<std::size_t>(nthreads) - 1) /
                                  static_cast<std::size_t>(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(classes.size(), begin + chunk);
            if (begin < end)
                pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    // aggregate per (family, n) in canonical order
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
        const auto& nc = classes[idx];
        if (cert.groups.empty() || cert.groups.back().family != nc.family ||
            cert.groups.back().n != nc.n)
            cert.groups.push_back({nc.family, nc.n, 0, true});
        cert.groups.back().count += 1;
        if (!nonzero[idx]) {
            cert.groups.back().all_nonzero = false;
            if (!cert.witness_index) {
                cert.witness_index = static_cast<long>(idx);
                cert.witness = nc;
            }
        }
    }
    cert.pass = !cert.witness.has_value();
    return cert;
}

AllKCertificate certify_all_k(const PointConfig& cfg, const std::vector<long>& torsion_primes) {
    if (!cfg.lattice())
        throw std::invalid_argument("certify_all_k: verified lattice coordinates required");
    AllKCertificate cert;
    const auto& lat = *cfg.lattice();
    cert.independence = independence_certificate(
        cfg.curve(), cfg.points()[static_cast<std::size_t>(lat.basis[0] - 1)],
        cfg.points()[static_cast<std::size_t>(lat.basis[1] - 1)], torsion_primes);

    cert.functional_nonnegative = true;
    cert.zero_vectors_nonzero = true;
    cert.zero_vectors_one_sided = true;
    int zero_sign = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        const long f = lat.coords[i][0] + lat.coords[i][1];
        cert.f_values.push_back(f);
        if (f < 0)
            cert.functional_nonnegative = false;
        if (f == 0) {
            cert.zero_indices.push_back(i);
            const long m = lat.coords[i][0];  // vector is m*(1,-1)
            if (m == 0)
                cert.zero_vectors_nonzero = false;
            else if (zero_sign == 0)
                zero_sign = m > 0 ? 1 : -1;
            else if ((m > 0 ? 1 : -1) != zero_sign)
                cert.zero_vectors_one_sided = false;
        }
    }

    if (!cert.independence.independent)
        cert.failure_reason = "basis pair not certified independent: " +
                              cert.independence.failure_reason;
    else if (!cert.functional_nonnegative)
        cert.failure_reason = "functional m+n is negative on some lattice vector";
    else if (!cert.zero_vectors_nonzero)
        cert.failure_reason = "a point with m+n = 0 has the zero lattice vector";
    else if (!cert.zero_vectors_one_sided)
        cert.failure_reason = "two points with m+n = 0 have opposite lattice vectors";
    cert.pass = cert.failure_reason.empty();
    return cert;
}

GeneralityCertificate certify(const PointConfig& cfg, int k, int threads) {
    GeneralityCertificate out;
    out.k = k;
    if (k >= 3) {
        out.halphen = certify_halphen(cfg, k);
    } else {
        // no degree 3d <= k exists: the Halphen condition is vacuous
        HalphenCertificate h;
        h.k = k;
        h.pass = true;
        ECPoint sum = ECPoint::infinity();
        for (const auto& p : cfg.points())
            sum = cfg.curve().add(sum, p);
        h.sum = sum;
        out.halphen = std::move(h);
    }
    out.cremona = certify_cremona(cfg, k, threads);
    out.pass = out.halphen->pass && out.cremona->pass;
    return out;
}

GeneralityCertificate certify_all(const PointConfig& cfg, int threads, int fallback_k) {
    GeneralityCertificate out;
    out.all_k_requested = true;
    out.all = certify_all_k(cfg);
    if (out.all->pass) {
        out.pass = true;
        return out;
    }
    // functional argument unavailable: report finite-k certification only
    out.k = fallback_k;
    out.halphen = certify_halphen(cfg, std::max(fallback_k, 3));
    out.cremona = certify_cremona(cfg, fallback_k, threads);
    out.pass = false;
    return out;
}

}  // namespace duval
