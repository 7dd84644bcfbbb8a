#pragma once

#include "duval/elliptic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace duval {

// Divisor class d*l - sum nu_i E_i on the plane blown up at n points
// (n = 9 before, n = 10 after the extra base-point blow-up). Entries are
// arbitrary integers; classes need not be effective.
struct DivisorClass {
    long degree = 0;
    std::vector<long> mults;

    DivisorClass() = default;
    DivisorClass(long d, std::vector<long> m);

    bool operator==(const DivisorClass& o) const {
        return degree == o.degree && mults == o.mults;
    }

    std::string str() const;
};

// Signature-(1,n) pairing: d1*d2 - sum nu1_i nu2_i.
long intersect(const DivisorClass& a, const DivisorClass& b);

// K = (-3; -1,...,-1) of length n, for n in {9, 10}.
DivisorClass canonical_class(int n);

// One class per multiplicity pattern of sigma(n*B + A_family): the patterns
// are the 84 three-subsets (family 1), the 84 six-subsets (family 2) and the
// 72 (double point, omitted point) pairs (family 3).
struct NagataClass {
    int family = 0;  // 1, 2 or 3
    int n = 0;       // multiple of B = 3l - sum E_i added
    std::vector<int> pattern;  // 0-based point indices; family 3: {double, omitted}
    DivisorClass cls;          // length 9
};

// All classes with 0 <= n <= (k - family)/3, ordered by (family, n, pattern).
std::vector<NagataClass> nagata_classes(int k);

struct LatticeCoords {
    std::array<int, 2> basis;  // 1-based indices of the basis pair
    std::vector<std::array<long, 2>> coords;
};

// Nine distinct affine rational points of one curve. Lattice coordinates,
// when present, are verified against the group law at construction.
class PointConfig {
public:
    PointConfig(EllipticCurve curve, std::vector<ECPoint> points,
                std::optional<LatticeCoords> lattice = std::nullopt);

    const EllipticCurve& curve() const { return curve_; }
    const std::vector<ECPoint>& points() const { return points_; }
    const std::optional<LatticeCoords>& lattice() const { return lattice_; }

    // Sum of the lattice vectors weighted by the class multiplicities.
    std::array<long, 2> lattice_combination(const DivisorClass& d) const;

private:
    EllipticCurve curve_;
    std::vector<ECPoint> points_;
    std::optional<LatticeCoords> lattice_;
};

// The group element sum nu_i p_i of a degree-0 restriction to the
// anticanonical cubic: the class restricts trivially iff the result is the
// identity. Requires length 9 and 3d = sum nu_i.
ECPoint restrict_to_anticanonical(const DivisorClass& d, const PointConfig& cfg);

struct HalphenCertificate {
    int k = 0;
    bool pass = false;
    ECPoint sum;  // p_1 + ... + p_9
    bool short_circuited = false;  // torsion certificate supplied
    struct Check {
        int d;
        bool nonzero;
    };
    std::vector<Check> checks;
    std::optional<int> failing_d;
    std::optional<DivisorClass> witness;  // d*(3l - sum E_i) for the failing d
};

// Passes iff d*(p_1+...+p_9) is not the identity for 1 <= d <= k/3; with a
// trivial-torsion certificate the check reduces to the single sum.
HalphenCertificate certify_halphen(const PointConfig& cfg, int k,
                                   const TorsionCertificate* torsion = nullptr);

struct CremonaCertificate {
    int k = 0;
    bool pass = false;
    long classes_checked = 0;
    struct GroupSummary {
        int family;
        int n;
        long count;
        bool all_nonzero;
    };
    std::vector<GroupSummary> groups;
    std::optional<NagataClass> witness;  // first failing class in canonical order
    std::optional<long> witness_index;
};

// Passes iff every Nagata class for this k restricts to a nonzero group
// element. A trivial restriction is reported as a failure witness; whether it
// is actually effective is not decided here.
CremonaCertificate certify_cremona(const PointConfig& cfg, int k, int threads = 1);

struct AllKCertificate {
    bool pass = false;
    std::string failure_reason;  // empty on success
    IndependenceCertificate independence;
    std::vector<long> f_values;             // m_i + n_i per point
    std::vector<std::size_t> zero_indices;  // points with f = 0
    bool functional_nonnegative = false;
    bool zero_vectors_nonzero = false;
    bool zero_vectors_one_sided = false;  // no anti-parallel pair among f = 0 vectors
};

// Certifies k-generality for every k at once: with an independent basis pair,
// the functional f(m,n) = m+n nonnegative on all lattice vectors, and the
// f = 0 vectors nonzero and not oppositely directed, no nonnegative nonzero
// combination of the points vanishes, so every Nagata-class restriction and
// every multiple of the sum is nonzero. Requires verified lattice coordinates.
AllKCertificate certify_all_k(const PointConfig& cfg,
                              const std::vector<long>& torsion_primes = {5, 7});

struct GeneralityCertificate {
    bool all_k_requested = false;
    std::optional<int> k;  // finite k certified (the fallback k when all_k fails)
    bool pass = false;
    std::optional<AllKCertificate> all;
    std::optional<HalphenCertificate> halphen;
    std::optional<CremonaCertificate> cremona;
};

GeneralityCertificate certify(const PointConfig& cfg, int k, int threads = 1);

// All-k certification; on functional failure falls back to finite
// certification at fallback_k.
GeneralityCertificate certify_all(const PointConfig& cfg, int threads = 1, int fallback_k = 60);

}  // namespace duval
