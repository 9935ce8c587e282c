#pragma once

// The certified slope search: linking-form obstructions, the congruence
// system steering the prime scan, CRT assembly, Dirichlet search, the
// torus-knot counterpart exclusion, and self-contained slope certificates.
//
// Reciprocity is only used to *steer* the congruence construction; every
// certificate condition is verified directly by Euler's criterion or residue
// enumeration, so certificates stand on their own.

#include "dehn/arith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dehn {

struct SearchParams {
    Int C;                                    // per-knot constant, >= 8
    Int q;                                    // odd prime > C
    std::optional<std::pair<Int, Int>> torus; // (a,b) when the knot is T(a,b)
    Int prime_limit;
    int count = 1;
    bool require_q_1mod4 = false;             // general-case variant of the proof
};

struct CertCondition {
    std::string name;
    bool ok;
    Int witness;  // square root for residue conditions, Euler value otherwise
};

/// Candidate slope p/q with named, machine-verified conditions. Valid iff
/// every condition verified. Torus parameters are carried along so the
/// certificate re-verifies without external context.
struct SlopeCertificate {
    Int p;
    Int q;
    std::optional<std::pair<Int, Int>> torus;
    std::vector<CertCondition> conditions;

    bool valid() const;
    const CertCondition* find(const std::string& name) const;
};

struct SearchResult {
    std::vector<SlopeCertificate> certificates;
    bool exhausted = false;        // limit hit before `count` certificates
    Congruence combined{0, 1};     // the CRT class that was scanned
};

struct VerifyReport {
    std::vector<CertCondition> checks;

    bool all_ok() const;
};

struct TorusCaseCheck {
    bool excluded = false;    // no torus-knot counterpart surgery exists
    bool degenerate = false;  // a denominator vanished; reported, not excluded
    std::optional<Rational> q1, q2;  // -(p+b)/(ap-a^2 bq), -(p+a)/(bp-ab^2 q)
};

/// True iff q·qp is a square mod p, i.e. the linking form does NOT rule out
/// K(p/q) = K'(p/qp). Euler's criterion for prime p, brute force otherwise.
bool residue_obstruction(const Int& p, const Int& q, const Int& qp);

/// The class of -(q/p)·a·b in Q/Z, as the representative in [0,1).
Rational linking_form_value(const Int& p, const Int& q, const Int& a, const Int& b);

/// [(1 mod 8)] + [(1 mod p_i) for odd primes p_i <= C] + [(r mod q)] with r
/// the smallest positive non-residue mod q.
std::vector<Congruence> build_congruences(const Int& C, const Int& q);

/// Scan the CRT progression for primes up to the limit and certify each
/// candidate by direct verification. Certificates are returned ascending.
SearchResult find_candidates(const SearchParams& params);

/// Re-check every condition from scratch: brute-force residue enumeration for
/// p < 10^6, Euler's criterion beyond. Failures are report entries.
VerifyReport verify_certificate(const SlopeCertificate& cert, const Int& C, const Int& q);

/// Both candidate counterpart denominators q'_1 = -(p+b)/(ap-a^2 bq) and
/// q'_2 = -(p+a)/(bp-ab^2 q); excluded iff neither is a non-zero integer.
TorusCaseCheck torus_case_check(const Int& a, const Int& b, const Int& p, const Int& q);
bool torus_case_excluded(const Int& a, const Int& b, const Int& p, const Int& q);

/// The matched twist families -m l^2 + 1/n and -n l^2 + 1/m of surgery
/// descriptions shared between a twist family and its dual.
struct TwistSlopeFamily {
    Int l;
    Int m;

    Slope knot_slope(const Int& n) const;         // -m l^2 + 1/n
    Slope counterpart_slope(const Int& n) const;  // -n l^2 + 1/m
    std::string knot_formula() const;
    std::string counterpart_formula() const;
};

TwistSlopeFamily nonchar_twist_slopes(const Int& l, const Int& m);

}  // namespace dehn
