#pragma once

// Casson-Walker invariants of lens spaces and surgeries (Boyer-Lines,
// Rasmussen), the Ni-Wu d-invariant recursion, and the integer-slope
// obstructions. Everything here is exact rational arithmetic.

#include "dehn/arith.hpp"

#include <optional>
#include <vector>

namespace dehn {

/// Non-increasing sequence of non-negative integers, implicitly zero beyond
/// its stored length.
class VSequence {
public:
    VSequence() = default;
    explicit VSequence(std::vector<Int> values);

    /// V_j, reading entries past the stored length as 0.
    Int at(const Int& j) const;

    const std::vector<Int>& values() const { return values_; }

private:
    std::vector<Int> values_;
};

/// Lens space L(p,q), the p/q surgery on the unknot. The surgery coefficient
/// is canonicalized into [0,p) on construction (0 only for p = 1, which is
/// S^3); L(p, q + p) and L(p,q) are the same oriented manifold.
struct LensSpace {
    Int p;
    Int q;

    LensSpace(const Int& p_in, const Int& q_in);
};

/// Casson-Walker invariant of the lens space L(p,q) (= p/q surgery on the
/// unknot): lambda = -(1/24)(q/p + r/p + sum(a_i - 3)) over the negative
/// continued fraction of p/q, with r the inverse of q mod p. q is first
/// reduced into (0,p); lambda(L(p,q)) = -lambda(L(p,-q)) then holds as a
/// computed identity.
Rational cw_lens(const Int& p, const Int& q);
Rational cw_lens(const LensSpace& lens);

/// Boyer-Lines surgery formula lambda(K(p/q)) = lambda(L(p,q)) + q/(2p)·dd
/// where dd = Delta''_K(1) of the symmetric normalized Alexander polynomial.
Rational cw_surgery(const Int& dd, const Int& p, const Int& q);

/// The integer (p^2 - 3p + 2)/6 that 6(Delta''_K(1) + Delta''_{K'}(1)) must
/// equal for a p vs -p surgery identification; nullopt when not an integer,
/// certifying the obstruction.
std::optional<Int> prop51_required_sum(const Int& p);

/// Ni-Wu lens-space correction term d(p,q,i), by the recursion
/// d(p,q,i) = -1/4 + (p+q-1-2i)^2/(4pq) - d(q, p mod q, i mod q)
/// with base case d(1,0,0) = 0. Requires gcd(p,q) = 1 and 0 <= i < p+q.
Rational d_lens(const Int& p, const Int& q, const Int& i);

/// d(K(p/q), i) = d(p,q,i) - 2 max(V_floor(i/q), V_ceil((p-i)/q)) for a
/// positive slope p/q and 0 <= i < p.
Rational d_surgery(const Int& p, const Int& q, const Int& i, const VSequence& v);

/// max over j in {0..p-1} of d(p,qp,j) - d(p,1,0); requires qp >= 2 coprime
/// to p.
Rational d_gap_max(const Int& p, const Int& qp);

}  // namespace dehn
