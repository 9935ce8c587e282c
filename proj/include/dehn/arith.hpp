#pragma once

// Exact slope/rational arithmetic, negative continued fractions, and the
// number-theory toolkit (Legendre symbols, residues, CRT, primes in
// arithmetic progressions). All integers are arbitrary precision.

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace dehn {

using Int = mpz_class;
using Rational = mpq_class;

Int gcd(const Int& a, const Int& b);

/// Normalized surgery coefficient p/q: p >= 0, gcd(p,|q|) = 1, the sign is
/// carried by q. 0 is stored as 0/1 and the infinity slope as 1/0.
class Slope {
public:
    Slope(const Int& p_raw, const Int& q_raw);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    bool is_infinity() const { return q_ == 0; }

    /// p/q as an exact rational; throws std::domain_error for infinity.
    Rational value() const;

    std::string str() const;

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    /// Orders by rational value with infinity last.
    friend bool operator<(const Slope& a, const Slope& b);

private:
    Int p_, q_;
};

Slope normalize_slope(const Int& p_raw, const Int& q_raw);

/// Negative continued fraction a1 - 1/(a2 - 1/(... - 1/an)), all terms >= 2.
struct NegContFrac {
    std::vector<Int> terms;

    Rational value() const;
};

/// Unique expansion of p/q with all terms >= 2; requires p > q >= 1 coprime.
NegContFrac neg_continued_fraction(const Int& p, const Int& q);

/// Inverse r of q mod p with 0 < r < p; returns 0 for the degenerate p = 1.
Int mod_inverse(const Int& q, const Int& p);

/// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion; p an odd prime.
int legendre(const Int& a, const Int& p);

/// (-1)^(((p1-1)/2)((p2-1)/2)) for distinct odd primes; the reciprocity sign.
int reciprocity_sign(const Int& p1, const Int& p2);

/// {n^2 mod p : 1 <= n <= p-1}, size (p-1)/2. Brute-force oracle for legendre.
std::set<Int> residues_mod(const Int& p);

/// Residue class a mod m with 0 <= a < m (inputs are reduced).
struct Congruence {
    Int residue;
    Int modulus;

    Congruence(const Int& a, const Int& m);
};

/// Combines pairwise-coprime congruences into the unique class mod the
/// product of the moduli. Names the offending pair when moduli share a factor.
Congruence crt(const std::vector<Congruence>& congruences);

struct PrimeSearchResult {
    std::vector<Int> primes;
    bool exhausted;  // limit reached before `count` primes were found
};

/// First `count` primes = a (mod d) that are <= limit, ascending.
PrimeSearchResult primes_in_ap(const Int& a, const Int& d, int count, const Int& limit);

bool is_squarefree(const Int& n);

/// Deterministic primality: trial division plus Miller-Rabin with the
/// 13-base set {2,...,37}, proven exact for n < 3317044064679887385961981
/// (Sorenson-Webster). Larger inputs throw std::out_of_range.
bool is_prime(const Int& n);

const Int& is_prime_proven_bound();

/// Least square root of a mod an odd prime p (Tonelli-Shanks, deterministic
/// non-residue choice). Throws std::domain_error when a is a non-residue.
Int sqrt_mod(const Int& a, const Int& p);

/// a^e mod m for e >= 0.
Int powmod(const Int& a, const Int& e, const Int& m);

/// Odd primes <= bound, ascending (sieve; bound capped at 10^7).
std::vector<Int> odd_primes_upto(const Int& bound);

}  // namespace dehn
