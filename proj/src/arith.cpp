#include "dehn/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int powmod(const Int& a, const Int& e, const Int& m) {
    if (e < 0) throw std::domain_error("powmod: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Slope::Slope(const Int& p_raw, const Int& q_raw) : p_(p_raw), q_(q_raw) {
    if (p_ == 0 && q_ == 0) throw std::domain_error("slope 0/0 is undefined");
    Int g = gcd(p_, q_);
    p_ /= g;
    q_ /= g;
    if (p_ < 0) {
        p_ = -p_;
        q_ = -q_;
    }
    if (p_ == 0) q_ = 1;
    if (q_ == 0) p_ = 1;
}

Rational Slope::value() const {
    if (q_ == 0) throw std::domain_error("infinity slope has no rational value");
    Rational v(p_, q_);
    v.canonicalize();
    return v;
}

std::string Slope::str() const {
    return p_.get_str() + "/" + q_.get_str();
}

bool operator<(const Slope& a, const Slope& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.value() < b.value();
}

Slope normalize_slope(const Int& p_raw, const Int& q_raw) {
    return Slope(p_raw, q_raw);
}

Rational NegContFrac::value() const {
    if (terms.empty()) throw std::domain_error("empty continued fraction");
    Rational x(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        x = Rational(*it) - 1 / x;
    }
    return x;
}

NegContFrac neg_continued_fraction(const Int& p, const Int& q) {
    if (q <= 0 || p <= q) throw std::domain_error("neg_continued_fraction requires p > q >= 1");
    if (gcd(p, q) != 1) throw std::domain_error("neg_continued_fraction requires gcd(p,q) = 1");
    NegContFrac out;
    Int a = p, b = q;
    while (b > 0) {
        Int t;  // ceil(a/b)
        mpz_cdiv_q(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        out.terms.push_back(t);
        Int next = t * b - a;  // in [0, b)
        a = b;
        b = next;
    }
    return out;
}

Int mod_inverse(const Int& q, const Int& p) {
    if (p < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (p == 1) return 0;  // degenerate by convention
    Int r;
    if (mpz_invert(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw std::domain_error("mod_inverse: " + q.get_str() + " not invertible mod " + p.get_str());
    }
    return r;
}

namespace {

void require_odd_prime(const Int& p, const char* who) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
        throw std::domain_error(std::string(who) + ": " + p.get_str() + " is not an odd prime");
    }
}

}  // namespace

int legendre(const Int& a, const Int& p) {
    require_odd_prime(p, "legendre");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = powmod(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("legendre: Euler criterion failed; modulus not prime?");
}

int reciprocity_sign(const Int& p1, const Int& p2) {
    require_odd_prime(p1, "reciprocity_sign");
    require_odd_prime(p2, "reciprocity_sign");
    if (p1 == p2) throw std::domain_error("reciprocity_sign: primes must be distinct");
    bool odd1 = mpz_odd_p(Int((p1 - 1) / 2).get_mpz_t());
    bool odd2 = mpz_odd_p(Int((p2 - 1) / 2).get_mpz_t());
    return (odd1 && odd2) ? -1 : 1;
}

std::set<Int> residues_mod(const Int& p) {
    require_odd_prime(p, "residues_mod");
    std::set<Int> out;
    for (Int n = 1; n < p; ++n) {
        out.insert(n * n % p);
    }
    return out;
}

Congruence::Congruence(const Int& a, const Int& m) : residue(a), modulus(m) {
    if (m < 1) throw std::domain_error("congruence modulus must be positive");
    residue %= modulus;
    if (residue < 0) residue += modulus;
}

Congruence crt(const std::vector<Congruence>& congruences) {
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        for (std::size_t j = i + 1; j < congruences.size(); ++j) {
            if (gcd(congruences[i].modulus, congruences[j].modulus) != 1) {
                throw std::domain_error("crt: moduli " + congruences[i].modulus.get_str() + " and " +
                                        congruences[j].modulus.get_str() + " are not coprime");
            }
        }
    }
    Int a = 0, m = 1;
    for (const auto& c : congruences) {
        // x = a (mod m), x = c.residue (mod c.modulus)
        Int t = ((c.residue - a) % c.modulus) * mod_inverse(m % c.modulus, c.modulus) % c.modulus;
        a += m * t;
        m *= c.modulus;
        a %= m;
        if (a < 0) a += m;
    }
    return Congruence(a, m);
}

PrimeSearchResult primes_in_ap(const Int& a, const Int& d, int count, const Int& limit) {
    if (d < 1) throw std::domain_error("primes_in_ap: progression step must be positive");
    if (count < 1) throw std::domain_error("primes_in_ap: count must be positive");
    if (gcd(a, d) != 1) {
        throw std::domain_error("primes_in_ap: gcd(" + a.get_str() + ", " + d.get_str() + ") != 1");
    }
    Int n = a % d;
    if (n < 0) n += d;
    while (n < 2) n += d;
    PrimeSearchResult out{{}, false};
    for (; n <= limit; n += d) {
        if (!is_prime(n)) continue;
        out.primes.push_back(n);
        if (static_cast<int>(out.primes.size()) == count) return out;
    }
    out.exhausted = true;
    return out;
}

bool is_squarefree(const Int& n) {
    if (n < 1) throw std::domain_error("is_squarefree: input must be positive");
    Int m = n;
    auto strip = [&m](const Int& d) {
        if (m % d != 0) return true;
        m /= d;
        if (m % d == 0) return false;
        return true;
    };
    if (!strip(2)) return false;
    for (Int d = 3; d * d <= m; d += 2) {
        if (!strip(d)) return false;
    }
    return true;
}

namespace {

// Largest n for which the 13-base Miller-Rabin set is proven deterministic.
const Int kDeterministicBound("3317044064679887385961981");
const int kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long s) {
    Int x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // base witnesses compositeness
}

}  // namespace

const Int& is_prime_proven_bound() {
    return kDeterministicBound;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= kDeterministicBound) {
        throw std::out_of_range("is_prime: " + n.get_str() + " exceeds the proven deterministic range");
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (int b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, b, d, s)) return false;
    }
    return true;
}

Int sqrt_mod(const Int& a, const Int& p) {
    require_odd_prime(p, "sqrt_mod");
    Int v = a % p;
    if (v < 0) v += p;
    if (v == 0) return 0;
    if (legendre(v, p) != 1) {
        throw std::domain_error("sqrt_mod: " + a.get_str() + " is not a residue mod " + p.get_str());
    }
    Int r;
    if (p % 4 == 3) {
        r = powmod(v, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks with the least non-residue as generator.
        Int q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Int z = 2;
        while (legendre(z, p) != -1) ++z;
        Int c = powmod(z, q, p);
        Int t = powmod(v, q, p);
        r = powmod(v, (q + 1) / 2, p);
        unsigned long m = s;
        while (t != 1) {
            Int tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % p;
                ++i;
            }
            Int b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
            r = r * b % p;
            c = b * b % p;
            t = t * c % p;
            m = i;
        }
    }
    return std::min(r, Int(p - r));
}

std::vector<Int> odd_primes_upto(const Int& bound) {
    if (bound > 10000000) {
        throw std::out_of_range("odd_primes_upto: bound exceeds the 10^7 sieve cap");
    }
    std::vector<Int> out;
    if (bound < 3) return out;
    unsigned long n = mpz_get_ui(bound.get_mpz_t());
    std::vector<bool> composite(n + 1, false);
    for (unsigned long i = 3; i <= n; i += 2) {
        if (composite[i]) continue;
        out.emplace_back(i);
        for (unsigned long j = i * i; j <= n; j += 2 * i) composite[j] = true;
    }
    return out;
}

}  // namespace dehn
