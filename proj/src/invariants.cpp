#include "dehn/invariants.hpp"

#include <stdexcept>

namespace dehn {

VSequence::VSequence(std::vector<Int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) throw std::domain_error("VSequence entries must be non-negative");
        if (i > 0 && values_[i] > values_[i - 1]) {
            throw std::domain_error("VSequence must be non-increasing");
        }
    }
}

Int VSequence::at(const Int& j) const {
    if (j < 0) throw std::domain_error("VSequence index must be non-negative");
    if (j >= static_cast<long>(values_.size())) return 0;
    return values_[j.get_ui()];
}

LensSpace::LensSpace(const Int& p_in, const Int& q_in) : p(p_in), q(q_in) {
    if (p < 1) throw std::domain_error("LensSpace: p must be positive");
    if (gcd(p, q) != 1) throw std::domain_error("LensSpace: gcd(p,q) must be 1");
    q %= p;
    if (q < 0) q += p;
}

Rational cw_lens(const LensSpace& lens) {
    if (lens.p == 1) return 0;
    NegContFrac cf = neg_continued_fraction(lens.p, lens.q);
    Int r = mod_inverse(lens.q, lens.p);
    Rational sum(0);
    for (const auto& a : cf.terms) sum += Rational(a - 3);
    Rational total = Rational(lens.q, lens.p) + Rational(r, lens.p) + sum;
    total.canonicalize();
    return -total / 24;
}

Rational cw_lens(const Int& p, const Int& q) {
    return cw_lens(LensSpace(p, q));
}

Rational cw_surgery(const Int& dd, const Int& p, const Int& q) {
    if (p < 1) throw std::domain_error("cw_surgery: slope must be non-zero with p >= 1");
    if (gcd(p, q) != 1) throw std::domain_error("cw_surgery: gcd(p,q) must be 1");
    Rational correction(q, 2 * p);
    correction.canonicalize();
    return cw_lens(p, q) + correction * Rational(dd);
}

std::optional<Int> prop51_required_sum(const Int& p) {
    if (p < 1) throw std::domain_error("prop51_required_sum: p must be positive");
    Int rhs = p * p - 3 * p + 2;
    if (rhs % 6 != 0) return std::nullopt;
    return rhs / 6;
}

namespace {

Rational d_lens_impl(const Int& p, const Int& q, const Int& i) {
    if (q == 0) return 0;  // base case d(1,0,0)
    Rational quad((p + q - 1 - 2 * i) * (p + q - 1 - 2 * i), 4 * p * q);
    quad.canonicalize();
    return Rational(-1, 4) + quad - d_lens_impl(q, p % q, i % q);
}

}  // namespace

Rational d_lens(const Int& p, const Int& q, const Int& i) {
    if (p < 1 || q < 0) throw std::domain_error("d_lens: requires p >= 1, q >= 0");
    if (q == 0 && (p != 1 || i != 0)) {
        throw std::domain_error("d_lens: q = 0 only in the base case d(1,0,0)");
    }
    if (gcd(p, q) != 1) throw std::domain_error("d_lens: gcd(p,q) must be 1");
    if (i < 0 || i >= p + q) throw std::domain_error("d_lens: index out of range");
    return d_lens_impl(p, q, i);
}

Rational d_surgery(const Int& p, const Int& q, const Int& i, const VSequence& v) {
    if (p < 1 || q < 1) throw std::domain_error("d_surgery: slope must be positive");
    if (gcd(p, q) != 1) throw std::domain_error("d_surgery: gcd(p,q) must be 1");
    if (i < 0 || i >= p) throw std::domain_error("d_surgery: spin-c index out of range");
    Int lo = i / q;            // floor, non-negative operands
    Int hi;                    // ceil((p-i)/q)
    mpz_cdiv_q(hi.get_mpz_t(), Int(p - i).get_mpz_t(), q.get_mpz_t());
    Int vmax = std::max(v.at(lo), v.at(hi));
    return d_lens(p, q, i) - 2 * Rational(vmax);
}

Rational d_gap_max(const Int& p, const Int& qp) {
    if (qp < 2) throw std::domain_error("d_gap_max: counterpart denominator must be >= 2");
    if (p < 1) throw std::domain_error("d_gap_max: p must be positive");
    if (gcd(p, qp) != 1) throw std::domain_error("d_gap_max: gcd(p,qp) must be 1");
    Rational best;
    bool first = true;
    for (Int j = 0; j < p; ++j) {
        Rational d = d_lens(p, qp, j);
        if (first || d > best) {
            best = d;
            first = false;
        }
    }
    return best - d_lens(p, 1, 0);
}

}  // namespace dehn
