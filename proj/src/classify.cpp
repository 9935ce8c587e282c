#include "dehn/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

SeifertData SeifertData::sfs(std::vector<Int> fiber_orders) {
    for (const auto& f : fiber_orders) {
        if (f == 0) throw std::domain_error("SeifertData: fiber order 0 is not allowed");
    }
    std::sort(fiber_orders.begin(), fiber_orders.end());
    return SeifertData{Kind::SfsOverS2, std::move(fiber_orders), {}};
}

SeifertData SeifertData::lens_sum(std::pair<Int, Int> first, std::pair<Int, Int> second) {
    return SeifertData{Kind::ConnectedSumLens, {}, {std::move(first), std::move(second)}};
}

std::size_t SeifertData::singular_fiber_count() const {
    std::size_t n = 0;
    for (const auto& f : fibers) {
        if (f >= 2 || f <= -2) ++n;
    }
    return n;
}

namespace {

void require_torus_params(const Int& a, const Int& b, const char* who) {
    if (abs(a) < 2 || abs(b) < 2) {
        throw std::domain_error(std::string(who) + ": torus parameters need |a|,|b| >= 2");
    }
    if (gcd(a, b) != 1) {
        throw std::domain_error(std::string(who) + ": torus parameters must be coprime");
    }
}

void require_slope_pair(const Int& p, const Int& q, const char* who) {
    if (p < 0) throw std::domain_error(std::string(who) + ": p must be non-negative");
    if (q == 0) throw std::domain_error(std::string(who) + ": q must be non-zero");
    if (gcd(p, q) != 1) throw std::domain_error(std::string(who) + ": gcd(p,q) must be 1");
}

}  // namespace

SeifertData moser_classify(const Int& a, const Int& b, const Int& p, const Int& q) {
    require_torus_params(a, b, "moser_classify");
    require_slope_pair(p, q, "moser_classify");
    Int third = a * b * q - p;
    if (third == 0) {
        return SeifertData::lens_sum({a, b}, {b, a});
    }
    return SeifertData::sfs({a, b, third});
}

SeifertData classify_surgery(const SurgeryDescription& surgery) {
    if (!surgery.torus) {
        throw std::domain_error("classify_surgery: only torus-knot surgeries are classifiable");
    }
    if (surgery.slope.is_infinity()) {
        throw std::domain_error("classify_surgery: the infinity filling restores S^3");
    }
    const auto& [a, b] = *surgery.torus;
    if (surgery.mirrored) return mirror_surgery(a, b, surgery.slope.p(), surgery.slope.q());
    return moser_classify(a, b, surgery.slope.p(), surgery.slope.q());
}

SeifertData mirror_surgery(const Int& a, const Int& b, const Int& p, const Int& q) {
    SeifertData s = moser_classify(a, b, p, -q);
    if (s.kind == SeifertData::Kind::SfsOverS2) {
        std::vector<Int> negated;
        negated.reserve(s.fibers.size());
        for (const auto& f : s.fibers) negated.push_back(-f);
        return SeifertData::sfs(std::move(negated));
    }
    return SeifertData::lens_sum({s.summands[0].first, -s.summands[0].second},
                                 {s.summands[1].first, -s.summands[1].second});
}

bool is_lens_space(const SeifertData& s) {
    if (s.kind == SeifertData::Kind::ConnectedSumLens) return false;
    return s.singular_fiber_count() <= 2;
}

bool sfs_equal(const SeifertData& s1, const SeifertData& s2) {
    if (s1.kind != SeifertData::Kind::SfsOverS2 || s2.kind != SeifertData::Kind::SfsOverS2 ||
        s1.singular_fiber_count() < 3 || s2.singular_fiber_count() < 3) {
        throw std::domain_error(
            "sfs_equal: inconclusive outside the three-singular-fiber uniqueness regime");
    }
    auto singular = [](const SeifertData& s) {
        std::vector<Int> out;
        for (const auto& f : s.fibers) {
            if (f >= 2 || f <= -2) out.push_back(f);
        }
        return out;  // already sorted
    };
    return singular(s1) == singular(s2);
}

std::optional<Slope> cable_fill_reduce(const Int& r, const Int& s, const Int& p, const Int& q) {
    if (s <= 1) throw std::domain_error("cable_fill_reduce: cables require s > 1");
    if (gcd(r, s) != 1) throw std::domain_error("cable_fill_reduce: gcd(r,s) must be 1");
    require_slope_pair(p, q, "cable_fill_reduce");
    if (abs(q * r * s - p) != 1) return std::nullopt;
    return normalize_slope(p, q * s * s);
}

std::set<Slope> enumerate_cable_slopes(const Int& max_p, const Int& max_s) {
    if (max_p < 2 || max_s < 2) throw std::domain_error("enumerate_cable_slopes: bounds must be >= 2");
    std::set<Slope> out;
    for (Int p = 0; p <= max_p; ++p) {
        for (Int s = 2; s <= max_s; ++s) {
            for (const Int& target : {Int(p - 1), Int(p + 1)}) {
                // q*r*s = target
                if (target == 0 || target % s != 0) continue;
                Int m = target / s;
                for (Int d = 1; d * d <= abs(m); ++d) {
                    if (m % d != 0) continue;
                    for (const Int& dd : {d, Int(abs(m) / d)}) {
                        for (int sign : {1, -1}) {
                            Int q = sign * dd;
                            Int r = m / q;
                            if (gcd(r, s) != 1 || gcd(p, q) != 1) continue;
                            out.insert(normalize_slope(p, q * s * s));
                        }
                    }
                }
            }
        }
    }
    return out;
}

Int cable_genus_lower_bound(const Int& g, const Int& r, const Int& s) {
    if (g < 0) throw std::domain_error("cable_genus_lower_bound: genus must be non-negative");
    if (s < 1) throw std::domain_error("cable_genus_lower_bound: s must be >= 1");
    if (gcd(r, s) != 1) throw std::domain_error("cable_genus_lower_bound: gcd(r,s) must be 1");
    Int product = (s - 1) * (abs(r) - 1);
    if (product % 2 != 0) {
        // unreachable for coprime (r,s): s even forces r odd
        throw std::logic_error("cable_genus_lower_bound: odd correction term");
    }
    return s * g + product / 2;
}

bool lspace_surgery_check(const Int& g, bool is_lspace_knot, const Slope& slope) {
    if (g < 0) throw std::domain_error("lspace_surgery_check: genus must be non-negative");
    if (slope.is_infinity() || slope.p() == 0 || slope.q() < 0) {
        throw std::domain_error("lspace_surgery_check: criterion is stated for positive slopes");
    }
    // p/q >= 2g - 1  <=>  p >= (2g-1) q  (q > 0)
    return is_lspace_knot && slope.p() >= (2 * g - 1) * slope.q();
}

Int lspace_genus_bound(const Int& p) {
    if (p < 1) throw std::domain_error("lspace_genus_bound: p must be positive");
    return (p + 1) / 2;
}

}  // namespace dehn
