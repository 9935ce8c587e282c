#include "dehn/alexander.hpp"

#include <sstream>
#include <stdexcept>

namespace dehn {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace

LaurentPoly1 LaurentPoly1::monomial(Exp e, const Int& c) {
    LaurentPoly1 p;
    p.add_term(e, c);
    return p;
}

LaurentPoly1 LaurentPoly1::from_terms(const std::vector<std::pair<Exp, Int>>& terms) {
    LaurentPoly1 p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

void LaurentPoly1::add_term(Exp e, const Int& c) {
    if (c == 0) return;
    Int& v = terms_[e];
    v += c;
    if (v == 0) terms_.erase(e);
}

LaurentPoly1::Exp LaurentPoly1::min_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

LaurentPoly1::Exp LaurentPoly1::max_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

Int LaurentPoly1::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly1::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly1 LaurentPoly1::shifted(Exp k) const {
    LaurentPoly1 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(checked_add(e, k), c);
    return out;
}

LaurentPoly1 LaurentPoly1::negated() const {
    LaurentPoly1 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

std::string LaurentPoly1::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || it->first == 0) os << a.get_str();
        if (it->first != 0) {
            os << "t";
            if (it->first != 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(checked_add(ea, eb), ca * cb);
        }
    }
    return out;
}

LaurentPoly2 LaurentPoly2::from_terms(const std::vector<std::pair<ExpPair, Int>>& terms) {
    LaurentPoly2 p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

void LaurentPoly2::add_term(ExpPair e, const Int& c) {
    if (c == 0) return;
    Int& v = terms_[e];
    v += c;
    if (v == 0) terms_.erase(e);
}

Int LaurentPoly2::coeff(ExpPair e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({checked_add(ea.first, eb.first), checked_add(ea.second, eb.second)}, ca * cb);
        }
    }
    return out;
}

bool eq_up_to_units(const LaurentPoly1& f, const LaurentPoly1& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
    LaurentPoly1 aligned = g.shifted(f.min_exp() - g.min_exp());
    return f == aligned || f == aligned.negated();
}

LaurentPoly1 substitute(const LaurentPoly2& f, std::int64_t e1, std::int64_t e2) {
    LaurentPoly1 out;
    for (const auto& [e, c] : f.terms()) {
        out.add_term(checked_add(checked_mul(e1, e.first), checked_mul(e2, e.second)), c);
    }
    return out;
}

namespace {

bool is_palindromic_about_zero(const LaurentPoly1& f) {
    for (const auto& [e, c] : f.terms()) {
        if (f.coeff(-e) != c) return false;
    }
    return true;
}

}  // namespace

LaurentPoly1 symmetric_normalize(const LaurentPoly1& f) {
    if (f.is_zero()) throw std::domain_error("symmetric_normalize: zero polynomial");
    std::int64_t lo = f.min_exp(), hi = f.max_exp();
    // The symmetric shift must centre the support on 0.
    if ((lo + hi) % 2 != 0) {
        throw std::domain_error("not a knot polynomial: support cannot be centred (odd span offset)");
    }
    LaurentPoly1 g = f.shifted(-(lo + hi) / 2);
    if (!is_palindromic_about_zero(g)) {
        throw std::domain_error("not a knot polynomial: no unit multiple is palindromic");
    }
    Int at_one = g.eval_at_one();
    if (at_one == 1) return g;
    if (at_one == -1) return g.negated();
    throw std::domain_error("not a knot polynomial: value at t=1 is " + at_one.get_str() + ", not ±1");
}

Int second_derivative_at_1(const LaurentPoly1& f) {
    if (f.is_zero() || !is_palindromic_about_zero(f) || f.eval_at_one() != 1) {
        throw std::domain_error("second_derivative_at_1 requires the symmetric normalized representative");
    }
    Int s = 0;
    for (const auto& [e, c] : f.terms()) {
        s += c * Int(e) * Int(e - 1);
    }
    return s;
}

LaurentPoly1 normalize_positive(const LaurentPoly1& f) {
    if (f.is_zero()) throw std::domain_error("normalize_positive: zero polynomial");
    LaurentPoly1 g = f.shifted(-f.min_exp());
    return g.coeff(0) > 0 ? g : g.negated();
}

LaurentPoly1 twist_family_alex(const LaurentPoly2& link_poly, int component, std::int64_t k) {
    if (component == 2) return substitute(link_poly, 1, k);
    if (component == 1) return substitute(link_poly, k, 1);
    throw std::domain_error("twist_family_alex: component must be 1 or 2");
}

std::vector<std::pair<std::int64_t, std::int64_t>> DistinctnessTable::matches() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        for (std::size_t j = 0; j < n_values.size(); ++j) {
            if (equal[i][j]) out.emplace_back(m_values[i], n_values[j]);
        }
    }
    return out;
}

std::vector<std::int64_t> twist_range(std::int64_t max_abs, bool include_zero) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = -max_abs; v <= max_abs; ++v) {
        if (v == 0 && !include_zero) continue;
        out.push_back(v);
    }
    return out;
}

DistinctnessTable distinctness_matrix(const LaurentPoly2& link_poly,
                                      const std::vector<std::int64_t>& m_values,
                                      const std::vector<std::int64_t>& n_values) {
    DistinctnessTable table{m_values, n_values, {}};
    std::vector<LaurentPoly1> j_polys;
    j_polys.reserve(n_values.size());
    for (auto n : n_values) j_polys.push_back(twist_family_alex(link_poly, 1, n));
    table.equal.reserve(m_values.size());
    for (auto m : m_values) {
        LaurentPoly1 k_poly = twist_family_alex(link_poly, 2, m);
        std::vector<bool> row;
        row.reserve(n_values.size());
        for (const auto& j_poly : j_polys) row.push_back(eq_up_to_units(k_poly, j_poly));
        table.equal.push_back(std::move(row));
    }
    return table;
}

LaurentPoly1 exact_divide(const LaurentPoly1& num, const LaurentPoly1& den) {
    if (den.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (num.is_zero()) return {};
    // Anchor both at exponent 0 so ordinary polynomial division applies, then
    // restore the unit shift at the end.
    const std::int64_t shift = num.min_exp() - den.min_exp();
    LaurentPoly1 rem = num.shifted(-num.min_exp());
    const LaurentPoly1 d = den.shifted(-den.min_exp());
    const std::int64_t d_deg = d.max_exp();
    const Int d_lead = d.coeff(d_deg);
    LaurentPoly1 quo;
    while (!rem.is_zero() && rem.max_exp() >= d_deg) {
        std::int64_t e = rem.max_exp() - d_deg;
        Int c = rem.coeff(rem.max_exp());
        if (c % d_lead != 0) throw std::domain_error("exact_divide: inexact division");
        c /= d_lead;
        quo.add_term(e, c);
        rem = rem + (d.shifted(e) * LaurentPoly1::monomial(0, -c));
    }
    if (!rem.is_zero()) throw std::domain_error("exact_divide: inexact division");
    return quo.shifted(shift);
}

}  // namespace dehn
