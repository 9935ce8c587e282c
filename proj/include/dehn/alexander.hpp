#pragma once

// Integer Laurent-polynomial algebra in one and two variables, the
// normalizations used by surgery formulas (symmetric representative,
// Delta''(1)), and the twist-family substitution with its distinctness table.

#include "dehn/arith.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace dehn {

/// Sparse Laurent polynomial over Z in one variable. The empty map is the
/// zero polynomial; stored coefficients are never zero.
class LaurentPoly1 {
public:
    using Exp = std::int64_t;

    LaurentPoly1() = default;
    static LaurentPoly1 monomial(Exp e, const Int& c);
    static LaurentPoly1 from_terms(const std::vector<std::pair<Exp, Int>>& terms);

    void add_term(Exp e, const Int& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Exp min_exp() const;
    Exp max_exp() const;
    Int coeff(Exp e) const;
    Int eval_at_one() const;

    LaurentPoly1 shifted(Exp k) const;  // multiply by t^k
    LaurentPoly1 negated() const;

    const std::map<Exp, Int>& terms() const { return terms_; }
    std::string str() const;

    friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;
    friend LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b);
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);

private:
    std::map<Exp, Int> terms_;
};

/// Sparse Laurent polynomial over Z in two variables.
class LaurentPoly2 {
public:
    using Exp = std::int64_t;
    using ExpPair = std::pair<Exp, Exp>;

    LaurentPoly2() = default;
    static LaurentPoly2 from_terms(const std::vector<std::pair<ExpPair, Int>>& terms);

    void add_term(ExpPair e, const Int& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int coeff(ExpPair e) const;

    const std::map<ExpPair, Int>& terms() const { return terms_; }

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

private:
    std::map<ExpPair, Int> terms_;
};

/// True iff f = ±t^k g for some integer k.
bool eq_up_to_units(const LaurentPoly1& f, const LaurentPoly1& g);

/// t1 -> t^e1, t2 -> t^e2 with collection of like terms.
LaurentPoly1 substitute(const LaurentPoly2& f, std::int64_t e1, std::int64_t e2);

/// The unit multiple g = ±t^k f with g(t) = g(1/t) termwise and g(1) = 1.
/// Throws std::domain_error when no unit multiple is palindromic or f(1) != ±1.
LaurentPoly1 symmetric_normalize(const LaurentPoly1& f);

/// Sum of c_e·e·(e-1) over the terms of the symmetric normalized
/// representative; rejects other representatives.
Int second_derivative_at_1(const LaurentPoly1& f);

/// Shift so the minimal exponent is 0 and flip sign so the constant term is
/// positive.
LaurentPoly1 normalize_positive(const LaurentPoly1& f);

/// Alexander polynomial of the knot obtained by twisting the given component
/// k times: component 2 gives Delta_L(t, t^k), component 1 gives
/// Delta_L(t^k, t).
LaurentPoly1 twist_family_alex(const LaurentPoly2& link_poly, int component, std::int64_t k);

struct DistinctnessTable {
    std::vector<std::int64_t> m_values;
    std::vector<std::int64_t> n_values;
    std::vector<std::vector<bool>> equal;  // equal[i][j] for (m_values[i], n_values[j])

    std::vector<std::pair<std::int64_t, std::int64_t>> matches() const;
};

/// {-max_abs..max_abs}, excluding 0 unless include_zero.
std::vector<std::int64_t> twist_range(std::int64_t max_abs, bool include_zero = false);

/// Entry (m,n) records whether the twist polynomials Delta_L(t,t^m) and
/// Delta_L(t^n,t) agree up to units. Raw equality only; interpretation is
/// left to the caller.
DistinctnessTable distinctness_matrix(const LaurentPoly2& link_poly,
                                      const std::vector<std::int64_t>& m_values,
                                      const std::vector<std::int64_t>& n_values);

/// Exact quotient num/den; throws std::domain_error when division leaves a
/// remainder.
LaurentPoly1 exact_divide(const LaurentPoly1& num, const LaurentPoly1& den);

}  // namespace dehn
