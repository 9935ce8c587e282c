#pragma once

// Seifert-fibered classification of torus-knot surgeries (Moser), cable-slope
// arithmetic (Gordon), lens-space detection, and the L-space/genus rules.

#include "dehn/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dehn {

/// Either a Seifert fibered space over S^2 given by its signed fiber orders,
/// or a connected sum of two lens spaces. Orientation is encoded in the signs:
/// mirroring negates every order. Orders ±1 are non-singular but are retained
/// in the stored multiset.
struct SeifertData {
    enum class Kind { SfsOverS2, ConnectedSumLens };

    Kind kind;
    std::vector<Int> fibers;  // sorted ascending; SfsOverS2 only
    std::array<std::pair<Int, Int>, 2> summands;  // ConnectedSumLens only

    static SeifertData sfs(std::vector<Int> fiber_orders);
    static SeifertData lens_sum(std::pair<Int, Int> first, std::pair<Int, Int> second);

    /// Number of fibers with |order| >= 2.
    std::size_t singular_fiber_count() const;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// A surgery presentation (K, r): the knot is named or carries torus
/// parameters with a mirror flag; the slope is normalized by construction.
struct SurgeryDescription {
    std::string knot;
    std::optional<std::pair<Int, Int>> torus;
    bool mirrored = false;
    Slope slope;
};

/// Moser: T(a,b)(p/q) is Seifert fibered over S^2 with fiber orders
/// {a, b, abq-p} when abq != p, and L(a,b) # L(b,a) when p = qab.
SeifertData moser_classify(const Int& a, const Int& b, const Int& p, const Int& q);

/// Classification of a torus-knot surgery description; requires torus
/// parameters and a finite slope.
SeifertData classify_surgery(const SurgeryDescription& surgery);

/// (-T(a,b))(p/q), computed as the orientation reversal of T(a,b)(-p/q):
/// every signed order of moser_classify(a, b, p, -q) is negated.
SeifertData mirror_surgery(const Int& a, const Int& b, const Int& p, const Int& q);

/// SFS with at most two singular fibers; a connected sum is never a lens space.
bool is_lens_space(const SeifertData& s);

/// Signed fiber multisets coincide. Only defined in the uniqueness regime of
/// three singular fibers; fewer is rejected as inconclusive.
bool sfs_equal(const SeifertData& s1, const SeifertData& s2);

/// Gordon: if |qrs - p| = 1 then C_{r,s}(K)(p/q) = K(p/(q s^2)); returns the
/// reduced slope, or nullopt when the filling does not reduce.
std::optional<Slope> cable_fill_reduce(const Int& r, const Int& s, const Int& p, const Int& q);

/// All normalized slopes p/(q s^2) arising from coprime (r,s), (p,q) with
/// |qrs - p| = 1, 2 <= s <= max_s, 0 <= p <= max_p.
std::set<Slope> enumerate_cable_slopes(const Int& max_p, const Int& max_s);

/// s·g + (s-1)(|r|-1)/2; the product is even for coprime (r,s).
Int cable_genus_lower_bound(const Int& g, const Int& r, const Int& s);

/// L-space surgery criterion for a positive slope: K an L-space knot and
/// p/q >= 2g(K) - 1 (exact rational comparison).
bool lspace_surgery_check(const Int& g, bool is_lspace_knot, const Slope& slope);

/// Maximal genus g with 2g - 1 <= p, i.e. floor((p+1)/2).
Int lspace_genus_bound(const Int& p);

}  // namespace dehn
