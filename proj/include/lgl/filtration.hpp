#ifndef LGL_FILTRATION_HPP
#define LGL_FILTRATION_HPP

#include "lgl/laurent.hpp"
#include "lgl/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lgl {

/// Index (m, J) of the partially ordered monoid Z x P_n. The filtration
/// section is the untwisted case throughout (alpha = 0, I_alpha = {1..n}).
struct poset_index {
    std::int64_t m = 0;
    index_set J;
    friend bool operator==(const poset_index&, const poset_index&) = default;
    std::string str() const;
};

/// Componentwise order: m1 <= m2 and J1 within J2.
bool poset_leq(const poset_index& x, const poset_index& y);

/// Monoid multiplication (m1 + m2, J1 union J2); identity (0, {}).
poset_index monoid_mul(const poset_index& x, const poset_index& y);

/// x^k in the filtration component L^{<=(m,J)}: degree(k) <= m and
/// neg(k) within J. (Closed form of the defining sum of V spaces.)
bool member_leq(const exponent& k, const poset_index& idx);

/// x^k in the strict component L^{<(m,J)}: degree(k) < m with neg(k) within
/// J, or degree(k) = m with neg(k) a proper subset of J.
bool member_lt(const exponent& k, const poset_index& idx);

/// Window exponents of the graded piece L^{<=}/L^{<} at idx: member_leq and
/// not member_lt. Equals { k : degree(k) = m, neg(k) = J } inside the window.
std::vector<exponent> graded_basis(int n, const poset_index& idx, std::int64_t bound);

struct axiom_counterexample {
    std::string axiom;
    std::vector<exponent> monomials;
    std::vector<poset_index> indices;
};

struct axiom_report {
    bool unit = true;
    bool monotone = true;
    bool product = true;
    bool exhaustive = true;
    bool strict_product = true;
    std::uint64_t checked = 0;
    std::vector<axiom_counterexample> counterexamples;
    bool all_pass() const { return unit && monotone && product && exhaustive && strict_product; }
};

struct filtration_window {
    int n = 2;
    std::int64_t m_lo = -3;
    std::int64_t m_hi = 3;
    std::int64_t bound = 4;
};

/// Verifies the filtration axioms on the window:
///  (1) unit membership, (2) monotonicity, (3) multiplicativity on monomial
///  pairs, (4) every window monomial lies in some component, plus the strict
///  boundary rule  L^<= L^< + L^< L^<= within L^<.
/// Membership in a component is an up-set in the index and the monoid is
/// monotone, so the product checks range over each monomial's minimal
/// indices; check_filtration_axioms_exhaustive quantifies all index pairs
/// literally and is the reference the kernel is tested against.
///
/// Expect strict_product = false on any window with two negative directions:
/// the monoid is not strictly ordered (x*y = x*y' can absorb y < y'), and the
/// report carries concrete counterexamples such as
///   x1^-1 in L^<=(-1,{1}),  x2^-1 in L^<(-1,{1,2})  but
///   x1^-1 x2^-1 not in L^<(-2,{1,2}).
/// Only the degree-strict instances of the rule hold in general.
axiom_report check_filtration_axioms(const filtration_window& w,
                                     run_mode mode = run_mode::parallel);

axiom_report check_filtration_axioms_exhaustive(const filtration_window& w);

/// Graded piece basis = W basis (w_basis_window at alpha = 0) on the window.
bool graded_iso_check(int n, const poset_index& idx, std::int64_t bound);

} // namespace lgl

#endif
