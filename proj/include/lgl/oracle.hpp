#ifndef LGL_ORACLE_HPP
#define LGL_ORACLE_HPP

#include "lgl/ladder.hpp"
#include "lgl/laurent.hpp"
#include "lgl/modules.hpp"
#include "lgl/parallel.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lgl {

/// Finite truncation of a degree slice: all k with sum(k) = m and
/// |k[i]| <= bound.
struct window {
    int n = 2;
    std::int64_t m = 0;
    std::int64_t bound = 6;

    bool contains(const exponent& k) const;
    std::vector<exponent> exponents() const;
};

/// BFS closure of `start` under single-unit moves with nonzero coefficient,
/// restricted to the window. Throws std::invalid_argument when start is
/// outside the window.
std::set<exponent> reachability_set(const exponent& start, const alpha_param& alpha,
                                    const window& w);

struct reach_report {
    std::optional<exponent> start;
    std::set<exponent> reached;
    std::set<exponent> expected;
    bool verdict = false;
    std::vector<exponent> missing; // expected but not reached
    std::vector<exponent> extra;   // reached but not expected
    std::string note;
};

/// Window-level cyclicity oracle for V^alpha(m,J).
/// With a generator: BFS from it must equal the member_V window set (the BFS
/// runs in a box enlarged to contain the generator, then restricts back, so
/// truncation cannot lose ladder paths). Zero-module cases demand an empty
/// member set; collapse cases demand member_V = member_L(m, n-1) on the
/// window.
reach_report check_cyclic(const alpha_param& alpha, std::int64_t m, const index_set& J,
                          const window& w);

/// Simplicity evidence for W^alpha(m,J): in the quotient action every window
/// basis monomial reaches every other. Throws std::invalid_argument when the
/// window basis is empty.
reach_report check_simple_W(const alpha_param& alpha, std::int64_t m, const index_set& J,
                            const window& w);

struct direct_sum_report {
    bool verdict = false;
    int j = 0;
    std::size_t quotient_size = 0;
    std::vector<std::pair<index_set, std::size_t>> blocks;
    std::vector<exponent> violations;
    bool checked_unquotiented = false; // the alpha = 0, m < 0, j = 1 split of L itself
    bool unquotiented_ok = true;
    std::string note;
};

/// The level-j window monomials must partition into the W blocks indexed by
/// |J| = j; for alpha = 0, m < 0, j = 1 additionally checks the unquotiented
/// decomposition of L(m,1) into the V(m,{l}).
direct_sum_report check_direct_sum(const alpha_param& alpha, std::int64_t m, int j,
                                   const window& w);

struct binomial_fact {
    int n1 = 0, n2 = 0;
    std::uint64_t lhs = 0, rhs = 0;
    bool ok = false;
};

struct pair_witness {
    index_set J1, J2, meet;
    exponent gen;
};

struct floor_fact {
    index_set J;
    exponent gen;
    exponent floor;
    bool ladder_ok = false;
};

struct indecomp_report {
    std::string mode; // "nonzero-alpha", "nonneg-degree", "negative-degree", "negative-degree-cyclic"
    bool verdict = false;
    std::vector<floor_fact> floors;
    std::vector<binomial_fact> splits;
    std::vector<pair_witness> witnesses;
    std::string note;
};

/// Emits the indecomposability proof ingredients for L^alpha(m,j) as
/// checkable facts. Throws std::invalid_argument for cases that are not
/// asserted indecomposable (alpha = 0 with j = 0 or j = 1 at negative degree,
/// and the n=2, j=2, m=-1 configuration that collapses onto the decomposable
/// level 1).
indecomp_report indecomposability_certificate(const alpha_param& alpha, std::int64_t m, int j);

struct closure_violation {
    exponent k;
    matrix_unit u;
    exponent image;
};

struct closure_report {
    bool verdict = false;
    std::uint64_t members = 0;
    std::uint64_t checked = 0;
    std::vector<closure_violation> violations;
};

/// For every member exponent in the window and every E_ab, each image term
/// must again be a member (images are checked even when they leave the
/// window; membership is a global predicate). The id must be a V or L module.
closure_report closure_check(const module_id& id, const window& w,
                             run_mode mode = run_mode::parallel);

struct sweep_config {
    std::vector<int> ns{2, 3, 4};
    std::int64_t m_lo = -5;
    std::int64_t m_hi = 5;
    std::int64_t bound = 6;
    /// Raw twist vectors, padded with zeros or truncated to each n, then
    /// normalized. Defaults to 0 and (1/2, i, 0, ...).
    std::vector<std::vector<gaussian_rational>> alphas;

    static sweep_config desk_default();
};

struct sweep_case {
    sweep_case(std::string check, int n, alpha_param alpha, std::int64_t m)
        : check(std::move(check)), n(n), alpha(std::move(alpha)), m(m) {}

    std::string check; // "cyclic", "simple-W", "direct-sum", "closure-V", "closure-L", "indecomposable"
    int n = 0;
    alpha_param alpha;
    std::int64_t m = 0;
    std::optional<index_set> J;
    std::optional<int> j;
    bool verdict = false;
    std::string note;
    std::size_t missing = 0, extra = 0;
    /// For cyclic cases: a replayable ladder path from the generator to one
    /// representative member (the lexicographically largest in the window).
    std::vector<ladder_step> witness_path;
};

struct sweep_report {
    sweep_config config;
    std::vector<sweep_case> cases;
    std::uint64_t passed = 0, failed = 0;
    bool all_pass = false;
};

/// Runs every oracle check over the configured grid. Cases are independent
/// and fan out over OpenMP threads, capped by LGL_SWEEP_THREADS.
sweep_report run_sweep(const sweep_config& config, run_mode mode = run_mode::parallel);

} // namespace lgl

#endif
