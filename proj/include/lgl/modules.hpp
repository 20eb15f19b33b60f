#ifndef LGL_MODULES_HPP
#define LGL_MODULES_HPP

#include "lgl/action.hpp"
#include "lgl/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lgl {

bool is_subset(const index_set& a, const index_set& b);
index_set set_intersect(const index_set& a, const index_set& b);

enum class module_kind { V, L, W };

/// Symbolic identifier for V^alpha(m,J), L^alpha(m,j), W^alpha(m,J).
/// V/W carry the index set J (a subset of I_alpha); L carries the level j.
struct module_id {
    module_kind kind;
    alpha_param alpha;
    std::int64_t m;
    index_set J; // V, W
    int j = 0;   // L

    static module_id make_V(alpha_param alpha, std::int64_t m, index_set J);
    static module_id make_L(alpha_param alpha, std::int64_t m, int j);
    static module_id make_W(alpha_param alpha, std::int64_t m, index_set J);

    std::string str() const;
};

/// Outcome of the cyclic-generator classification: either a canonical
/// generator exponent, the zero module, or a collapse onto L^alpha(m, j).
struct cyclic_generator {
    exponent gen;
    std::string case_label;
};
struct zero_module {
    std::string case_label;
};
struct equals_module {
    std::int64_t m;
    int j;
    std::string case_label;
};
using generator_result = std::variant<cyclic_generator, zero_module, equals_module>;

const std::string& case_label(const generator_result& r);

/// Highest-weight certificate: a coset representative of W^alpha(m,J) whose
/// raising images all fall into L^alpha(m, |J|-1) (the zero module when
/// |J| = 0).
struct hw_certificate {
    exponent vec;
    weight wt;
    std::int64_t m;
    index_set J;
};

/// x^k in V^alpha(m,J): degree m and neg(k) intersect I_alpha inside J.
/// Throws std::invalid_argument when J is not a subset of I_alpha.
bool member_V(const exponent& k, const alpha_param& alpha, std::int64_t m, const index_set& J);

/// x^k in L^alpha(m,j): degree m and |neg(k) intersect I_alpha| <= j.
/// Throws std::invalid_argument unless 0 <= j <= |I_alpha|.
bool member_L(const exponent& k, const alpha_param& alpha, std::int64_t m, int j);

generator_result generator_of_V(const alpha_param& alpha, std::int64_t m, const index_set& J);

/// Whether x^k generates V^alpha(m,J): any member with neg(k) intersect
/// I_alpha equal to J does. Throws std::invalid_argument when the case has no
/// generator (zero module or collapse).
bool is_generator(const exponent& k, const alpha_param& alpha, std::int64_t m, const index_set& J);

/// Canonical W-representative of f + L^alpha(m,j-1): terms at level <= j-1
/// are deleted; every kept term sits at level exactly j. Throws
/// std::invalid_argument when some term of f lies outside L^alpha(m,j).
laurent_poly reduce_mod_lower(const laurent_poly& f, const alpha_param& alpha, std::int64_t m,
                              int j);

/// All k with degree m, |k[i]| <= bound, and neg(k) intersect I_alpha = J,
/// lexicographically sorted.
std::vector<exponent> w_basis_window(const alpha_param& alpha, std::int64_t m, const index_set& J,
                                     std::int64_t bound);

/// Returns a certificate exactly in the three highest-weight patterns:
///  (1) alpha supported at a single index l with nonzero value, J = {1..l-1};
///  (2) alpha = 0, J = {1..l-1}, m+l-1 >= 0;
///  (3) alpha = 0, J = {1..l},   m+l-1 < 0.
std::optional<hw_certificate> classify_hw(const alpha_param& alpha, std::int64_t m,
                                          const index_set& J);

/// Replays the annihilation check: the representative has the recorded weight,
/// represents the (m,J) block, and every raising E_ab (a < b) sends it into
/// L^alpha(m, |J|-1).
bool verify_hw(const hw_certificate& cert, const alpha_param& alpha);

/// True exactly for the two integral dominant cases:
///  (i) alpha = 0, J = {}, m >= 0;  (ii) alpha = 0, J = {1..n}, m <= -n.
bool is_finite_dimensional(const alpha_param& alpha, std::int64_t m, const index_set& J);

/// Number of monomials with degree m and neg intersect I_alpha = J when that
/// count is finite (case i: C(m+n-1, n-1); case ii: C(-m-1, n-1)), otherwise
/// nullopt.
std::optional<std::uint64_t> dimension_count(const alpha_param& alpha, std::int64_t m,
                                             const index_set& J);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace lgl

#endif
