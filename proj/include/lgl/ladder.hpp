#ifndef LGL_LADDER_HPP
#define LGL_LADDER_HPP

#include "lgl/action.hpp"
#include "lgl/laurent.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace lgl {

/// One application E_{t,s} . x^(before) = coeff * x^(after); `after` is the
/// intermediate exponent reached by the step.
struct ladder_step {
    matrix_unit unit;
    gaussian_rational coeff;
    exponent after;
};

/// Constructive certificate that x^source reaches x^target: the normalized
/// word (prefactor = inverse of the step-coefficient product) replays to
/// exactly x^target, and every intermediate exponent stays inside the
/// componentwise box spanned by source and target.
struct ladder_certificate {
    exponent source;
    exponent target;
    uword word;
    std::vector<ladder_step> steps;
};

/// Builds the ladder certificate for the pair (p, q).
/// Preconditions (std::invalid_argument otherwise):
///   degree(p) = degree(q) and neg(q) intersect I_alpha inside neg(p)
///   intersect I_alpha.
/// For p = q the identity certificate is returned.
ladder_certificate ladder_word(const exponent& p, const exponent& q, const alpha_param& alpha);

/// Derivation DAG isolating every term of a polynomial inside its cyclic
/// module. ops[0] is the root (the input); each later op either applies a
/// Cartan unit E_aa to an earlier node or linearly combines two earlier
/// nodes. For every term c * x^k of the input there is a node whose value is
/// exactly c * x^k.
struct sep_root {};
struct sep_apply {
    int a;
    std::size_t src;
};
struct sep_combine {
    gaussian_rational c1;
    std::size_t src1;
    gaussian_rational c2;
    std::size_t src2;
};
using sep_op = std::variant<sep_root, sep_apply, sep_combine>;

struct isolated_term {
    exponent exp;
    gaussian_rational coeff;
    std::size_t node;
};

struct separation_certificate {
    laurent_poly input;
    std::vector<sep_op> ops;
    std::vector<isolated_term> terms;
};

/// Weight-separation procedure. Throws std::invalid_argument on zero input.
separation_certificate separate_terms(const laurent_poly& f, const alpha_param& alpha);

/// Evaluates every node of the derivation; vals[term.node] must equal
/// coeff * x^exp for each isolated term (checked by tests and audits).
std::vector<laurent_poly> replay_separation(const separation_certificate& cert,
                                            const alpha_param& alpha);

} // namespace lgl

#endif
