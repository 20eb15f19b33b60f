#include "lgl/ladder.hpp"

#include "lgl/modules.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace lgl {

ladder_certificate ladder_word(const exponent& p, const exponent& q, const alpha_param& alpha) {
    const int n = alpha.size();
    check_var_count(n, p.size(), "ladder_word");
    check_var_count(n, q.size(), "ladder_word");
    if (p.degree() != q.degree())
        throw std::invalid_argument("ladder_word: source and target degrees differ");
    index_set p_barrier = set_intersect(p.neg_support(), alpha.zero_set());
    index_set q_barrier = set_intersect(q.neg_support(), alpha.zero_set());
    if (!is_subset(q_barrier, p_barrier))
        throw std::invalid_argument(
            "ladder_word: neg(q) within I_alpha must be contained in neg(p) within I_alpha");

    // Multisets of lowered (s) and raised (t) positions, both ascending.
    std::vector<int> s_pos, t_pos;
    for (int l = 1; l <= n; ++l) {
        std::int64_t d = p.at(l) - q.at(l);
        for (std::int64_t i = 0; i < d; ++i) s_pos.push_back(l);
        for (std::int64_t i = 0; i < -d; ++i) t_pos.push_back(l);
    }
    if (s_pos.size() != t_pos.size()) throw std::logic_error("ladder_word: unbalanced multisets");

    ladder_certificate cert{p, q, uword::identity(), {}};
    gaussian_rational product(1);
    std::vector<matrix_unit> factors;
    exponent cur = p;
    for (std::size_t k = 0; k < s_pos.size(); ++k) {
        matrix_unit unit{t_pos[k], s_pos[k]};
        gaussian_rational coeff = gaussian_rational(cur.at(unit.col)) + alpha.at(unit.col);
        if (coeff.is_zero())
            throw std::logic_error("ladder_word: vanishing step coefficient at x^" + cur.str());
        cur.set(unit.row, cur.at(unit.row) + 1);
        cur.set(unit.col, cur.at(unit.col) - 1);
        cert.steps.push_back({unit, coeff, cur});
        product *= coeff;
        factors.push_back(unit);
    }
    if (cur != q) throw std::logic_error("ladder_word: steps do not land on target");
    cert.word = uword(product.inverse(), std::move(factors));
    return cert;
}

namespace {

// Isolates every term of `cur` (the value held at `node`) and returns the
// node holding exactly that term. Recursion: pick the smallest Cartan index
// where the exponents disagree, cancel the leading weight group, and recurse
// on both parts.
std::map<exponent, std::size_t> isolate(separation_certificate& cert, const alpha_param& alpha,
                                        std::size_t node, const laurent_poly& cur) {
    std::map<exponent, std::size_t> out;
    if (cur.term_count() == 1) {
        out.emplace(cur.terms().begin()->first, node);
        return out;
    }

    const int n = cur.var_count();
    int split = 0;
    const exponent& first = cur.terms().begin()->first;
    for (int l = 1; l <= n && split == 0; ++l)
        for (const auto& [k, c] : cur.terms())
            if (k.at(l) != first.at(l)) {
                split = l;
                break;
            }
    if (split == 0) throw std::logic_error("separate_terms: distinct exponents expected");

    gaussian_rational v1 = gaussian_rational(first.at(split)) + alpha.at(split);

    // g = v1 * cur - E_aa . cur kills the leading weight group.
    cert.ops.push_back(sep_apply{split, node});
    std::size_t applied = cert.ops.size() - 1;
    cert.ops.push_back(sep_combine{v1, node, gaussian_rational(-1), applied});
    std::size_t g_node = cert.ops.size() - 1;
    laurent_poly g = scale(v1, cur) - act(matrix_unit{split, split}, cur, alpha);

    std::map<exponent, std::size_t> from_g = isolate(cert, alpha, g_node, g);

    // Rescale each isolated term of g back to its coefficient in cur, then
    // peel them off to leave the leading weight group.
    laurent_poly remainder = cur;
    std::size_t rem_node = node;
    for (const auto& [k, sub_node] : from_g) {
        gaussian_rational factor = v1 - (gaussian_rational(k.at(split)) + alpha.at(split));
        cert.ops.push_back(sep_combine{factor.inverse(), sub_node, gaussian_rational(0), sub_node});
        std::size_t rescaled = cert.ops.size() - 1;
        out.emplace(k, rescaled);
        cert.ops.push_back(sep_combine{gaussian_rational(1), rem_node, gaussian_rational(-1), rescaled});
        rem_node = cert.ops.size() - 1;
        remainder.add_term(k, -cur.coeff(k));
    }

    for (auto& [k, sub_node] : isolate(cert, alpha, rem_node, remainder)) out.emplace(k, sub_node);
    return out;
}

} // namespace

separation_certificate separate_terms(const laurent_poly& f, const alpha_param& alpha) {
    check_var_count(f.var_count(), alpha.size(), "separate_terms");
    if (f.is_zero()) throw std::invalid_argument("separate_terms: zero input");
    separation_certificate cert{f, {sep_root{}}, {}};
    std::map<exponent, std::size_t> nodes = isolate(cert, alpha, 0, f);
    for (const auto& [k, c] : f.terms()) cert.terms.push_back({k, c, nodes.at(k)});
    return cert;
}

std::vector<laurent_poly> replay_separation(const separation_certificate& cert,
                                            const alpha_param& alpha) {
    std::vector<laurent_poly> vals;
    vals.reserve(cert.ops.size());
    for (const sep_op& op : cert.ops) {
        if (std::holds_alternative<sep_root>(op)) {
            vals.push_back(cert.input);
        } else if (const auto* ap = std::get_if<sep_apply>(&op)) {
            if (ap->src >= vals.size()) throw std::invalid_argument("replay: forward reference");
            vals.push_back(act(matrix_unit{ap->a, ap->a}, vals[ap->src], alpha));
        } else {
            const auto& cb = std::get<sep_combine>(op);
            if (cb.src1 >= vals.size() || cb.src2 >= vals.size())
                throw std::invalid_argument("replay: forward reference");
            vals.push_back(scale(cb.c1, vals[cb.src1]) + scale(cb.c2, vals[cb.src2]));
        }
    }
    return vals;
}

} // namespace lgl
