#include "lgl/action.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

namespace lgl {

namespace {

void check_unit(const matrix_unit& u, int n) {
    if (u.row < 1 || u.row > n || u.col < 1 || u.col > n)
        throw std::invalid_argument("matrix_unit: indices out of range for n=" + std::to_string(n));
}

gaussian_rational twist_entry(const std::vector<gaussian_rational>& twist, int pos) {
    return twist[static_cast<std::size_t>(pos - 1)];
}

// One monomial step; returns false when the coefficient vanishes.
bool act_monomial(const matrix_unit& u, const exponent& k,
                  const std::vector<gaussian_rational>& twist, exponent& out_k,
                  gaussian_rational& out_c) {
    gaussian_rational c = gaussian_rational(k.at(u.col)) + twist_entry(twist, u.col);
    if (c.is_zero()) return false;
    out_k = k;
    out_k.set(u.row, out_k.at(u.row) + 1);
    out_k.set(u.col, out_k.at(u.col) - 1);
    out_c = std::move(c);
    return true;
}

} // namespace

laurent_poly act(const matrix_unit& u, const laurent_poly& f,
                 const std::vector<gaussian_rational>& twist) {
    check_var_count(f.var_count(), static_cast<int>(twist.size()), "act");
    check_unit(u, f.var_count());
    laurent_poly out(f.var_count());
    for (const auto& [k, c] : f.terms()) {
        exponent kk;
        gaussian_rational w;
        if (act_monomial(u, k, twist, kk, w)) out.add_term(kk, c * w);
    }
    return out;
}

laurent_poly act(const matrix_unit& u, const laurent_poly& f, const alpha_param& alpha) {
    return act(u, f, alpha.entries());
}

laurent_poly act(const uword& w, const laurent_poly& f,
                 const std::vector<gaussian_rational>& twist) {
    laurent_poly cur = f;
    const auto& factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        cur = act(*it, cur, twist);
        if (cur.is_zero()) break;
    }
    return scale(w.prefactor(), cur);
}

laurent_poly act(const uword& w, const laurent_poly& f, const alpha_param& alpha) {
    return act(w, f, alpha.entries());
}

weight weight_of(const exponent& k, const alpha_param& alpha) {
    check_var_count(k.size(), alpha.size(), "weight_of");
    weight out;
    out.reserve(static_cast<std::size_t>(k.size()));
    for (int l = 1; l <= k.size(); ++l) out.push_back(gaussian_rational(k.at(l)) + alpha.at(l));
    return out;
}

std::string weight_str(const weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i].str();
    }
    os << ')';
    return os.str();
}

namespace {

// Checks the identity on a single monomial for one quadruple.
bool commutator_holds(int a, int b, int c, int d, const exponent& k,
                      const std::vector<gaussian_rational>& twist) {
    laurent_poly v = laurent_poly::monomial(k);
    matrix_unit eab{a, b};
    matrix_unit ecd{c, d};
    laurent_poly lhs = act(eab, act(ecd, v, twist), twist) - act(ecd, act(eab, v, twist), twist);
    laurent_poly rhs(k.size());
    if (b == c) rhs += act(matrix_unit{a, d}, v, twist);
    if (d == a) rhs -= act(matrix_unit{c, b}, v, twist);
    return lhs == rhs;
}

} // namespace

commutator_report check_commutator_identity(int n, const std::vector<gaussian_rational>& twist,
                                            std::span<const exponent> monomials, run_mode mode) {
    if (static_cast<int>(twist.size()) != n)
        throw std::invalid_argument("check_commutator_identity: twist size != n");
    commutator_report report;
    const std::int64_t quads = static_cast<std::int64_t>(n) * n * n * n;
    const std::int64_t total = quads * static_cast<std::int64_t>(monomials.size());
    report.checked = static_cast<std::uint64_t>(total);

    if (mode == run_mode::serial) {
        for (const exponent& k : monomials)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c)
                        for (int d = 1; d <= n; ++d)
                            if (!commutator_holds(a, b, c, d, k, twist))
                                report.violations.push_back({a, b, c, d, k});
        report.ok = report.violations.empty();
        return report;
    }

#pragma omp parallel
    {
        std::vector<commutator_violation> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t q = idx % quads;
            const exponent& k = monomials[static_cast<std::size_t>(idx / quads)];
            int d = static_cast<int>(q % n) + 1;
            int c = static_cast<int>((q / n) % n) + 1;
            int b = static_cast<int>((q / (n * n)) % n) + 1;
            int a = static_cast<int>(q / (n * n * n)) + 1;
            if (!commutator_holds(a, b, c, d, k, twist)) local.push_back({a, b, c, d, k});
        }
#pragma omp critical
        report.violations.insert(report.violations.end(), local.begin(), local.end());
    }
    report.ok = report.violations.empty();
    return report;
}

} // namespace lgl
