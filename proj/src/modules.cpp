#include "lgl/modules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgl {

bool is_subset(const index_set& a, const index_set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

index_set set_intersect(const index_set& a, const index_set& b) {
    index_set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

namespace {

void check_J(const alpha_param& alpha, const index_set& J, const char* what) {
    if (!is_subset(J, alpha.zero_set()))
        throw std::invalid_argument(std::string(what) + ": J must be a subset of I_alpha");
}

void check_level(const alpha_param& alpha, int j, const char* what) {
    if (j < 0 || j > static_cast<int>(alpha.zero_set().size()))
        throw std::invalid_argument(std::string(what) + ": j out of range 0..|I_alpha|");
}

std::string set_str(const index_set& J) {
    std::string out = "{";
    for (int l : J) {
        if (out.size() > 1) out += ',';
        out += std::to_string(l);
    }
    return out + "}";
}

// x_{J,t}: exponent -1 on J and extra at position t (t not in J).
exponent x_J_t(int n, const index_set& J, int t, std::int64_t extra) {
    exponent k = exponent::zero(n);
    for (int l : J) k.set(l, -1);
    k.set(t, extra);
    return k;
}

// x_J: exponent -1 on J except its largest element, which carries |J|-1-mp.
exponent x_J(int n, const index_set& J, std::int64_t mp) {
    exponent k = exponent::zero(n);
    for (int l : J) k.set(l, -1);
    k.set(*J.rbegin(), static_cast<std::int64_t>(J.size()) - 1 - mp);
    return k;
}

int smallest_outside(int n, const index_set& s) {
    for (int l = 1; l <= n; ++l)
        if (!s.count(l)) return l;
    throw std::logic_error("smallest_outside: set covers 1..n");
}

} // namespace

module_id module_id::make_V(alpha_param alpha, std::int64_t m, index_set J) {
    check_J(alpha, J, "module_id::make_V");
    return module_id{module_kind::V, std::move(alpha), m, std::move(J), 0};
}

module_id module_id::make_L(alpha_param alpha, std::int64_t m, int j) {
    check_level(alpha, j, "module_id::make_L");
    return module_id{module_kind::L, std::move(alpha), m, {}, j};
}

module_id module_id::make_W(alpha_param alpha, std::int64_t m, index_set J) {
    check_J(alpha, J, "module_id::make_W");
    return module_id{module_kind::W, std::move(alpha), m, std::move(J), 0};
}

std::string module_id::str() const {
    std::ostringstream os;
    switch (kind) {
        case module_kind::V: os << "V"; break;
        case module_kind::L: os << "L"; break;
        case module_kind::W: os << "W"; break;
    }
    os << "^" << alpha.str() << "(" << m << ",";
    if (kind == module_kind::L)
        os << j;
    else
        os << set_str(J);
    os << ")";
    return os.str();
}

const std::string& case_label(const generator_result& r) {
    return std::visit([](const auto& v) -> const std::string& { return v.case_label; }, r);
}

bool member_V(const exponent& k, const alpha_param& alpha, std::int64_t m, const index_set& J) {
    check_var_count(k.size(), alpha.size(), "member_V");
    check_J(alpha, J, "member_V");
    if (k.degree() != m) return false;
    return is_subset(set_intersect(k.neg_support(), alpha.zero_set()), J);
}

bool member_L(const exponent& k, const alpha_param& alpha, std::int64_t m, int j) {
    check_var_count(k.size(), alpha.size(), "member_L");
    check_level(alpha, j, "member_L");
    if (k.degree() != m) return false;
    return static_cast<int>(set_intersect(k.neg_support(), alpha.zero_set()).size()) <= j;
}

generator_result generator_of_V(const alpha_param& alpha, std::int64_t m, const index_set& J) {
    check_J(alpha, J, "generator_of_V");
    const int n = alpha.size();
    const int j = static_cast<int>(J.size());

    if (!alpha.is_zero()) {
        int t = smallest_outside(n, alpha.zero_set());
        return cyclic_generator{x_J_t(n, J, t, m + j), "Thm4.2"};
    }

    // alpha = 0, I_alpha = {1..n}
    if (m >= 0) {
        if (j <= n - 1) {
            int t = smallest_outside(n, J);
            return cyclic_generator{x_J_t(n, J, t, m + j), "Thm4.3-1"};
        }
        return equals_module{m, n - 1, "Thm4.3-2"};
    }

    const std::int64_t mp = -m; // degree -mp with mp >= 1
    if (mp < n) {
        if (j == 0) return zero_module{"Thm4.4-1a"};
        if (j <= mp) return cyclic_generator{x_J(n, J, mp), "Thm4.4-1b"};
        if (j <= n - 1) {
            int t = smallest_outside(n, J);
            return cyclic_generator{x_J_t(n, J, t, j - mp), "Thm4.4-1c"};
        }
        return equals_module{m, n - 1, "Thm4.4-1d"};
    }
    if (j == 0) return zero_module{"Thm4.4-2a"};
    return cyclic_generator{x_J(n, J, mp), "Thm4.4-2b"};
}

bool is_generator(const exponent& k, const alpha_param& alpha, std::int64_t m, const index_set& J) {
    generator_result r = generator_of_V(alpha, m, J);
    if (!std::holds_alternative<cyclic_generator>(r))
        throw std::invalid_argument("is_generator: undefined in case " + case_label(r));
    return member_V(k, alpha, m, J) && set_intersect(k.neg_support(), alpha.zero_set()) == J;
}

laurent_poly reduce_mod_lower(const laurent_poly& f, const alpha_param& alpha, std::int64_t m,
                              int j) {
    check_var_count(f.var_count(), alpha.size(), "reduce_mod_lower");
    check_level(alpha, j, "reduce_mod_lower");
    laurent_poly out(f.var_count());
    for (const auto& [k, c] : f.terms()) {
        if (!member_L(k, alpha, m, j))
            throw std::invalid_argument("reduce_mod_lower: term x^" + k.str() +
                                        " outside L(m,j)");
        int level = static_cast<int>(set_intersect(k.neg_support(), alpha.zero_set()).size());
        if (level == j) out.add_term(k, c);
    }
    return out;
}

std::vector<exponent> w_basis_window(const alpha_param& alpha, std::int64_t m, const index_set& J,
                                     std::int64_t bound) {
    check_J(alpha, J, "w_basis_window");
    std::vector<exponent> out;
    for (exponent& k : degree_window(alpha.size(), m, bound))
        if (set_intersect(k.neg_support(), alpha.zero_set()) == J) out.push_back(std::move(k));
    return out;
}

namespace {

bool is_prefix(const index_set& J, int r) {
    if (static_cast<int>(J.size()) != r) return false;
    for (int l = 1; l <= r; ++l)
        if (!J.count(l)) return false;
    return true;
}

hw_certificate make_cert(const alpha_param& alpha, std::int64_t m, const index_set& J, int l) {
    exponent vec = exponent::zero(alpha.size());
    for (int i = 1; i < l; ++i) vec.set(i, -1);
    vec.set(l, m + l - 1);
    return hw_certificate{vec, weight_of(vec, alpha), m, J};
}

} // namespace

std::optional<hw_certificate> classify_hw(const alpha_param& alpha, std::int64_t m,
                                          const index_set& J) {
    const int n = alpha.size();
    if (!alpha.is_zero()) {
        // Pattern 1: alpha supported at one index l; J is the full prefix below it.
        if (static_cast<int>(alpha.zero_set().size()) != n - 1) return std::nullopt;
        int l = smallest_outside(n, alpha.zero_set());
        if (!is_prefix(J, l - 1)) return std::nullopt;
        return make_cert(alpha, m, J, l);
    }
    const int r = static_cast<int>(J.size());
    if (!is_prefix(J, r)) return std::nullopt;
    if (r + 1 <= n && m + r >= 0) return make_cert(alpha, m, J, r + 1); // Pattern 2, l = r+1
    if (r >= 1 && m + r - 1 < 0) return make_cert(alpha, m, J, r);     // Pattern 3, l = r
    return std::nullopt;
}

bool verify_hw(const hw_certificate& cert, const alpha_param& alpha) {
    const int n = alpha.size();
    if (cert.vec.size() != n) return false;
    if (cert.vec.degree() != cert.m) return false;
    if (set_intersect(cert.vec.neg_support(), alpha.zero_set()) != cert.J) return false;
    if (weight_of(cert.vec, alpha) != cert.wt) return false;
    const int j = static_cast<int>(cert.J.size());
    laurent_poly v = laurent_poly::monomial(cert.vec);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            laurent_poly image = act(matrix_unit{a, b}, v, alpha);
            if (image.is_zero()) continue;
            if (j == 0) return false; // L(m,-1) = {0}: nothing may survive
            for (const auto& [q, c] : image.terms())
                if (!member_L(q, alpha, cert.m, j - 1)) return false;
        }
    }
    return true;
}

bool is_finite_dimensional(const alpha_param& alpha, std::int64_t m, const index_set& J) {
    check_J(alpha, J, "is_finite_dimensional");
    if (!alpha.is_zero()) return false;
    const int n = alpha.size();
    if (J.empty() && m >= 0) return true;
    return static_cast<int>(J.size()) == n && m <= -n;
}

std::optional<std::uint64_t> dimension_count(const alpha_param& alpha, std::int64_t m,
                                             const index_set& J) {
    if (!is_finite_dimensional(alpha, m, J)) return std::nullopt;
    const std::uint64_t n = static_cast<std::uint64_t>(alpha.size());
    if (J.empty()) return binomial(static_cast<std::uint64_t>(m) + n - 1, n - 1);
    return binomial(static_cast<std::uint64_t>(-m) - 1, n - 1);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!out.fits_ulong_p()) throw std::overflow_error("binomial: result exceeds 64 bits");
    return out.get_ui();
}

} // namespace lgl
