#include "lgl/filtration.hpp"

#include "lgl/modules.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace lgl {

std::string poset_index::str() const {
    std::string out = "(" + std::to_string(m) + ",{";
    bool first = true;
    for (int l : J) {
        if (!first) out += ',';
        out += std::to_string(l);
        first = false;
    }
    return out + "})";
}

bool poset_leq(const poset_index& x, const poset_index& y) {
    return x.m <= y.m && is_subset(x.J, y.J);
}

poset_index monoid_mul(const poset_index& x, const poset_index& y) {
    poset_index out{x.m + y.m, x.J};
    out.J.insert(y.J.begin(), y.J.end());
    return out;
}

bool member_leq(const exponent& k, const poset_index& idx) {
    return k.degree() <= idx.m && is_subset(k.neg_support(), idx.J);
}

bool member_lt(const exponent& k, const poset_index& idx) {
    std::int64_t d = k.degree();
    index_set neg = k.neg_support();
    if (d < idx.m) return is_subset(neg, idx.J);
    return d == idx.m && is_subset(neg, idx.J) && neg != idx.J;
}

std::vector<exponent> graded_basis(int n, const poset_index& idx, std::int64_t bound) {
    std::vector<exponent> out;
    for (exponent& k : degree_window(n, idx.m, bound))
        if (member_leq(k, idx) && !member_lt(k, idx)) out.push_back(std::move(k));
    return out;
}

namespace {

std::vector<exponent> window_union(const filtration_window& w) {
    std::vector<exponent> out;
    for (std::int64_t m = w.m_lo; m <= w.m_hi; ++m)
        for (exponent& k : degree_window(w.n, m, w.bound)) out.push_back(std::move(k));
    return out;
}

std::vector<poset_index> all_indices(const filtration_window& w) {
    std::vector<poset_index> out;
    for (std::int64_t m = w.m_lo; m <= w.m_hi; ++m) {
        for (unsigned mask = 0; mask < (1u << w.n); ++mask) {
            poset_index idx{m, {}};
            for (int l = 1; l <= w.n; ++l)
                if (mask & (1u << (l - 1))) idx.J.insert(l);
            out.push_back(std::move(idx));
        }
    }
    return out;
}

// Minimal index x0 with member_leq(k, x0); every index with member_leq is >= x0.
poset_index min_leq_index(const exponent& k) { return poset_index{k.degree(), k.neg_support()}; }

// Minimal indices y with member_lt(k, y): raise the degree or grow the
// negative support by one element.
std::vector<poset_index> min_lt_indices(const exponent& k) {
    std::vector<poset_index> out;
    poset_index base = min_leq_index(k);
    out.push_back(poset_index{base.m + 1, base.J});
    for (int l = 1; l <= k.size(); ++l) {
        if (!base.J.count(l)) {
            poset_index grown = base;
            grown.J.insert(l);
            out.push_back(std::move(grown));
        }
    }
    return out;
}

void note_failure(axiom_report& report, bool& flag, const char* axiom,
                  std::vector<exponent> monomials, std::vector<poset_index> indices) {
    flag = false;
    if (report.counterexamples.size() < 8)
        report.counterexamples.push_back({axiom, std::move(monomials), std::move(indices)});
}

axiom_report run_kernel(const filtration_window& w, bool use_omp) {
    axiom_report report;
    const std::vector<exponent> ks = window_union(w);
    const std::vector<poset_index> idxs = all_indices(w);
    const std::int64_t nk = static_cast<std::int64_t>(ks.size());
    const std::int64_t ni = static_cast<std::int64_t>(idxs.size());

    // (1) unit
    report.unit = member_leq(exponent::zero(w.n), poset_index{0, {}});
    report.checked += 1;

    // (2) monotonicity over window monomials and comparable index pairs
    bool monotone_ok = true;
#pragma omp parallel for collapse(2) schedule(static) reduction(&& : monotone_ok) if (use_omp)
    for (std::int64_t ki = 0; ki < nk; ++ki)
        for (std::int64_t xi = 0; xi < ni; ++xi) {
            bool kx = member_leq(ks[ki], idxs[xi]);
            if (!kx) continue;
            for (std::int64_t yi = 0; yi < ni; ++yi)
                if (poset_leq(idxs[xi], idxs[yi]) && !member_leq(ks[ki], idxs[yi]))
                    monotone_ok = false;
        }
    report.checked += static_cast<std::uint64_t>(nk) * ni * ni;
    if (!monotone_ok) {
        // serial re-scan for a deterministic witness
        for (const exponent& k : ks)
            for (const poset_index& x : idxs)
                for (const poset_index& y : idxs)
                    if (poset_leq(x, y) && member_leq(k, x) && !member_leq(k, y))
                        note_failure(report, report.monotone, "monotone", {k}, {x, y});
    }

    // (3) product and (5) strict product over monomial pairs; given (2) it is
    // enough to start from each factor's minimal indices.
    bool product_ok = true;
    bool strict_ok = true;
#pragma omp parallel for collapse(2) schedule(static) \
    reduction(&& : product_ok) reduction(&& : strict_ok) if (use_omp)
    for (std::int64_t i = 0; i < nk; ++i)
        for (std::int64_t jj = 0; jj < nk; ++jj) {
            const exponent& k1 = ks[i];
            const exponent& k2 = ks[jj];
            exponent sum = k1 + k2;
            poset_index x0 = min_leq_index(k1);
            if (!member_leq(sum, monoid_mul(x0, min_leq_index(k2)))) product_ok = false;
            for (const poset_index& y : min_lt_indices(k2))
                if (!member_lt(sum, monoid_mul(x0, y))) strict_ok = false;
        }
    report.checked += static_cast<std::uint64_t>(nk) * nk;
    if (!product_ok || !strict_ok) {
        for (const exponent& k1 : ks)
            for (const exponent& k2 : ks) {
                exponent sum = k1 + k2;
                poset_index x0 = min_leq_index(k1);
                if (!member_leq(sum, monoid_mul(x0, min_leq_index(k2))))
                    note_failure(report, report.product, "product", {k1, k2},
                                 {x0, min_leq_index(k2)});
                for (const poset_index& y : min_lt_indices(k2))
                    if (!member_lt(sum, monoid_mul(x0, y)))
                        note_failure(report, report.strict_product, "strict_product", {k1, k2},
                                     {x0, y});
            }
    }

    // (4) exhaustiveness: each window monomial lies in its own component
    for (const exponent& k : ks) {
        if (!member_leq(k, min_leq_index(k)))
            note_failure(report, report.exhaustive, "exhaustive", {k}, {min_leq_index(k)});
        ++report.checked;
    }
    return report;
}

} // namespace

axiom_report check_filtration_axioms(const filtration_window& w, run_mode mode) {
    if (w.n < 1 || w.m_lo > w.m_hi || w.bound < 0)
        throw std::invalid_argument("check_filtration_axioms: bad window");
    return run_kernel(w, mode == run_mode::parallel);
}

axiom_report check_filtration_axioms_exhaustive(const filtration_window& w) {
    if (w.n < 1 || w.m_lo > w.m_hi || w.bound < 0)
        throw std::invalid_argument("check_filtration_axioms_exhaustive: bad window");
    axiom_report report;
    const std::vector<exponent> ks = window_union(w);
    const std::vector<poset_index> idxs = all_indices(w);

    report.unit = member_leq(exponent::zero(w.n), poset_index{0, {}});
    report.checked += 1;

    for (const exponent& k : ks)
        for (const poset_index& x : idxs)
            for (const poset_index& y : idxs) {
                ++report.checked;
                if (poset_leq(x, y) && member_leq(k, x) && !member_leq(k, y))
                    note_failure(report, report.monotone, "monotone", {k}, {x, y});
            }

    for (const exponent& k1 : ks)
        for (const exponent& k2 : ks) {
            exponent sum = k1 + k2;
            for (const poset_index& x : idxs)
                for (const poset_index& y : idxs) {
                    ++report.checked;
                    poset_index xy = monoid_mul(x, y);
                    bool leq1 = member_leq(k1, x);
                    bool leq2 = member_leq(k2, y);
                    if (leq1 && leq2 && !member_leq(sum, xy))
                        note_failure(report, report.product, "product", {k1, k2}, {x, y});
                    if (leq1 && member_lt(k2, y) && !member_lt(sum, xy))
                        note_failure(report, report.strict_product, "strict_product", {k1, k2},
                                     {x, y});
                    if (member_lt(k1, x) && leq2 && !member_lt(sum, xy))
                        note_failure(report, report.strict_product, "strict_product", {k1, k2},
                                     {x, y});
                }
        }

    for (const exponent& k : ks) {
        ++report.checked;
        if (!member_leq(k, min_leq_index(k)))
            note_failure(report, report.exhaustive, "exhaustive", {k}, {min_leq_index(k)});
    }
    return report;
}

bool graded_iso_check(int n, const poset_index& idx, std::int64_t bound) {
    return graded_basis(n, idx, bound) == w_basis_window(alpha_param::zero(n), idx.m, idx.J, bound);
}

} // namespace lgl
