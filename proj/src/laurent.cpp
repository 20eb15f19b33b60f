#include "lgl/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgl {

void check_var_count(int n, int got, const char* what) {
    if (n != got)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) +
                                    " variables, got " + std::to_string(got));
}

exponent::exponent(std::vector<std::int64_t> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("exponent: need at least one variable");
}

exponent exponent::zero(int n) { return exponent(std::vector<std::int64_t>(n, 0)); }

exponent exponent::unit(int n, int pos) {
    exponent e = zero(n);
    e.set(pos, 1);
    return e;
}

std::int64_t exponent::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::invalid_argument("exponent: position out of range");
    return e_[static_cast<std::size_t>(pos - 1)];
}

void exponent::set(int pos, std::int64_t v) {
    if (pos < 1 || pos > size()) throw std::invalid_argument("exponent: position out of range");
    e_[static_cast<std::size_t>(pos - 1)] = v;
}

std::int64_t exponent::degree() const {
    std::int64_t d = 0;
    for (std::int64_t v : e_) d += v;
    return d;
}

index_set exponent::neg_support() const {
    index_set out;
    for (int l = 1; l <= size(); ++l)
        if (e_[static_cast<std::size_t>(l - 1)] < 0) out.insert(l);
    return out;
}

exponent exponent::operator+(const exponent& o) const {
    check_var_count(size(), o.size(), "exponent+");
    std::vector<std::int64_t> out(e_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.e_[i];
    return exponent(std::move(out));
}

exponent exponent::operator-(const exponent& o) const {
    check_var_count(size(), o.size(), "exponent-");
    std::vector<std::int64_t> out(e_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.e_[i];
    return exponent(std::move(out));
}

std::string exponent::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

laurent_poly::laurent_poly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("laurent_poly: need at least one variable");
}

laurent_poly laurent_poly::monomial(const exponent& k, gaussian_rational coeff) {
    laurent_poly f(k.size());
    f.add_term(k, coeff);
    return f;
}

gaussian_rational laurent_poly::coeff(const exponent& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? gaussian_rational() : it->second;
}

void laurent_poly::add_term(const exponent& k, const gaussian_rational& c) {
    check_var_count(n_, k.size(), "laurent_poly::add_term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

laurent_poly& laurent_poly::operator+=(const laurent_poly& o) {
    check_var_count(n_, o.n_, "laurent_poly+");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

laurent_poly& laurent_poly::operator-=(const laurent_poly& o) {
    check_var_count(n_, o.n_, "laurent_poly-");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

std::string laurent_poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << '(' << c.str() << ")*x^" << k.str();
        first = false;
    }
    return os.str();
}

laurent_poly scale(const gaussian_rational& c, const laurent_poly& f) {
    laurent_poly out(f.var_count());
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f.terms()) out.add_term(k, c * v);
    return out;
}

laurent_poly shift_iso(const laurent_poly& f, const exponent& shift) {
    check_var_count(f.var_count(), shift.size(), "shift_iso");
    laurent_poly out(f.var_count());
    for (const auto& [k, v] : f.terms()) out.add_term(k + shift, v);
    return out;
}

alpha_param alpha_param::from_normalized(std::vector<gaussian_rational> entries) {
    if (entries.empty()) throw std::invalid_argument("alpha_param: need at least one entry");
    alpha_param a;
    for (int l = 1; l <= static_cast<int>(entries.size()); ++l) {
        const mpq_class& re = entries[static_cast<std::size_t>(l - 1)].re();
        if (sgn(re) < 0 || re >= 1)
            throw std::invalid_argument("alpha_param: entry " + std::to_string(l) +
                                        " not normalized (need 0 <= Re < 1)");
        if (entries[static_cast<std::size_t>(l - 1)].is_zero()) a.zero_set_.insert(l);
    }
    a.entries_ = std::move(entries);
    return a;
}

std::pair<alpha_param, exponent> alpha_param::normalize(const std::vector<gaussian_rational>& raw) {
    if (raw.empty()) throw std::invalid_argument("alpha_param: need at least one entry");
    std::vector<gaussian_rational> norm;
    std::vector<std::int64_t> shift;
    norm.reserve(raw.size());
    shift.reserve(raw.size());
    for (const gaussian_rational& v : raw) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), v.re().get_num().get_mpz_t(), v.re().get_den().get_mpz_t());
        if (!fl.fits_slong_p())
            throw std::invalid_argument("alpha_param: integer part of entry too large");
        shift.push_back(fl.get_si());
        norm.emplace_back(v.re() - mpq_class(fl), v.im());
    }
    return {from_normalized(std::move(norm)), exponent(std::move(shift))};
}

alpha_param alpha_param::zero(int n) {
    return from_normalized(std::vector<gaussian_rational>(static_cast<std::size_t>(n)));
}

const gaussian_rational& alpha_param::at(int pos) const {
    if (pos < 1 || pos > size()) throw std::invalid_argument("alpha_param: position out of range");
    return entries_[static_cast<std::size_t>(pos - 1)];
}

std::string alpha_param::str() const {
    std::string out = "(";
    for (int l = 1; l <= size(); ++l) {
        if (l > 1) out += ',';
        out += at(l).str();
    }
    out += ')';
    return out;
}

namespace {

void enumerate_rec(int n, int pos, std::int64_t remaining, std::int64_t bound,
                   std::vector<std::int64_t>& cur, std::vector<exponent>& out) {
    if (pos == n) {
        if (remaining >= -bound && remaining <= bound) {
            cur.push_back(remaining);
            out.push_back(exponent(cur));
            cur.pop_back();
        }
        return;
    }
    // Entry v is feasible only if the tail of n-pos entries can absorb remaining-v.
    std::int64_t tail = static_cast<std::int64_t>(n - pos) * bound;
    std::int64_t lo = std::max(-bound, remaining - tail);
    std::int64_t hi = std::min(bound, remaining + tail);
    for (std::int64_t v = lo; v <= hi; ++v) {
        cur.push_back(v);
        enumerate_rec(n, pos + 1, remaining - v, bound, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<exponent> degree_window(int n, std::int64_t m, std::int64_t bound) {
    if (n < 1) throw std::invalid_argument("degree_window: need at least one variable");
    if (bound < 0) throw std::invalid_argument("degree_window: bound must be nonnegative");
    std::vector<exponent> out;
    std::vector<std::int64_t> cur;
    cur.reserve(static_cast<std::size_t>(n));
    enumerate_rec(n, 1, m, bound, cur, out);
    return out;
}

} // namespace lgl
