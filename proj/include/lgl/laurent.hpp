#ifndef LGL_LAURENT_HPP
#define LGL_LAURENT_HPP

#include "lgl/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lgl {

/// Index sets (negative supports, zero sets, the J parameters) use 1-based
/// positions throughout, matching the external JSON/CLI convention.
using index_set = std::set<int>;

/// Integer vector k identifying the Laurent monomial x^k.
///
/// Positions are 1-based everywhere in the API; the comparison order is
/// lexicographic on the entries.
class exponent {
public:
    exponent() = default;
    explicit exponent(std::vector<std::int64_t> entries);

    static exponent zero(int n);
    static exponent unit(int n, int pos);

    int size() const { return static_cast<int>(e_.size()); }
    std::int64_t at(int pos) const;
    void set(int pos, std::int64_t v);
    const std::vector<std::int64_t>& entries() const { return e_; }

    std::int64_t degree() const;
    index_set neg_support() const;

    exponent operator+(const exponent& o) const;
    exponent operator-(const exponent& o) const;

    auto operator<=>(const exponent&) const = default;

    std::string str() const; // "(1,-2,5)"

private:
    std::vector<std::int64_t> e_;
};

/// Finite sparse Laurent polynomial: map from exponents to nonzero
/// coefficients. Terms are held in lexicographic exponent order and zero
/// coefficients are pruned on every write.
class laurent_poly {
public:
    explicit laurent_poly(int n);
    static laurent_poly monomial(const exponent& k, gaussian_rational coeff = 1);

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<exponent, gaussian_rational>& terms() const { return terms_; }

    /// Coefficient of x^k (zero when absent).
    gaussian_rational coeff(const exponent& k) const;

    /// Adds c * x^k, pruning the term if the sum cancels.
    void add_term(const exponent& k, const gaussian_rational& c);

    laurent_poly& operator+=(const laurent_poly& o);
    laurent_poly& operator-=(const laurent_poly& o);
    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int n_ = 0;
    std::map<exponent, gaussian_rational> terms_;
};

laurent_poly scale(const gaussian_rational& c, const laurent_poly& f);

/// Translates every exponent of f by shift; coefficients are unchanged.
laurent_poly shift_iso(const laurent_poly& f, const exponent& shift);

/// The twist parameter in normalized form: 0 <= Re(alpha[l]) < 1 for every l,
/// with the zero set I_alpha = { l : alpha[l] = 0 } kept alongside.
class alpha_param {
public:
    /// Entries must already be normalized; throws std::invalid_argument
    /// otherwise. Use normalize() for raw input.
    static alpha_param from_normalized(std::vector<gaussian_rational> entries);

    /// Splits raw entries into a normalized alpha and an integer shift with
    /// raw[l] - alpha[l] = shift[l] for every l.
    static std::pair<alpha_param, exponent> normalize(const std::vector<gaussian_rational>& raw);

    static alpha_param zero(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    const gaussian_rational& at(int pos) const;
    const std::vector<gaussian_rational>& entries() const { return entries_; }

    /// I_alpha, 1-based.
    const index_set& zero_set() const { return zero_set_; }
    bool is_zero() const { return static_cast<int>(zero_set_.size()) == size(); }

    friend bool operator==(const alpha_param& a, const alpha_param& b) {
        return a.entries_ == b.entries_;
    }

    std::string str() const;

private:
    alpha_param() = default;
    std::vector<gaussian_rational> entries_;
    index_set zero_set_;
};

/// All k in Z^n with sum(k) = m and |k[i]| <= bound, in lexicographic order.
std::vector<exponent> degree_window(int n, std::int64_t m, std::int64_t bound);

/// Throws std::invalid_argument unless both sizes equal n.
void check_var_count(int n, int got, const char* what);

} // namespace lgl

#endif
