#ifndef LGL_RATIONAL_HPP
#define LGL_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lgl {

/// Exact complex scalar with rational real and imaginary parts.
///
/// Both parts are arbitrary-precision rationals kept in canonical form
/// (reduced, denominator > 0), so structural equality coincides with numeric
/// equality. Inversion is defined iff re^2 + im^2 != 0.
class gaussian_rational {
public:
    gaussian_rational() : re_(0), im_(0) {}
    gaussian_rational(long v) : re_(v), im_(0) {} // NOLINT: integer literals convert
    gaussian_rational(mpq_class re, mpq_class im);

    static gaussian_rational from_rational(mpq_class re);
    static gaussian_rational i();

    /// Parses a literal such as "0", "-3", "1/2", "i", "-i", "3i", "1/2+1/3i".
    /// Throws std::invalid_argument on malformed input or a zero denominator.
    static gaussian_rational parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    /// Multiplicative inverse. Throws std::domain_error when *this is zero.
    gaussian_rational inverse() const;

    gaussian_rational operator-() const;
    gaussian_rational& operator+=(const gaussian_rational& o);
    gaussian_rational& operator-=(const gaussian_rational& o);
    gaussian_rational& operator*=(const gaussian_rational& o);
    gaussian_rational& operator/=(const gaussian_rational& o);

    friend gaussian_rational operator+(gaussian_rational a, const gaussian_rational& b) { return a += b; }
    friend gaussian_rational operator-(gaussian_rational a, const gaussian_rational& b) { return a -= b; }
    friend gaussian_rational operator*(gaussian_rational a, const gaussian_rational& b) { return a *= b; }
    friend gaussian_rational operator/(gaussian_rational a, const gaussian_rational& b) { return a /= b; }

    friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const gaussian_rational& a, const gaussian_rational& b) { return !(a == b); }

    /// Canonical literal, accepted back by parse().
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

/// Lexicographic comparison on (re, im); a storage order for containers, not
/// a field order.
int compare(const gaussian_rational& a, const gaussian_rational& b);

inline bool operator<(const gaussian_rational& a, const gaussian_rational& b) {
    return compare(a, b) < 0;
}

std::ostream& operator<<(std::ostream& os, const gaussian_rational& v);

} // namespace lgl

#endif
