#include "lgl/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lgl {

namespace {

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

// "a" or "a/b" with optional sign; empty means 1 (the magnitude of a bare "i").
mpq_class parse_rational_part(std::string_view text) {
    if (text.empty()) return mpq_class(1);
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    mpq_class q;
    try {
        q = mpq_class(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

} // namespace

gaussian_rational::gaussian_rational(mpq_class re, mpq_class im)
    : re_(canonical(std::move(re))), im_(canonical(std::move(im))) {}

gaussian_rational gaussian_rational::from_rational(mpq_class re) {
    return gaussian_rational(std::move(re), mpq_class(0));
}

gaussian_rational gaussian_rational::i() { return gaussian_rational(mpq_class(0), mpq_class(1)); }

gaussian_rational gaussian_rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    // Split into signed terms; '+'/'-' inside a term can only be its leading sign.
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t pos = 1; pos < s.size(); ++pos) {
        if (s[pos] == '+' || s[pos] == '-') {
            terms.push_back(s.substr(start, pos - start));
            start = pos;
        }
    }
    terms.push_back(s.substr(start));

    mpq_class re(0), im(0);
    for (std::string term : terms) {
        bool negative = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw std::invalid_argument("dangling sign in '" + std::string(text) + "'");
        bool imaginary = term.back() == 'i';
        if (imaginary) term.pop_back();
        mpq_class mag = parse_rational_part(term);
        if (negative) mag = -mag;
        (imaginary ? im : re) += mag;
    }
    return gaussian_rational(std::move(re), std::move(im));
}

gaussian_rational gaussian_rational::inverse() const {
    if (is_zero()) throw std::domain_error("gaussian_rational: division by zero");
    mpq_class norm = re_ * re_ + im_ * im_; // already canonical: products/sums of canonical mpq
    return gaussian_rational(re_ / norm, -im_ / norm);
}

gaussian_rational gaussian_rational::operator-() const { return gaussian_rational(-re_, -im_); }

gaussian_rational& gaussian_rational::operator+=(const gaussian_rational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

gaussian_rational& gaussian_rational::operator-=(const gaussian_rational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

gaussian_rational& gaussian_rational::operator*=(const gaussian_rational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

gaussian_rational& gaussian_rational::operator/=(const gaussian_rational& o) {
    return *this *= o.inverse();
}

std::string gaussian_rational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = rational_str(re_);
    if (sgn(im_) != 0) {
        if (!out.empty() && sgn(im_) > 0) out += '+';
        if (im_ == -1)
            out += '-';
        else if (im_ != 1)
            out += rational_str(im_);
        out += 'i';
    }
    return out;
}

int compare(const gaussian_rational& a, const gaussian_rational& b) {
    int c = cmp(a.re(), b.re());
    if (c != 0) return c;
    return cmp(a.im(), b.im());
}

std::ostream& operator<<(std::ostream& os, const gaussian_rational& v) { return os << v.str(); }

} // namespace lgl
