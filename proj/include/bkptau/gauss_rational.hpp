#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace bkptau {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" for integers.
std::string rational_string(const Rational& r);

/// Exact element of Q(i): re + im*i, both parts kept in lowest terms by GMP.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "a/b" when real, otherwise "(a/b+c/d*i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Parses the forms produced by GaussRat::to_string plus a bare "i" suffix ("3/2*i").
GaussRat parse_gauss_rational(std::string_view text);

}  // namespace bkptau
