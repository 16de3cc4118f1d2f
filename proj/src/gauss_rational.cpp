#include "bkptau/gauss_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bkptau {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string GaussRat::to_string() const {
    if (is_real()) return rational_string(re_);
    std::string out = "(" + rational_string(re_);
    out += sgn(im_) < 0 ? "-" : "+";
    out += rational_string(abs(im_)) + "*i)";
    return out;
}

GaussRat parse_gauss_rational(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
    if (text.empty()) throw std::invalid_argument("empty coefficient");
    if (text.back() != 'i') return GaussRat(parse_rational(text));

    // Split "re(+|-)im*i" at the last sign that is not leading.
    std::string_view body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re(0);
    std::string_view im_part = body;
    if (split != std::string_view::npos) {
        re = parse_rational(body.substr(0, split));
        im_part = body.substr(split);
    }
    im_part = trim(im_part);
    Rational im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part);
    return {re, im};
}

}  // namespace bkptau
