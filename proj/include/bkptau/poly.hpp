#pragma once

#include "bkptau/gauss_rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bkptau {

/// Two banks of time variables so that both sides of a bilinear identity share one ring.
enum class Bank : std::uint8_t { T = 0, Y = 1 };

char bank_letter(Bank b);

struct Var {
    Bank bank{Bank::T};
    unsigned index{1};  // >= 1, also the weight

    unsigned weight() const { return index; }
    bool odd() const { return index % 2 == 1; }

    friend auto operator<=>(const Var&, const Var&) = default;
};

/// Product of variables with positive exponents, kept sorted by (bank, index).
class Monomial {
public:
    using Factor = std::pair<Var, unsigned>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial of(Var v, unsigned exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    unsigned weighted_degree() const { return weight_; }
    bool is_one() const { return factors_.empty(); }
    unsigned exponent(Var v) const;

    bool odd_only() const;
    bool uses_bank(Bank b) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Canonical term order: weighted degree descending, then exponent-vector
    /// lex descending with variables ordered t1 < t2 < ... < y1 < y2 < ...
    static bool canonical_less(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// "t1^2*y3"; "1" for the empty monomial.
    std::string to_string() const;

private:
    std::vector<Factor> factors_;
    unsigned weight_{0};
};

struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::canonical_less(a, b); }
};

/// Sparse polynomial over Q(i) in the weighted time variables; never stores zero coefficients.
class Poly {
public:
    using Terms = std::map<Monomial, GaussRat, CanonicalOrder>;

    Poly() = default;
    Poly(long c) : Poly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c) : Poly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const GaussRat& c);  // NOLINT(google-explicit-constructor)
    static Poly var(Var v) { return term(GaussRat(1), Monomial::of(v)); }
    static Poly var(Bank b, unsigned index) { return var(Var{b, index}); }
    static Poly term(GaussRat c, Monomial m);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the given monomial (zero if absent).
    GaussRat coefficient(const Monomial& m) const;
    GaussRat constant_term() const { return coefficient(Monomial{}); }

    /// Maximal weighted degree; 0 for constants and for the zero polynomial.
    unsigned weighted_degree() const;
    bool odd_only() const;
    bool is_real() const;
    bool uses_bank(Bank b) const;
    /// Largest variable index occurring in the given bank (0 when absent).
    unsigned max_index(Bank b) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const GaussRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= GaussRat(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;

    /// Partial derivative with respect to v.
    Poly derivative(Var v) const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const GaussRat& c);

    Poly real_part() const;
    Poly imag_part() const;

private:
    Terms terms_;
};

/// Deterministic text form, e.g. "1/3*t1^3 - 1*t3" or "(1/2+1/2*i)*t1"; "0" for zero.
std::string canonical_string(const Poly& p);

/// Inverse of canonical_string; also accepts hand-written input like "t1^2 - 2*t3 + 1/2".
Poly parse_poly(std::string_view text);

/// Replaces every variable v by image(v); variables mapped to std::nullopt are kept.
template <typename Fn>
Poly compose(const Poly& p, Fn&& image);

/// Moves every variable of bank `from` into bank `to`.
Poly rename_bank(const Poly& p, Bank from, Bank to);
/// Exchanges banks T and Y.
Poly swap_banks(const Poly& p);

enum class Parity : std::uint8_t { All, Odd };

/// Affine time argument u_k = rho_{parity(k)} * x_k + shift_k, x being the
/// variables of `bank` (absent when bank is empty, giving pure constants).
struct TimeArgument {
    Rational rho_odd{1};
    Rational rho_even{1};
    std::vector<Rational> shift;  // shift[k-1] is shift_k; missing entries are 0
    std::optional<Bank> bank{Bank::T};

    static TimeArgument identity(Bank b = Bank::T) { return TimeArgument{}.with_bank(b); }
    /// t-bar: odd slots pass through, even slots are zeroed.
    static TimeArgument odd_times(Bank b = Bank::T);
    static TimeArgument constants(std::vector<Rational> values);
    static TimeArgument scaled(Rational rho, Bank b = Bank::T);

    TimeArgument with_bank(std::optional<Bank> b) const;
    TimeArgument with_shift(std::vector<Rational> values) const;
    /// The argument -u.
    TimeArgument negated() const;

    const Rational& rho(unsigned k) const { return k % 2 == 1 ? rho_odd : rho_even; }
    Rational shift_at(unsigned k) const;
    /// u_k as a polynomial.
    Poly component(unsigned k) const;
    /// True when u_k vanishes identically for every k >= first.
    bool vanishes_from(unsigned first) const;
};

/// Applies t_k -> rho t_k + shift_k to the T-bank variables of p; the images
/// live in arg.bank (or are constants when arg.bank is empty).
Poly substitute(const Poly& p, const TimeArgument& arg);

/// Deletes every monomial that contains an even-index variable.
Poly restrict_even_zero(const Poly& p);

/// s_j(u) p with u_k = scale * (d/dx_k) / k for k in the parity class, x the
/// variables of `bank`.
Poly apply_schur_diff(const Poly& p, unsigned j, const Rational& scale, Parity parity, Bank bank = Bank::T);

/// The table [s_0(u) p, s_1(u) p, ..., s_J(u) p] for the same operator argument.
std::vector<Poly> apply_schur_diff_table(const Poly& p, unsigned max_j, const Rational& scale, Parity parity,
                                         Bank bank = Bank::T);

// --- template implementation ---

template <typename Fn>
Poly compose(const Poly& p, Fn&& image) {
    Poly out;
    for (const auto& [mono, coeff] : p.terms()) {
        Poly term(coeff);
        Monomial kept;
        for (const auto& [v, e] : mono.factors()) {
            std::optional<Poly> img = image(v);
            if (img)
                term *= img->pow(e);
            else
                kept = kept * Monomial::of(v, e);
        }
        if (!kept.is_one()) term *= Poly::term(GaussRat(1), kept);
        out += term;
    }
    return out;
}

}  // namespace bkptau
