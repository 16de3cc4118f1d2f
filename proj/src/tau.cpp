#include "bkptau/tau.hpp"

#include <algorithm>

namespace bkptau {

// ---------------------------------------------------------------- TauSpec / series

TauSpec TauSpec::plain(ExtendedStrictPartition lambda) {
    TauSpec spec{std::move(lambda), {}};
    spec.constants.assign(spec.lambda.length(), {});
    return spec;
}

void TauSpec::validate() const {
    if (constants.size() != lambda.length())
        throw std::invalid_argument("expected " + std::to_string(lambda.length()) + " constant rows, got " +
                                    std::to_string(constants.size()));
}

std::vector<Rational> TauSpec::constants_of(std::size_t i) const {
    return i < constants.size() ? constants[i] : std::vector<Rational>{};
}

std::vector<Rational> series_to_constants(const CoeffSeries& s, unsigned order) {
    if (s.coeffs.empty() || s.coeffs.front() != 1)
        throw std::invalid_argument("coefficient series must start with a_{-N} = 1");
    auto a = [&](unsigned n) -> Rational { return n < s.coeffs.size() ? s.coeffs[n] : Rational(0); };
    std::vector<Rational> c(order + 1, 0);  // c[0] unused
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = a(n) * n;
        for (unsigned k = 1; k < n; ++k) acc -= c[k] * k * a(n - k);
        c[n] = acc / n;
    }
    c.erase(c.begin());
    return c;
}

CoeffSeries constants_to_series(const std::vector<Rational>& constants, unsigned leading_index, unsigned order) {
    CoeffSeries s{leading_index, std::vector<Rational>(order + 1, 0)};
    s.coeffs[0] = 1;
    auto c = [&](unsigned k) -> Rational { return k - 1 < constants.size() ? constants[k - 1] : Rational(0); };
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (unsigned k = 1; k <= n; ++k) acc += c(k) * k * s.coeffs[n - k];
        s.coeffs[n] = acc / n;
    }
    return s;
}

// ---------------------------------------------------------------- chi building blocks

namespace {

const GaussRat kHalf{Rational(1, 2)};

const Poly& at(const std::vector<Poly>& table, unsigned idx) { return table.at(idx); }

int parity_sign(unsigned e) { return e % 2 == 0 ? 1 : -1; }

Poly chi_bar_from(unsigned n, unsigned m, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    // a pairs with the first index, b with the second.
    Poly out = at(a, n) * at(b, m) * kHalf;
    for (unsigned k = 1; k <= m; ++k) {
        Poly term = at(a, n + k) * at(b, m - k);
        if (k % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

/// Tables: s = s(s), neg_t = s(-t), neg_u = s(-u), v = s(v).
Poly chi_pm_from(int sign, unsigned n, unsigned m, const std::vector<Poly>& s, const std::vector<Poly>& neg_t,
                 const std::vector<Poly>& neg_u, const std::vector<Poly>& v, detail::ChiPmSigns signs) {
    using detail::ChiPmSigns;
    auto outer = [&](bool first_sum, unsigned k) -> int {
        switch (signs) {
            case ChiPmSigns::MOuterNInner: return parity_sign(first_sum ? m : n);
            case ChiPmSigns::NOuterMInner: return parity_sign(first_sum ? n : m);
            case ChiPmSigns::Alternating: return parity_sign(k);
        }
        return 1;
    };
    Poly first;
    for (unsigned k = 0; k <= m; ++k) {
        Poly term = at(s, n + k) * at(neg_t, m - k);
        first += outer(true, k) > 0 ? term : -term;
    }
    Poly second;
    for (unsigned k = 1; k <= m; ++k) {
        Poly term = at(neg_u, n + k) * at(v, m - k);
        second += outer(false, k) > 0 ? term : -term;
    }
    Poly out = sign > 0 ? first + second : first - second;
    return out * kHalf;
}

TimeArgument shifted(const TimeArgument& base, std::vector<Rational> shift) { return base.with_shift(std::move(shift)); }

/// c-tilde: odd components negated.
std::vector<Rational> tilde(std::vector<Rational> c) {
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = -c[k];  // c[k] holds c_{k+1}
    return c;
}

std::vector<Rational> negated(std::vector<Rational> c) {
    for (auto& x : c) x = -x;
    return c;
}

}  // namespace

Poly detail::chi_bar(unsigned n, unsigned m, const TimeArgument& first, const TimeArgument& second,
                     ChiBarPairing pairing) {
    const auto a = elem_schur_table(n + m, first);
    const auto b = elem_schur_table(n + m, second);
    return pairing == ChiBarPairing::FirstIndexWithFirstArgument ? chi_bar_from(n, m, a, b) : chi_bar_from(n, m, b, a);
}

Poly chi_bar(unsigned n, unsigned m, const TimeArgument& first, const TimeArgument& second) {
    return detail::chi_bar(n, m, first, second, detail::ChiBarPairing::FirstIndexWithFirstArgument);
}

Poly detail::chi_pm(int sign, unsigned n, unsigned m, const TimeArgument& s, const TimeArgument& t,
                    const TimeArgument& u, const TimeArgument& v, ChiPmSigns signs) {
    const unsigned top = n + m;
    return chi_pm_from(sign, n, m, elem_schur_table(top, s), elem_schur_table(top, t.negated()),
                       elem_schur_table(top, u.negated()), elem_schur_table(top, v), signs);
}

Poly chi_pm(int sign, unsigned n, unsigned m, const TimeArgument& s, const TimeArgument& t, const TimeArgument& u,
            const TimeArgument& v) {
    return detail::chi_pm(sign, n, m, s, t, u, v, detail::ChiPmSigns::MOuterNInner);
}

// ---------------------------------------------------------------- tau-functions

UpperTriMatrix<Poly> bkp_matrix(const TauSpec& spec, Bank bank) {
    spec.validate();
    const auto& parts = spec.lambda.parts();
    const unsigned top = 2 * spec.lambda.max_part();
    std::vector<std::vector<Poly>> tables;
    tables.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        tables.push_back(elem_schur_table(top, shifted(TimeArgument::odd_times(bank), spec.constants_of(i))));

    UpperTriMatrix<Poly> a(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            a.at(i, j) = chi_bar_from(parts[i], parts[j], tables[i], tables[j]);
    return a;
}

Poly tau_bkp(const TauSpec& spec, Bank bank) { return pfaffian(bkp_matrix(spec, bank)); }

namespace {

UpperTriMatrix<Poly> kp_square_matrix_with(const TauSpec& spec, detail::ChiPmSigns signs) {
    spec.validate();
    const auto& parts = spec.lambda.parts();
    const std::size_t len = parts.size();
    const unsigned top = 2 * spec.lambda.max_part();
    const TimeArgument t = TimeArgument::identity(Bank::T);

    // plus[i] = s(t + c_i); minus[i] = s(-(t - c~_i)).
    std::vector<std::vector<Poly>> plus, minus;
    for (std::size_t i = 0; i < len; ++i) {
        const auto c = spec.constants_of(i);
        plus.push_back(elem_schur_table(top, shifted(t, c)));
        minus.push_back(elem_schur_table(top, shifted(t, negated(tilde(c))).negated()));
    }
    auto entry = [&](int sign, std::size_t i, std::size_t j) {
        return chi_pm_from(sign, parts[i], parts[j], plus[i], minus[j], minus[i], plus[j], signs);
    };

    UpperTriMatrix<Poly> a(2 * len);
    const GaussRat minus_i = -GaussRat::i();
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            Poly ap = entry(+1, i, j);
            a.at(i, j) = ap;
            a.at(len + i, len + j) = std::move(ap);
        }
        for (std::size_t j = 0; j < len; ++j) a.at(i, len + j) = entry(-1, i, j) * minus_i;
    }
    return a;
}

}  // namespace

UpperTriMatrix<Poly> kp_square_matrix(const TauSpec& spec) {
    return kp_square_matrix_with(spec, detail::ChiPmSigns::MOuterNInner);
}

Poly detail::tau_kp_square(const TauSpec& spec, ChiPmSigns signs) {
    return pfaffian(kp_square_matrix_with(spec, signs));
}

Poly tau_kp_square(const TauSpec& spec) {
    Poly pf = pfaffian(kp_square_matrix(spec));
    if (!pf.is_real())
        throw ConventionError("KP square has a nonzero imaginary part: " + canonical_string(pf.imag_part()));
    return pf;
}

Partition kp_square_partition(const ExtendedStrictPartition& lambda) {
    FrobeniusCoords f;
    for (unsigned p : lambda.parts()) {
        if (p == 0) continue;
        f.arms.push_back(p - 1);
        f.legs.push_back(p);
    }
    return from_frobenius(f);
}

Poly kdv_tau(unsigned k) { return schur_lambda(Partition::staircase(k)); }

Poly kdv_half(unsigned k) {
    return restrict_even_zero(substitute(kdv_tau(k), TimeArgument::scaled(Rational(1, 2))));
}

ExtendedStrictPartition staircase_strict(unsigned k) { return ExtendedStrictPartition(Partition::staircase(k).parts()); }

}  // namespace bkptau
