#include "bkptau/schur.hpp"

#include "bkptau/pfaffian.hpp"
#include "bkptau/tau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bkptau {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<unsigned> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    parts_ = std::move(parts);
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

Partition Partition::conjugate() const {
    std::vector<unsigned> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (unsigned p : parts_)
        for (unsigned c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

Partition Partition::staircase(unsigned k) {
    std::vector<unsigned> parts;
    for (unsigned p = k; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

Partition Partition::rectangle(unsigned k, unsigned copies) {
    return Partition(std::vector<unsigned>(k == 0 ? 0 : copies, k));
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

FrobeniusCoords to_frobenius(const Partition& p) {
    FrobeniusCoords f;
    const Partition conj = p.conjugate();
    for (unsigned i = 1; i <= p.length() && p.part(i - 1) >= i; ++i) {
        f.arms.push_back(p.part(i - 1) - i);
        f.legs.push_back(conj.part(i - 1) - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
    if (f.arms.size() != f.legs.size()) throw std::invalid_argument("Frobenius arms and legs differ in length");
    auto strict = [](const std::vector<unsigned>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
    };
    if (!strict(f.arms) || !strict(f.legs))
        throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    const auto r = static_cast<unsigned>(f.arms.size());
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= r; ++i) parts.push_back(f.arms[i - 1] + i);
    // Below the Durfee square row i meets column j <= r iff i <= legs_j + j.
    for (unsigned i = r + 1;; ++i) {
        unsigned len = 0;
        for (unsigned j = 1; j <= r; ++j)
            if (f.legs[j - 1] + j >= i) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

ExtendedStrictPartition::ExtendedStrictPartition(std::vector<unsigned> parts) {
    if (std::adjacent_find(parts.begin(), parts.end(), std::less_equal<>()) != parts.end())
        throw std::invalid_argument("extended strict partition needs strictly decreasing parts");
    if (parts.size() % 2 != 0) {
        if (parts.back() == 0) throw std::invalid_argument("cannot pad a partition already ending in 0");
        parts.push_back(0);
    }
    parts_ = std::move(parts);
}

unsigned ExtendedStrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

Partition ExtendedStrictPartition::strict() const { return Partition(parts_); }

// ---------------------------------------------------------------- Schur functions

std::vector<Poly> elem_schur_table(unsigned max_j, const TimeArgument& arg) {
    std::vector<Poly> u(max_j + 1);
    for (unsigned k = 1; k <= max_j; ++k) u[k] = arg.component(k) * GaussRat(static_cast<long>(k));
    std::vector<Poly> s;
    s.reserve(max_j + 1);
    s.emplace_back(1);
    for (unsigned j = 1; j <= max_j; ++j) {
        Poly acc;
        for (unsigned k = 1; k <= j; ++k)
            if (!u[k].is_zero() && !s[j - k].is_zero()) acc += u[k] * s[j - k];
        acc *= GaussRat(Rational(1, j));
        s.push_back(std::move(acc));
    }
    return s;
}

Poly elem_schur(int j, const TimeArgument& arg) {
    if (j < 0) return {};
    return elem_schur_table(static_cast<unsigned>(j), arg)[static_cast<std::size_t>(j)];
}

Poly schur_lambda(const Partition& lambda, Bank bank) {
    const std::size_t len = lambda.length();
    if (len == 0) return Poly(1);
    const auto s = elem_schur_table(lambda.part(0) + static_cast<unsigned>(len) - 1, TimeArgument::identity(bank));
    RectMatrix<Poly> jt(len, len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long idx = static_cast<long>(lambda.part(i)) - static_cast<long>(i) + static_cast<long>(j);
            if (idx >= 0) jt(i, j) = s[static_cast<std::size_t>(idx)];
        }
    }
    return determinant(jt);
}

Poly q_schur(const ExtendedStrictPartition& lambda, Bank bank) {
    const auto& parts = lambda.parts();
    const TimeArgument tbar = TimeArgument::odd_times(bank);
    UpperTriMatrix<Poly> a(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) a.at(i, j) = chi_bar(parts[i], parts[j], tbar, tbar);
    Poly pf = pfaffian(a);
    pf *= GaussRat(Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(lambda.half_length())));
    return pf;
}

// ---------------------------------------------------------------- character series

namespace {

using Series = std::vector<mpz_class>;

void times_one_plus(Series& a, unsigned k) {  // a *= (1 + q^k)
    for (std::size_t n = a.size(); n-- > k;) a[n] += a[n - k];
}

void divide_one_minus(Series& a, unsigned k) {  // a /= (1 - q^k)
    for (std::size_t n = k; n < a.size(); ++n) a[n] += a[n - k];
}

}  // namespace

CharacterSeries character_series(unsigned order) {
    const std::size_t len = order + 1;
    CharacterSeries out;

    out.fermionic.assign(len, 0);
    out.fermionic[0] = 2;
    for (unsigned k = 1; k <= order; ++k) {
        times_one_plus(out.fermionic, k);
        times_one_plus(out.fermionic, k);
    }

    out.charged.assign(len, 0);
    // j and 1-j give the same exponent j(j-1)/2; enumerate j >= 1 and double.
    for (unsigned long j = 1;; ++j) {
        const unsigned long e = j * (j - 1) / 2;
        if (e > order) break;
        out.charged[e] += 2;
    }
    for (unsigned k = 1; k <= order; ++k) divide_one_minus(out.charged, k);

    out.neutral.assign(len, 0);
    out.neutral[0] = 2;
    for (unsigned k = 1; k <= order; k += 2) {
        divide_one_minus(out.neutral, k);
        divide_one_minus(out.neutral, k);
    }
    return out;
}

bool character_check(int order) {
    if (order < 0) throw std::invalid_argument("character_check order must be >= 0");
    const auto s = character_series(static_cast<unsigned>(order));
    return s.fermionic == s.charged && s.fermionic == s.neutral;
}

}  // namespace bkptau
