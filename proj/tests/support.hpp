#pragma once

// Independent oracles and generators shared by the test binaries.

#include "bkptau/fock.hpp"
#include "bkptau/hierarchy.hpp"
#include "bkptau/pfaffian.hpp"
#include "bkptau/poly.hpp"
#include "bkptau/schur.hpp"
#include "bkptau/tau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace testing {

using bkptau::Bank;
using bkptau::GaussRat;
using bkptau::Poly;
using bkptau::Rational;

inline Poly t(unsigned k) { return Poly::var(Bank::T, k); }
inline Poly y(unsigned k) { return Poly::var(Bank::Y, k); }
inline Poly P(const char* text) { return bkptau::parse_poly(text); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational(int span = 5, int max_den = 4) {
        Rational r(integer(-span, span), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    /// Random polynomial in t1..t_vars (and y1..y_vars when two_banks) with a few terms.
    Poly poly(unsigned vars, unsigned terms, unsigned max_exp, bool two_banks = false) {
        Poly p;
        for (unsigned n = 0; n < terms; ++n) {
            Poly m(rational());
            for (unsigned k = 1; k <= vars; ++k) m *= t(k).pow(static_cast<unsigned>(integer(0, static_cast<int>(max_exp))));
            if (two_banks)
                for (unsigned k = 1; k <= vars; ++k) m *= y(k).pow(static_cast<unsigned>(integer(0, 1)));
            p += m;
        }
        return p;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// ---------------------------------------------------------------- matrices

inline bkptau::UpperTriMatrix<Rational> random_upper(Rng& rng, std::size_t n) {
    bkptau::UpperTriMatrix<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a.at(i, j) = rng.rational();
    return a;
}

/// Pfaffian as a signed sum over perfect matchings, the sign being (-1)^{crossings}.
inline Rational matching_pfaffian(const bkptau::UpperTriMatrix<Rational>& a) {
    const std::size_t n = a.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(n, false);
    Rational total = 0;
    std::function<void()> rec = [&] {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            int crossings = 0;
            for (const auto& [a1, b1] : pairs)
                for (const auto& [a2, b2] : pairs)
                    if (a1 < a2 && a2 < b1 && b1 < b2) ++crossings;
            Rational prod = 1;
            for (const auto& [i, j] : pairs) prod *= a.at(i, j);
            total += crossings % 2 == 0 ? prod : Rational(-prod);
            return;
        }
        const auto i = static_cast<std::size_t>(first - used.begin());
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            pairs.emplace_back(i, j);
            rec();
            pairs.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    rec();
    return total;
}

/// Determinant by Gaussian elimination over Q.
inline Rational gauss_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline std::vector<std::vector<Rational>> skew_extension(const bkptau::UpperTriMatrix<Rational>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = a.at(i, j);
            m[j][i] = -a.at(i, j);
        }
    return m;
}

// ---------------------------------------------------------------- symmetric functions in x-variables

/// x_i is represented by the variable t_i of bank Y so it cannot collide with the times.
inline Poly x(unsigned i) { return Poly::var(Bank::Y, i); }

/// Substitutes t_k -> scale/k * p_k(x_1..x_n) into a polynomial in the times.
inline Poly times_to_power_sums(const Poly& p, unsigned n, const Rational& scale) {
    return bkptau::compose(p, [&](bkptau::Var v) -> std::optional<Poly> {
        if (v.bank != Bank::T) return std::nullopt;
        Poly pk;
        for (unsigned i = 1; i <= n; ++i) pk += x(i).pow(v.index);
        return pk * GaussRat(scale / v.index);
    });
}

/// Schur polynomial in x_1..x_n as a sum over semistandard Young tableaux.
inline Poly tableau_schur(const bkptau::Partition& lambda, unsigned n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (std::size_t c = 0; c < lambda.parts()[r]; ++c) cells.emplace_back(r, c);
    std::map<std::pair<std::size_t, std::size_t>, unsigned> fill;
    Poly total;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Poly m(1);
            for (const auto& [cell, v] : fill) m *= x(v);
            total += m;
            return;
        }
        const auto [r, c] = cells[idx];
        for (unsigned v = 1; v <= n; ++v) {
            if (c > 0 && fill[{r, c - 1}] > v) continue;
            if (r > 0 && fill[{r - 1, c}] >= v) continue;
            fill[{r, c}] = v;
            rec(idx + 1);
        }
        fill.erase({r, c});
    };
    rec(0);
    return total;
}

/// Macdonald's Q_lambda in x_1..x_n as a sum over marked shifted tableaux (primes allowed on the diagonal).
/// Letters are encoded as 2k-1 for k' and 2k for k.
inline Poly tableau_q(const std::vector<unsigned>& strict, unsigned n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < strict.size(); ++r)
        for (std::size_t c = r; c < r + strict[r]; ++c) cells.emplace_back(r, c);
    std::set<std::pair<std::size_t, std::size_t>> shape(cells.begin(), cells.end());
    std::map<std::pair<std::size_t, std::size_t>, unsigned> fill;
    Poly total;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Poly m(1);
            for (const auto& [cell, v] : fill) m *= x((v + 1) / 2);
            total += m;
            return;
        }
        const auto [r, c] = cells[idx];
        for (unsigned v = 1; v <= 2 * n; ++v) {
            if (c > 0 && shape.count({r, c - 1})) {
                const unsigned left = fill[{r, c - 1}];
                if (left > v || (left == v && v % 2 == 1)) continue;
            }
            if (r > 0 && shape.count({r - 1, c})) {
                const unsigned up = fill[{r - 1, c}];
                if (up > v || (up == v && v % 2 == 0)) continue;
            }
            fill[{r, c}] = v;
            rec(idx + 1);
            fill.erase({r, c});
        }
    };
    rec(0);
    return total;
}

// ---------------------------------------------------------------- series oracles

/// tau(t + scale [w]) with w = y1 standing in for z^{-1}; returns the coefficients of w^a.
inline std::vector<Poly> taylor_shift(const Poly& tau, const Rational& scale, bool odd_only) {
    const Poly w = y(1);
    const Poly shifted = bkptau::compose(tau, [&](bkptau::Var v) -> std::optional<Poly> {
        if (v.bank != Bank::T) return std::nullopt;
        if (odd_only && v.index % 2 == 0) return std::nullopt;
        return t(v.index) + w.pow(v.index) * GaussRat(scale / v.index);
    });
    std::vector<Poly> out(tau.weighted_degree() + 1);
    for (const auto& [mono, coeff] : shifted.terms()) {
        const unsigned a = mono.exponent(bkptau::Var{Bank::Y, 1});
        std::vector<bkptau::Monomial::Factor> rest;
        for (const auto& f : mono.factors())
            if (f.first.bank == Bank::T) rest.push_back(f);
        out.at(a).add_term(bkptau::Monomial(rest), coeff);
    }
    return out;
}

/// Coefficients of z^0..z^J in exp(sum_k (t_k - y_k) z^k) by truncated power-series exponentiation.
inline std::vector<Poly> exp_series_difference(unsigned max_j, bool odd_only) {
    std::vector<Poly> result(max_j + 1);
    result[0] = Poly(1);
    // exp(a) = sum_n a^n / n! with a having no constant term, so n <= max_j suffices.
    std::vector<Poly> a(max_j + 1);
    for (unsigned k = 1; k <= max_j; ++k)
        if (!odd_only || k % 2 == 1) a[k] = t(k) - y(k);
    std::vector<Poly> power(max_j + 1);
    power[0] = Poly(1);
    Rational factorial = 1;
    for (unsigned n = 1; n <= max_j; ++n) {
        std::vector<Poly> next(max_j + 1);
        for (unsigned i = 0; i <= max_j; ++i)
            for (unsigned j = 1; i + j <= max_j; ++j)
                if (!power[i].is_zero() && !a[j].is_zero()) next[i + j] += power[i] * a[j];
        power = std::move(next);
        factorial *= n;
        for (unsigned i = 0; i <= max_j; ++i)
            if (!power[i].is_zero()) result[i] += power[i] * GaussRat(Rational(1) / factorial);
    }
    return result;
}

inline Poly to_y(const Poly& p) { return bkptau::rename_bank(p, Bank::T, Bank::Y); }

/// Residue of z^d tau_k(t - [z^-1]) tau_l(y + [z^-1]) exp(sum (t-y) z^k) from the independent series above.
inline Poly kp_residue_oracle(const Poly& tau_k, const Poly& tau_l, unsigned d) {
    const auto p = taylor_shift(tau_k, -1, false);
    auto q = taylor_shift(tau_l, 1, false);
    for (auto& qb : q) qb = to_y(qb);
    const auto s = exp_series_difference(static_cast<unsigned>(p.size() + q.size()), false);
    Poly out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b) {
            const long j = static_cast<long>(a + b) - static_cast<long>(d) - 1;
            if (j >= 0) out += s[static_cast<std::size_t>(j)] * p[a] * q[b];
        }
    return out;
}

inline Poly bkp_residue_oracle(const Poly& tau) {
    const auto p = taylor_shift(tau, -2, true);
    auto q = taylor_shift(tau, 2, true);
    for (auto& qb : q) qb = to_y(qb);
    const auto s = exp_series_difference(static_cast<unsigned>(p.size() + q.size()), true);
    Poly out;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b) out += s[a + b] * p[a] * q[b];
    return out - tau * to_y(tau);
}

// ---------------------------------------------------------------- fermionic Fock model

/// Semi-infinite wedge model: the vacuum fills every level below zero. psi+_j creates level -j,
/// psi-_j removes level j. A state is the finite set of levels (in units of 1/2, stored as twice)
/// inside a window, with every level below the window occupied.
class WedgeModel {
public:
    explicit WedgeModel(int window_twice) : low_(-window_twice) {}

    using State = std::set<int>;  // occupied levels, twice-encoded, >= low_
    using Vector = std::map<State, GaussRat>;

    Vector vacuum() const {
        State s;
        for (int l = -1; l >= low_; l -= 2) s.insert(l);
        return {{s, GaussRat(1)}};
    }

    /// Applies psi+_{twice/2} (plus=true) or psi-_{twice/2}.
    Vector apply(bool plus, int twice, const Vector& v) const {
        const int level = plus ? -twice : twice;
        if (level < low_) throw std::logic_error("wedge window too small");
        Vector out;
        for (const auto& [state, c] : v) {
            const bool occupied = state.count(level) > 0;
            if (occupied == plus) continue;
            int above = 0;
            for (int l : state)
                if (l > level) ++above;
            State next = state;
            if (plus)
                next.insert(level);
            else
                next.erase(level);
            GaussRat coeff = above % 2 == 0 ? c : -c;
            auto [it, inserted] = out.try_emplace(next, coeff);
            if (!inserted) it->second += coeff;
        }
        return out;
    }

    /// <0| modes |0> with modes applied right to left, all mode coefficients 1.
    GaussRat vev(const std::vector<std::pair<bool, int>>& modes) const {
        Vector v = vacuum();
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) v = apply(it->first, it->second, v);
        const auto vac = vacuum().begin()->first;
        auto found = v.find(vac);
        return found == v.end() ? GaussRat{} : found->second;
    }

private:
    int low_;
};

/// <0| m_1 ... m_r |0> for single modes through the wedge model; neutral modes are expanded
/// into psi modes: phi_i = (psi+_{i+1/2} + (-1)^i psi-_{i-1/2}) / sqrt2,
/// phihat_i = i (psi+_{i+1/2} - (-1)^i psi-_{i-1/2}) / sqrt2.
inline GaussRat wedge_vev(const std::vector<bkptau::fock::Mode>& word) {
    using bkptau::fock::Species;
    int window = 4;
    unsigned neutral = 0;
    for (const auto& m : word) {
        window = std::max(window, std::abs(m.index.twice()) + 4);
        if (!bkptau::fock::is_charged(m.species)) ++neutral;
    }
    if (neutral % 2 != 0) return {};
    WedgeModel model(window + 2 * static_cast<int>(word.size()));

    // Expand each mode into (coefficient, psi mode) alternatives and sum over all choices.
    std::vector<std::vector<std::pair<GaussRat, std::pair<bool, int>>>> options;
    for (const auto& m : word) {
        const int tw = m.index.twice();
        switch (m.species) {
            case Species::PsiPlus: options.push_back({{GaussRat(1), {true, tw}}}); break;
            case Species::PsiMinus: options.push_back({{GaussRat(1), {false, tw}}}); break;
            case Species::Phi: {
                const int sign = (tw / 2) % 2 == 0 ? 1 : -1;
                options.push_back({{GaussRat(1), {true, tw + 1}}, {GaussRat(sign), {false, tw - 1}}});
                break;
            }
            case Species::PhiHat: {
                const int sign = (tw / 2) % 2 == 0 ? 1 : -1;
                options.push_back({{GaussRat::i(), {true, tw + 1}}, {GaussRat::i() * GaussRat(-sign), {false, tw - 1}}});
                break;
            }
        }
    }
    GaussRat total;
    std::vector<std::pair<bool, int>> chosen(word.size());
    std::function<void(std::size_t, GaussRat)> rec = [&](std::size_t idx, GaussRat coeff) {
        if (idx == word.size()) {
            total += coeff * model.vev(chosen);
            return;
        }
        for (const auto& [c, mode] : options[idx]) {
            chosen[idx] = mode;
            rec(idx + 1, coeff * c);
        }
    };
    rec(0, GaussRat(1));
    // (1/sqrt2)^neutral with an even number of neutral modes.
    return total * GaussRat(Rational(1, 1U << (neutral / 2)));
}

// ---------------------------------------------------------------- acceptance suite

inline std::vector<bkptau::ExtendedStrictPartition> suite_partitions() {
    return {bkptau::ExtendedStrictPartition({1, 0}), bkptau::ExtendedStrictPartition({2, 0}),
            bkptau::ExtendedStrictPartition({3, 0}), bkptau::ExtendedStrictPartition({2, 1}),
            bkptau::ExtendedStrictPartition({3, 1}), bkptau::ExtendedStrictPartition({3, 2}),
            bkptau::ExtendedStrictPartition({3, 2, 1, 0})};
}

/// Every suite partition with zero constants and with one seeded set of random constants c_{i,1..3}.
inline std::vector<bkptau::TauSpec> suite_specs(std::uint64_t seed = 20240517) {
    Rng rng(seed);
    std::vector<bkptau::TauSpec> specs;
    for (const auto& lambda : suite_partitions()) {
        specs.push_back(bkptau::TauSpec::plain(lambda));
        bkptau::TauSpec random{lambda, {}};
        for (std::size_t i = 0; i < lambda.length(); ++i)
            random.constants.push_back({rng.rational(3, 3), rng.rational(3, 3), rng.rational(3, 3)});
        specs.push_back(std::move(random));
    }
    return specs;
}

}  // namespace testing
