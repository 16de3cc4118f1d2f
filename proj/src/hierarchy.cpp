#include "bkptau/hierarchy.hpp"

#include "bkptau/schur.hpp"

#include <stdexcept>

namespace bkptau {

MiwaExpansion miwa_expand(const Poly& tau, const Rational& scale, Parity parity, Bank bank) {
    if (parity == Parity::Odd && !tau.odd_only())
        throw std::invalid_argument("odd Miwa shift needs a polynomial in odd times only");
    MiwaExpansion e{apply_schur_diff_table(tau, tau.weighted_degree(), scale, parity, bank), scale, parity};
    return e;
}

DefectReport make_report(Poly defect) {
    DefectReport r;
    r.is_zero = defect.is_zero();
    if (!r.is_zero) r.witness = defect.terms().begin()->first;
    r.defect = std::move(defect);
    return r;
}

namespace {

void require_single_bank(const Poly& p) {
    if (p.uses_bank(Bank::Y)) throw std::invalid_argument("tau-functions are expected in the t-bank");
}

/// Coefficients of z^n, n in [low, high], of (sum_i s_i z^i) * (sum_a p_a z^{-a}).
std::vector<Poly> laurent_product(const std::vector<Poly>& schur, const std::vector<Poly>& miwa, int low, int high) {
    std::vector<Poly> out;
    for (int n = low; n <= high; ++n) {
        Poly acc;
        for (std::size_t a = 0; a < miwa.size(); ++a) {
            const int i = n + static_cast<int>(a);
            if (i < 0 || miwa[a].is_zero()) continue;
            acc += schur.at(static_cast<std::size_t>(i)) * miwa[a];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Poly> to_bank_y(std::vector<Poly> ps) {
    for (auto& p : ps) p = rename_bank(p, Bank::T, Bank::Y);
    return ps;
}

/// s_j(w) with w_k = t_k - y_k over the parity class.
std::vector<Poly> difference_schur_table(unsigned max_j, Parity parity) {
    std::vector<Poly> s{Poly(1)};
    for (unsigned j = 1; j <= max_j; ++j) {
        Poly acc;
        for (unsigned k = 1; k <= j; ++k) {
            if (parity == Parity::Odd && k % 2 == 0) continue;
            Poly w = (Poly::var(Bank::T, k) - Poly::var(Bank::Y, k)) * GaussRat(static_cast<long>(k));
            acc += w * s[j - k];
        }
        acc *= GaussRat(Rational(1, j));
        s.push_back(std::move(acc));
    }
    return s;
}

}  // namespace

DefectReport kp_defect(const Poly& tau_k, const Poly& tau_l, unsigned d) {
    require_single_bank(tau_k);
    require_single_bank(tau_l);
    if (tau_k.is_zero() || tau_l.is_zero()) return make_report(Poly{});
    const int deg_k = static_cast<int>(tau_k.weighted_degree());
    const int deg_l = static_cast<int>(tau_l.weighted_degree());
    const int high = deg_l - 1 - static_cast<int>(d);
    if (high < -deg_k) return make_report(Poly{});

    // A(t,z) = tau_k(t - [z^-1]) e^{xi(t,z)}, B(y,z) = tau_l(y + [z^-1]) e^{-xi(y,z)};
    // the defect is the z^{-1-d} coefficient of A * B, a finite sum of A_n(t) B_m(y).
    const auto p = miwa_expand(tau_k, -1, Parity::All).terms;
    const auto q = to_bank_y(miwa_expand(tau_l, 1, Parity::All).terms);
    const auto top = static_cast<unsigned>(deg_k + deg_l);
    const auto st = elem_schur_table(top, TimeArgument::identity(Bank::T));
    const auto sy = elem_schur_table(top, TimeArgument::identity(Bank::Y).negated());

    const auto a = laurent_product(st, p, -deg_k, high);
    const int m_low = -1 - static_cast<int>(d) - high;
    const auto b = laurent_product(sy, q, m_low, deg_k - 1 - static_cast<int>(d));  // b[idx] is B_{m_low + idx}

    Poly defect;
    for (int n = -deg_k; n <= high; ++n) {
        const int m = -1 - static_cast<int>(d) - n;
        const Poly& an = a[static_cast<std::size_t>(n + deg_k)];
        const Poly& bm = b[static_cast<std::size_t>(m - m_low)];
        if (!an.is_zero() && !bm.is_zero()) defect += an * bm;
    }
    return make_report(std::move(defect));
}

DefectReport bkp_defect(const Poly& tau) {
    require_single_bank(tau);
    if (!tau.odd_only()) throw std::invalid_argument("BKP tau-functions depend on odd times only");
    if (tau.is_zero()) return make_report(Poly{});
    const int deg = static_cast<int>(tau.weighted_degree());

    const auto p = miwa_expand(tau, -2, Parity::Odd).terms;
    const auto q = to_bank_y(miwa_expand(tau, 2, Parity::Odd).terms);
    const auto top = static_cast<unsigned>(2 * deg);
    const auto st = elem_schur_table(top, TimeArgument::odd_times(Bank::T));
    const auto sy = elem_schur_table(top, TimeArgument::odd_times(Bank::Y).negated());

    const auto a = laurent_product(st, p, -deg, deg);
    const auto b = laurent_product(sy, q, -deg, deg);
    Poly defect;
    for (int n = -deg; n <= deg; ++n) {
        const Poly& an = a[static_cast<std::size_t>(n + deg)];
        const Poly& bm = b[static_cast<std::size_t>(-n + deg)];
        if (!an.is_zero() && !bm.is_zero()) defect += an * bm;
    }
    defect -= tau * rename_bank(tau, Bank::T, Bank::Y);
    return make_report(std::move(defect));
}

Poly detail::kp_defect_direct(const Poly& tau_k, const Poly& tau_l, unsigned d) {
    const auto p = miwa_expand(tau_k, -1, Parity::All).terms;
    const auto q = to_bank_y(miwa_expand(tau_l, 1, Parity::All).terms);
    const auto s = difference_schur_table(static_cast<unsigned>(p.size() + q.size()), Parity::All);
    Poly defect;
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
            const long j = static_cast<long>(a + b) - static_cast<long>(d) - 1;
            if (j < 0) continue;
            defect += s[static_cast<std::size_t>(j)] * p[a] * q[b];
        }
    }
    return defect;
}

Poly detail::bkp_defect_direct(const Poly& tau) {
    const auto p = miwa_expand(tau, -2, Parity::Odd).terms;
    const auto q = to_bank_y(miwa_expand(tau, 2, Parity::Odd).terms);
    const auto s = difference_schur_table(static_cast<unsigned>(p.size() + q.size()), Parity::Odd);
    Poly defect;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b) defect += s[a + b] * p[a] * q[b];
    return defect - tau * rename_bank(tau, Bank::T, Bank::Y);
}

}  // namespace bkptau
