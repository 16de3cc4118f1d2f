#pragma once

#include "bkptau/poly.hpp"

#include <optional>
#include <vector>

namespace bkptau {

/// tau(t + scale [z^{-1}]) = sum_a terms[a] z^{-a}, with [z] = (z, z^2/2, ...) or its odd part.
struct MiwaExpansion {
    std::vector<Poly> terms;
    Rational scale;
    Parity parity{Parity::All};
};

/// Throws std::invalid_argument for Parity::Odd when tau depends on an even time.
MiwaExpansion miwa_expand(const Poly& tau, const Rational& scale, Parity parity, Bank bank = Bank::T);

struct DefectReport {
    Poly defect;
    bool is_zero{true};
    std::optional<Monomial> witness;  // leading monomial of a nonzero defect
};

DefectReport make_report(Poly defect);

/// Residue of z^d tau_k(t - [z^-1]) tau_l(y + [z^-1]) exp(sum (t_i - y_i) z^i); zero for KP (d = 0)
/// and modified KP (d > 0) pairs. Inputs are polynomials in bank T; y is bank Y of the defect.
DefectReport kp_defect(const Poly& tau_k, const Poly& tau_l, unsigned d);

/// Residue of tau(t - 2[z^-1]_odd) tau(y + 2[z^-1]_odd) exp(sum_odd (t_i - y_i) z^i) dz/z minus tau(t) tau(y).
/// Throws std::invalid_argument when tau depends on an even time.
DefectReport bkp_defect(const Poly& tau);

namespace detail {

/// The same residues summed term by term over s_j(t - y) p_a(t) q_b(y); used to cross-check the
/// factorized evaluation.
Poly kp_defect_direct(const Poly& tau_k, const Poly& tau_l, unsigned d);
Poly bkp_defect_direct(const Poly& tau);

}  // namespace detail

}  // namespace bkptau
