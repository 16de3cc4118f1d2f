#pragma once

#include "bkptau/pfaffian.hpp"
#include "bkptau/poly.hpp"
#include "bkptau/schur.hpp"

#include <stdexcept>
#include <vector>

namespace bkptau {

/// Raised when an assembled tau-function violates a structural property that
/// holds for the correct sign conventions (e.g. a non-real KP square).
class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (lambda, {c_i}) with every leading coefficient a_{i,-N_i} normalized to 1.
/// constants[i][k-1] is c_{i,k}; missing entries are zero.
struct TauSpec {
    ExtendedStrictPartition lambda;
    std::vector<std::vector<Rational>> constants;

    /// Zero constants for every part.
    static TauSpec plain(ExtendedStrictPartition lambda);
    /// Throws std::invalid_argument when the number of constant rows differs from the length of lambda.
    void validate() const;
    /// c_i as a rational sequence, padded with zeros to `len`.
    std::vector<Rational> constants_of(std::size_t i) const;
};

/// sum_{j>=0} a_{j-N} z^j with a_{-N} = 1 and finite support.
struct CoeffSeries {
    unsigned leading_index{0};  // N
    std::vector<Rational> coeffs;  // coeffs[j] = a_{j-N}
};

/// c_1..c_order with sum_j a_{j-N} z^j = exp(sum c_j z^j) mod z^{order+1}.
/// Throws std::invalid_argument unless a_{-N} = 1.
std::vector<Rational> series_to_constants(const CoeffSeries& s, unsigned order);
/// Inverse map, truncated at z^order.
CoeffSeries constants_to_series(const std::vector<Rational>& constants, unsigned leading_index, unsigned order);

namespace detail {

/// Readings of the chi formulas. Only the validated defaults are used outside
/// the convention tests.
enum class ChiBarPairing {
    FirstIndexWithFirstArgument,   // s_{N+k}(arg1) s_{M-k}(arg2); reproduces the Wick oracle
    FirstIndexWithSecondArgument,  // s_{N+k}(arg2) s_{M-k}(arg1); rejected by the Wick oracle
};
enum class ChiPmSigns {
    MOuterNInner,  // (-1)^M on the first sum, (-1)^N on the second; reproduces the Wick oracle
    NOuterMInner,  // (-1)^N first, (-1)^M second; same Pfaffian, different entries
    Alternating,   // (-1)^k inside both sums
};

Poly chi_bar(unsigned n, unsigned m, const TimeArgument& first, const TimeArgument& second, ChiBarPairing pairing);
Poly chi_pm(int sign, unsigned n, unsigned m, const TimeArgument& s, const TimeArgument& t, const TimeArgument& u,
            const TimeArgument& v, ChiPmSigns signs);
Poly tau_kp_square(const TauSpec& spec, ChiPmSigns signs);

}  // namespace detail

/// chibar_{N,M}(a,b) = 1/2 s_N(a) s_M(b) + sum_{k=1}^{M} (-1)^k s_{N+k}(a) s_{M-k}(b).
Poly chi_bar(unsigned n, unsigned m, const TimeArgument& first, const TimeArgument& second);

/// chi^{+-}_{N,M}(s,t,u,v) = 1/2 (-1)^M sum_{k=0}^{M} s_{N+k}(s) s_{M-k}(-t)
///                          +- 1/2 (-1)^N sum_{k=1}^{M} s_{N+k}(-u) s_{M-k}(v).
Poly chi_pm(int sign, unsigned n, unsigned m, const TimeArgument& s, const TimeArgument& t, const TimeArgument& u,
            const TimeArgument& v);

/// BKP tau-function Pf(chibar_{lambda_i lambda_j}(tbar + c_i, tbar + c_j)); odd times only.
Poly tau_bkp(const TauSpec& spec, Bank bank = Bank::T);

/// The 2n x 2n matrix of BKP two-point functions (upper triangle).
UpperTriMatrix<Poly> bkp_matrix(const TauSpec& spec, Bank bank = Bank::T);

/// Upper triangle of [[A+, -i A-], [i A-^T, A+]] in the word order v_1..v_2n, vhat_1..vhat_2n.
UpperTriMatrix<Poly> kp_square_matrix(const TauSpec& spec);

/// KP tau-function whose square root at even times zero is tau_bkp.
/// Throws ConventionError if the Pfaffian has an imaginary part.
Poly tau_kp_square(const TauSpec& spec);

/// Frobenius partition labelling the KP Schubert cell of tau_kp_square with zero constants:
/// (lambda_i - 1 | lambda_i) over the nonzero parts.
Partition kp_square_partition(const ExtendedStrictPartition& lambda);

/// s_{(k, k-1, ..., 1)}(t).
Poly kdv_tau(unsigned k);
/// kdv_tau with every time halved, then restricted to odd times.
Poly kdv_half(unsigned k);
/// (k, k-1, ..., 1), zero-padded to even length.
ExtendedStrictPartition staircase_strict(unsigned k);

}  // namespace bkptau
