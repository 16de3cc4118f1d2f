#pragma once

#include "bkptau/poly.hpp"

#include <vector>

namespace bkptau {

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws std::invalid_argument if not weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned size() const;
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    Partition conjugate() const;

    static Partition staircase(unsigned k);
    /// (k, k, ..., k) with `copies` parts.
    static Partition rectangle(unsigned k, unsigned copies);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

/// Hook coordinates (arms | legs), Macdonald's convention alpha_i = lambda_i - i, beta_i = lambda'_i - i.
struct FrobeniusCoords {
    std::vector<unsigned> arms;
    std::vector<unsigned> legs;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

/// Throws std::invalid_argument unless arms and legs are strictly decreasing with equal length.
Partition from_frobenius(const FrobeniusCoords& f);
FrobeniusCoords to_frobenius(const Partition& p);

/// lambda_1 > ... > lambda_{2n} >= 0, padded with a zero to even length.
class ExtendedStrictPartition {
public:
    ExtendedStrictPartition() = default;
    /// Throws std::invalid_argument for repeated parts; appends 0 to odd-length input.
    explicit ExtendedStrictPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    std::size_t half_length() const { return parts_.size() / 2; }
    unsigned max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    unsigned size() const;
    /// The strict partition with the padding zero removed.
    Partition strict() const;

    friend bool operator==(const ExtendedStrictPartition&, const ExtendedStrictPartition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// Elementary Schur polynomial s_j(u): coefficient of z^j in exp(sum u_k z^k).
Poly elem_schur(int j, const TimeArgument& arg);

/// [s_0(u), ..., s_J(u)].
std::vector<Poly> elem_schur_table(unsigned max_j, const TimeArgument& arg);

/// Jacobi-Trudi determinant det(s_{lambda_i - i + j}) over the full times of `bank`.
Poly schur_lambda(const Partition& lambda, Bank bank = Bank::T);

/// Q_lambda in the t-coordinates t_k = 2 p_k / k: 2^n Pf(chibar_{lambda_i, lambda_j}(tbar, tbar)).
Poly q_schur(const ExtendedStrictPartition& lambda, Bank bank = Bank::T);

/// Compares 2 prod(1+q^k)^2, sum_j q^{j(j-1)/2} / prod(1-q^k) and 2 / prod(1-q^{2k-1})^2
/// through the coefficient of q^order.
bool character_check(int order);

/// The three truncated series of character_check (coefficients of q^0..q^order).
struct CharacterSeries {
    std::vector<mpz_class> fermionic;
    std::vector<mpz_class> charged;
    std::vector<mpz_class> neutral;
};
CharacterSeries character_series(unsigned order);

}  // namespace bkptau
