#pragma once

// Brute-force vacuum expectation values of free-fermion words. Everything is
// reduced to finite Pfaffians of two-point functions; Hamiltonian conjugation
// is truncated at a mode index beyond which no contraction partner exists.

#include "bkptau/poly.hpp"
#include "bkptau/tau.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bkptau::fock {

enum class Species : std::uint8_t { Phi, PhiHat, PsiPlus, PsiMinus };

bool is_charged(Species s);

/// Integer or half-integer stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Value for integer labels.
    int value() const;

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(int k) const { return HalfInt(twice_ + 2 * k); }

    std::string to_string() const;

    friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_{0};
};

/// Parses "3", "-2", "1/2", "-5/2".
HalfInt parse_half_int(std::string_view text);

/// phi_i, phihat_i (integer i) or psi^+-_j (j in Z + 1/2).
struct Mode {
    Species species{Species::Phi};
    HalfInt index;

    static Mode phi(int i) { return {Species::Phi, HalfInt::integer(i)}; }
    static Mode phi_hat(int i) { return {Species::PhiHat, HalfInt::integer(i)}; }
    /// psi^+_{twice/2}; twice must be odd.
    static Mode psi_plus(int twice);
    static Mode psi_minus(int twice);

    std::string to_string() const;

    friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Parses "phi:2", "phihat:-1", "psi+:1/2", "psi-:-3/2".
Mode parse_mode(std::string_view token);

/// Finite linear combination of modes with polynomial coefficients.
class ModeSum {
public:
    ModeSum() = default;
    ModeSum(const Mode& m) { add(m, Poly(1)); }  // NOLINT(google-explicit-constructor)

    void add(const Mode& m, const Poly& coeff);
    ModeSum& operator+=(const ModeSum& o);
    ModeSum& operator*=(const Poly& c);

    const std::map<Mode, Poly>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Smallest mode index present (0 for the empty sum).
    HalfInt min_index() const;
    /// +1 / -1 for sums of psi^+ / psi^- modes, 0 for neutral sums. Throws std::invalid_argument if mixed.
    int charge() const;

private:
    std::map<Mode, Poly> terms_;
};

using FermionWord = std::vector<ModeSum>;

/// Parses a space-separated list of modes into a word of single-mode factors.
FermionWord parse_word(std::string_view text);

/// <0| m1 m2 |0>. Throws std::domain_error for a neutral/charged pair (not representable over Q(i)).
GaussRat two_point(const Mode& m1, const Mode& m2);

/// Anticommutator {m1, m2} as a scalar; throws std::domain_error for neutral/charged pairs.
GaussRat anticommutator(const Mode& m1, const Mode& m2);

/// <0| x1 ... x_{2r} |0> as the Pfaffian of pairwise contractions; 0 for odd words, 1 for the empty word.
Poly wick_vev(const FermionWord& word);

enum class Flavor : std::uint8_t {
    Charged,  // H(s) = sum s_k alpha_k
    BarOdd,   // Hbar(s) = sum_odd s_k beta_k / 2
    HatOdd,   // Hhat(s) = sum_odd s_k betahat_k / 2
};

struct Hamiltonian {
    Flavor flavor{Flavor::Charged};
    Bank bank{Bank::T};
    bool odd_only{false};  // Charged flavor restricted to odd times; BarOdd/HatOdd are always odd
};

/// e^{H(s)} m e^{-H(s)} = sum_j coeff_j(s) * mode_{index+j} with s the symbolic times of the
/// Hamiltonian's bank, keeping the shifts 0 <= j <= bound. phihat under BarOdd and phi under HatOdd
/// are left unchanged; psi modes under BarOdd/HatOdd throw std::invalid_argument.
ModeSum conjugate_by_H(const Mode& m, const Hamiltonian& h, unsigned bound);

/// Same conjugation applied termwise to a mode sum, keeping only output modes of index <= max_index.
ModeSum conjugate_up_to(const ModeSum& x, const Hamiltonian& h, int max_index);

/// v = phi_{-lambda} + sum_{j > -lambda} s_{j+lambda}(c) phi_j, truncated at j <= bound (phihat when hatted).
/// Throws std::invalid_argument when bound < lambda_part.
ModeSum build_v(unsigned lambda_part, const std::vector<Rational>& c, bool hatted, int bound);

/// Largest mode index that can still contract with some factor of the word.
int exact_bound(const FermionWord& word);

/// <0| e^{H_1} ... e^{H_r} w |0>, evaluated as the VEV of the conjugated factors.
/// Throws std::invalid_argument when the charged species are unbalanced.
Poly oracle_tau(const FermionWord& word, const std::vector<Hamiltonian>& hamiltonians);

// Words whose VEVs reproduce the tau-function constructors.

/// v_1 ... v_2n.
FermionWord bkp_word(const TauSpec& spec);
/// v_1 ... v_2n vhat_1 ... vhat_2n.
FermionWord kp_square_word(const TauSpec& spec);
/// psi^+_{-k+1/2} psi^+_{-k+5/2} ... psi^+_{k-1/2} followed by the string for |-k>.
FermionWord kdv_word(unsigned k);

Poly oracle_tau_bkp(const TauSpec& spec);
Poly oracle_tau_kp_square(const TauSpec& spec);
/// Word of kp_square_word under Hbar(tbar) on bank T and Hhat(that) on bank Y.
Poly oracle_two_bank(const TauSpec& spec);
/// KdV word under the charged Hamiltonian in odd times.
Poly oracle_kdv(unsigned k);

}  // namespace bkptau::fock
