#include "bkptau/fock.hpp"

#include "bkptau/pfaffian.hpp"
#include "bkptau/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bkptau::fock {

bool is_charged(Species s) { return s == Species::PsiPlus || s == Species::PsiMinus; }

// ---------------------------------------------------------------- labels

int HalfInt::value() const {
    if (!is_integer()) throw std::logic_error("half-integer label used as an integer");
    return twice_ / 2;
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt parse_half_int(std::string_view text) {
    const Rational r = parse_rational(text);
    const mpz_class twice = r.get_num() * 2 / r.get_den();
    if (Rational(twice) / 2 != r) throw std::invalid_argument("mode label must be an integer or half-integer");
    return HalfInt::from_twice(static_cast<int>(twice.get_si()));
}

Mode Mode::psi_plus(int twice) {
    if (twice % 2 == 0) throw std::invalid_argument("charged modes carry half-integer labels");
    return {Species::PsiPlus, HalfInt::from_twice(twice)};
}

Mode Mode::psi_minus(int twice) {
    if (twice % 2 == 0) throw std::invalid_argument("charged modes carry half-integer labels");
    return {Species::PsiMinus, HalfInt::from_twice(twice)};
}

std::string Mode::to_string() const {
    static constexpr const char* names[] = {"phi", "phihat", "psi+", "psi-"};
    return std::string(names[static_cast<int>(species)]) + ":" + index.to_string();
}

Mode parse_mode(std::string_view token) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("mode token needs 'species:index'");
    const std::string_view name = token.substr(0, colon);
    const HalfInt index = parse_half_int(token.substr(colon + 1));
    Species species;
    if (name == "phi")
        species = Species::Phi;
    else if (name == "phihat")
        species = Species::PhiHat;
    else if (name == "psi+")
        species = Species::PsiPlus;
    else if (name == "psi-")
        species = Species::PsiMinus;
    else
        throw std::invalid_argument("unknown species '" + std::string(name) + "'");
    if (is_charged(species) == index.is_integer())
        throw std::invalid_argument("neutral modes take integer labels, charged modes half-integer labels");
    return {species, index};
}

// ---------------------------------------------------------------- ModeSum

void ModeSum::add(const Mode& m, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModeSum& ModeSum::operator+=(const ModeSum& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ModeSum& ModeSum::operator*=(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

HalfInt ModeSum::min_index() const {
    HalfInt best;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.index < best) best = m.index;
        first = false;
    }
    return best;
}

int ModeSum::charge() const {
    int q = 0;
    bool seen = false;
    for (const auto& [m, c] : terms_) {
        const int mq = m.species == Species::PsiPlus ? 1 : m.species == Species::PsiMinus ? -1 : 0;
        if (seen && mq != q) throw std::invalid_argument("mode sum mixes charges");
        q = mq;
        seen = true;
    }
    return q;
}

FermionWord parse_word(std::string_view text) {
    FermionWord word;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) word.emplace_back(parse_mode(token));
    return word;
}

// ---------------------------------------------------------------- contractions

namespace {

int sign_of_power(int e) { return e % 2 == 0 ? 1 : -1; }

void require_same_sector(const Mode& a, const Mode& b) {
    if (is_charged(a.species) != is_charged(b.species))
        throw std::domain_error("neutral/charged pair " + a.to_string() + " " + b.to_string() +
                                " has an irrational two-point function");
}

}  // namespace

GaussRat two_point(const Mode& m1, const Mode& m2) {
    require_same_sector(m1, m2);
    if (is_charged(m1.species)) {
        // Only <psi^{+-}_j psi^{-+}_{-j}> with j > 0 survives.
        if (m1.species != m2.species && m1.index.twice() > 0 && m2.index == -m1.index) return GaussRat(1);
        return {};
    }
    const int i = m1.index.value();
    const int j = m2.index.value();
    if (m1.species == m2.species) {
        if (i > 0 && j == -i) return GaussRat(sign_of_power(i));
        if (i == 0 && j == 0) return GaussRat(Rational(1, 2));
        return {};
    }
    if (i == 0 && j == 0) {
        const GaussRat half_i(Rational(0), Rational(1, 2));
        return m1.species == Species::PhiHat ? half_i : -half_i;
    }
    return {};
}

GaussRat anticommutator(const Mode& m1, const Mode& m2) {
    require_same_sector(m1, m2);
    if (m2.index != -m1.index) return {};
    if (is_charged(m1.species)) return m1.species != m2.species ? GaussRat(1) : GaussRat{};
    if (m1.species != m2.species) return {};
    return GaussRat(sign_of_power(m1.index.value()));
}

namespace {

Poly contract(const ModeSum& x, const ModeSum& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            const GaussRat v = two_point(mx, my);
            if (!v.is_zero()) out += cx * cy * v;
        }
    }
    return out;
}

}  // namespace

Poly wick_vev(const FermionWord& word) {
    if (word.size() % 2 != 0) return {};
    UpperTriMatrix<Poly> c(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) c.at(i, j) = contract(word[i], word[j]);
    return pfaffian(c);
}

// ---------------------------------------------------------------- conjugation

ModeSum conjugate_by_H(const Mode& m, const Hamiltonian& h, unsigned bound) {
    ModeSum out;
    const unsigned steps = bound;
    auto shifted = [&](Species s, unsigned j) { return Mode{s, m.index + static_cast<int>(j)}; };

    const bool neutral = !is_charged(m.species);
    if (h.flavor != Flavor::Charged) {
        if (!neutral) throw std::invalid_argument("Hbar/Hhat conjugation of charged modes is not supported");
        const Species acts_on = h.flavor == Flavor::BarOdd ? Species::Phi : Species::PhiHat;
        if (m.species != acts_on) {
            out.add(m, Poly(1));
            return out;
        }
        const auto s = elem_schur_table(steps, TimeArgument::odd_times(h.bank));
        for (unsigned j = 0; j <= steps; ++j) out.add(shifted(m.species, j), s[j]);
        return out;
    }

    TimeArgument times = h.odd_only ? TimeArgument::odd_times(h.bank) : TimeArgument::identity(h.bank);
    if (m.species == Species::PsiPlus || m.species == Species::PsiMinus) {
        if (m.species == Species::PsiMinus) times = times.negated();
        const auto s = elem_schur_table(steps, times);
        for (unsigned j = 0; j <= steps; ++j) out.add(shifted(m.species, j), s[j]);
        return out;
    }

    // Neutral modes under the charged Hamiltonian, through phi_i = (psi+_{i+1/2} + (-1)^i psi-_{i-1/2})/sqrt2:
    // even/odd combinations of s_j(t) and s_j(t*), t*_k = (-1)^{k+1} t_k.
    TimeArgument star = times;
    star.rho_even = -star.rho_even;
    const auto s = elem_schur_table(steps, times);
    const auto s_star = elem_schur_table(steps, star);
    const GaussRat half(Rational(1, 2));
    const GaussRat half_i(Rational(0), Rational(1, 2));
    for (unsigned j = 0; j <= steps; ++j) {
        const Poly even = (s[j] + s_star[j]) * half;
        const Poly odd = (s[j] - s_star[j]) * half_i;
        if (m.species == Species::Phi) {
            out.add(shifted(Species::Phi, j), even);
            out.add(shifted(Species::PhiHat, j), -odd);
        } else {
            out.add(shifted(Species::Phi, j), odd);
            out.add(shifted(Species::PhiHat, j), even);
        }
    }
    return out;
}

ModeSum conjugate_up_to(const ModeSum& x, const Hamiltonian& h, int max_index) {
    ModeSum out;
    for (const auto& [m, c] : x.terms()) {
        if (m.index.twice() > 2 * max_index) continue;
        ModeSum image = conjugate_by_H(m, h, static_cast<unsigned>((2 * max_index - m.index.twice()) / 2));
        image *= c;
        out += image;
    }
    return out;
}

ModeSum build_v(unsigned lambda_part, const std::vector<Rational>& c, bool hatted, int bound) {
    const int low = -static_cast<int>(lambda_part);
    if (bound < static_cast<int>(lambda_part)) throw std::invalid_argument("build_v bound must be at least the part");
    const auto s = elem_schur_table(static_cast<unsigned>(bound - low), TimeArgument::constants(c));
    ModeSum v;
    for (int j = low; j <= bound; ++j)
        v.add(hatted ? Mode::phi_hat(j) : Mode::phi(j), s[static_cast<std::size_t>(j - low)]);
    return v;
}

int exact_bound(const FermionWord& word) {
    int low_twice = 0;
    for (const auto& x : word)
        if (!x.empty()) low_twice = std::min(low_twice, x.min_index().twice());
    return (-low_twice + 1) / 2;
}

Poly oracle_tau(const FermionWord& word, const std::vector<Hamiltonian>& hamiltonians) {
    int charge = 0;
    for (const auto& x : word) charge += x.charge();
    if (charge != 0) throw std::invalid_argument("word has charge " + std::to_string(charge) + ", expected 0");
    const int bound = exact_bound(word);
    FermionWord conjugated;
    conjugated.reserve(word.size());
    for (const auto& x : word) {
        ModeSum y = x;
        for (const auto& h : hamiltonians) y = conjugate_up_to(y, h, bound);
        conjugated.push_back(std::move(y));
    }
    return wick_vev(conjugated);
}

// ---------------------------------------------------------------- canonical words

FermionWord bkp_word(const TauSpec& spec) {
    spec.validate();
    const int bound = static_cast<int>(spec.lambda.max_part());
    FermionWord w;
    for (std::size_t i = 0; i < spec.lambda.length(); ++i)
        w.push_back(build_v(spec.lambda.parts()[i], spec.constants_of(i), false, bound));
    return w;
}

FermionWord kp_square_word(const TauSpec& spec) {
    FermionWord w = bkp_word(spec);
    const int bound = static_cast<int>(spec.lambda.max_part());
    for (std::size_t i = 0; i < spec.lambda.length(); ++i)
        w.push_back(build_v(spec.lambda.parts()[i], spec.constants_of(i), true, bound));
    return w;
}

FermionWord kdv_word(unsigned k) {
    FermionWord w;
    const int kk = static_cast<int>(k);
    for (int twice = -2 * kk + 1; twice <= 2 * kk - 1; twice += 4) w.emplace_back(Mode::psi_plus(twice));
    for (int twice = -2 * kk + 1; twice <= -1; twice += 2) w.emplace_back(Mode::psi_minus(twice));
    return w;
}

Poly oracle_tau_bkp(const TauSpec& spec) { return oracle_tau(bkp_word(spec), {{Flavor::BarOdd, Bank::T, true}}); }

Poly oracle_tau_kp_square(const TauSpec& spec) {
    return oracle_tau(kp_square_word(spec), {{Flavor::Charged, Bank::T, false}});
}

Poly oracle_two_bank(const TauSpec& spec) {
    return oracle_tau(kp_square_word(spec), {{Flavor::BarOdd, Bank::T, true}, {Flavor::HatOdd, Bank::Y, true}});
}

Poly oracle_kdv(unsigned k) { return oracle_tau(kdv_word(k), {{Flavor::Charged, Bank::T, true}}); }

}  // namespace bkptau::fock
