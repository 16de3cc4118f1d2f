#include "bkptau/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bkptau {

char bank_letter(Bank b) { return b == Bank::T ? 't' : 'y'; }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& f : factors) {
        if (f.second == 0) continue;
        if (f.first.index == 0) throw std::invalid_argument("time variables are indexed from 1");
        if (!factors_.empty() && factors_.back().first == f.first)
            factors_.back().second += f.second;
        else
            factors_.push_back(f);
    }
    for (const auto& [v, e] : factors_) weight_ += v.index * e;
}

Monomial Monomial::of(Var v, unsigned exponent) { return Monomial({{v, exponent}}); }

unsigned Monomial::exponent(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

bool Monomial::odd_only() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.odd(); });
}

bool Monomial::uses_bank(Bank b) const {
    return std::any_of(factors_.begin(), factors_.end(), [b](const Factor& f) { return f.first.bank == b; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.weight_ = a.weight_ + b.weight_;
    return out;
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
    if (a.weight_ != b.weight_) return a.weight_ > b.weight_;
    // Lex descending: the first variable on which the exponents differ decides,
    // the larger exponent sorting first.
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second > j->second;
    }
    return i != a.factors_.end() && j == b.factors_.end();
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) out += '*';
        out += bank_letter(v.bank);
        out += std::to_string(v.index);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const GaussRat& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::term(GaussRat c, Monomial m) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

GaussRat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat{} : it->second;
}

unsigned Poly::weighted_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.weighted_degree(); }

bool Poly::odd_only() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.odd_only(); });
}

bool Poly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

bool Poly::uses_bank(Bank b) const {
    return std::any_of(terms_.begin(), terms_.end(), [b](const auto& t) { return t.first.uses_bank(b); });
}

unsigned Poly::max_index(Bank b) const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.bank == b) best = std::max(best, v.index);
    return best;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(v);
        if (e == 0) continue;
        std::vector<Monomial::Factor> fs;
        for (const auto& f : m.factors()) {
            if (f.first == v) {
                if (e > 1) fs.emplace_back(v, e - 1);
            } else {
                fs.push_back(f);
            }
        }
        out.add_term(Monomial(std::move(fs)), c * GaussRat(static_cast<long>(e)));
    }
    return out;
}

Poly Poly::real_part() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(m, GaussRat(c.re()));
    return out;
}

Poly Poly::imag_part() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(m, GaussRat(c.im()));
    return out;
}

// ---------------------------------------------------------------- text form

std::string canonical_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            coeff = rational_string(abs(c.re()));
        } else {
            coeff = c.to_string();
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coeff;
        if (!m.is_one()) out += "*" + m.to_string();
        first = false;
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Poly parse() {
        skip_ws();
        if (at_end()) throw error("empty polynomial");
        Poly result;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            Poly t = parse_term();
            result += negative ? -t : t;
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw error("expected '+' or '-'");
            negative = peek() == '-';
            ++pos_;
        }
        return result;
    }

private:
    Poly parse_term() {
        Poly t(1);
        t *= parse_factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            t *= parse_factor();
            skip_ws();
        }
        return t;
    }

    Poly parse_factor() {
        skip_ws();
        if (at_end()) throw error("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            const auto close = s_.find(')', pos_);
            if (close == std::string_view::npos) throw error("unbalanced '('");
            GaussRat g = parse_gauss_rational(s_.substr(pos_, close - pos_ + 1));
            pos_ = close + 1;
            return Poly(g);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            return Poly(GaussRat(parse_rational(s_.substr(start, pos_ - start))));
        }
        if (c == 'i') {
            ++pos_;
            return Poly(GaussRat::i());
        }
        if (c == 't' || c == 'y') {
            ++pos_;
            const unsigned index = parse_uint();
            if (index == 0) throw error("time variables are indexed from 1");
            unsigned e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_uint();
            }
            return Poly::term(GaussRat(1), Monomial::of(Var{c == 't' ? Bank::T : Bank::Y, index}, e));
        }
        throw error(std::string("unexpected character '") + c + "'");
    }

    unsigned parse_uint() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected a number");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    std::invalid_argument error(const std::string& what) const {
        return std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_{0};
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- substitutions

Poly rename_bank(const Poly& p, Bank from, Bank to) {
    if (from == to) return p;
    return compose(p, [&](Var v) -> std::optional<Poly> {
        if (v.bank != from) return std::nullopt;
        return Poly::var(to, v.index);
    });
}

Poly swap_banks(const Poly& p) {
    return compose(p, [](Var v) -> std::optional<Poly> {
        return Poly::var(v.bank == Bank::T ? Bank::Y : Bank::T, v.index);
    });
}

TimeArgument TimeArgument::odd_times(Bank b) {
    TimeArgument a = identity(b);
    a.rho_even = 0;
    return a;
}

TimeArgument TimeArgument::constants(std::vector<Rational> values) {
    TimeArgument a;
    a.bank.reset();
    a.shift = std::move(values);
    return a;
}

TimeArgument TimeArgument::scaled(Rational rho, Bank b) {
    TimeArgument a = identity(b);
    a.rho_odd = rho;
    a.rho_even = std::move(rho);
    return a;
}

TimeArgument TimeArgument::with_bank(std::optional<Bank> b) const {
    TimeArgument a = *this;
    a.bank = b;
    return a;
}

TimeArgument TimeArgument::with_shift(std::vector<Rational> values) const {
    TimeArgument a = *this;
    a.shift = std::move(values);
    return a;
}

TimeArgument TimeArgument::negated() const {
    TimeArgument a = *this;
    a.rho_odd = -a.rho_odd;
    a.rho_even = -a.rho_even;
    for (auto& s : a.shift) s = -s;
    return a;
}

Rational TimeArgument::shift_at(unsigned k) const {
    if (k == 0 || k > shift.size()) return 0;
    return shift[k - 1];
}

Poly TimeArgument::component(unsigned k) const {
    Poly u(shift_at(k));
    if (bank && sgn(rho(k)) != 0) u += Poly::var(*bank, k) * GaussRat(rho(k));
    return u;
}

bool TimeArgument::vanishes_from(unsigned first) const {
    if (bank && (sgn(rho_odd) != 0 || sgn(rho_even) != 0)) return false;
    for (unsigned k = std::max(first, 1U); k <= shift.size(); ++k)
        if (sgn(shift[k - 1]) != 0) return false;
    return true;
}

Poly substitute(const Poly& p, const TimeArgument& arg) {
    return compose(p, [&](Var v) -> std::optional<Poly> {
        if (v.bank != Bank::T) return std::nullopt;
        return arg.component(v.index);
    });
}

Poly restrict_even_zero(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms())
        if (m.odd_only()) out.add_term(m, c);
    return out;
}

std::vector<Poly> apply_schur_diff_table(const Poly& p, unsigned max_j, const Rational& scale, Parity parity,
                                         Bank bank) {
    // Operator form of j s_j(u) = sum_k k u_k s_{j-k}(u) with k u_k = scale * d/dx_k.
    std::vector<Poly> table;
    table.reserve(max_j + 1);
    table.push_back(p);
    for (unsigned j = 1; j <= max_j; ++j) {
        Poly acc;
        for (unsigned k = 1; k <= j; ++k) {
            if (parity == Parity::Odd && k % 2 == 0) continue;
            if (table[j - k].is_zero()) continue;
            acc += table[j - k].derivative(Var{bank, k});
        }
        acc *= GaussRat(Rational(scale / j));
        table.push_back(std::move(acc));
    }
    return table;
}

Poly apply_schur_diff(const Poly& p, unsigned j, const Rational& scale, Parity parity, Bank bank) {
    return apply_schur_diff_table(p, j, scale, parity, bank)[j];
}

}  // namespace bkptau
